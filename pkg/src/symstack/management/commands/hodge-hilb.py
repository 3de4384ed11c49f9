from symstack import engine
from symstack.management.base import SymstackCommand
from symstack.report import text
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Twisted Hodge series of Hilb^n S: the corrected product formula through t^N"
    subcommand = "hodge-hilb"

    def add_command_arguments(self, parser):
        self.add_variety_arguments(parser)
        parser.add_argument("--line-bundle", default="O", help="Line bundle label. Default: O")
        self.add_series_arguments(parser, allow_single=False)
        parser.add_argument(
            "--total-degree",
            default=False,
            action="store_true",
            help="Print the x = y specialization instead",
        )

    def compute(self, options):
        variety = self.get_variety(options)
        label = options["line_bundle"]
        max_n = self.get_max_n(options)
        inputs = {**self.variety_inputs(options), "line_bundle": label}
        if options["total_degree"]:
            series = engine.total_degree_rhs(variety, label, max_n)
            inputs["total_degree"] = True
        else:
            series = engine.corrected_conjecture_rhs(variety, label, max_n)
        lines = []
        for n in range(max_n + 1):
            lines.append(
                "t^%d: %s" % (n, text.format_polynomial(series.coefficient(n), series.dims.axes[:-1]))
            )
        return ResultEnvelope(self.subcommand, inputs, max_n, series.dims), "\n".join(lines)
