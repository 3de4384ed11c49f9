import logging

from symstack import engine
from symstack.management.base import SymstackCommand
from symstack.report import text
from symstack.serializers import ResultEnvelope

logger = logging.getLogger(__name__)


class Command(SymstackCommand):
    help = "Hochschild-Serre cohomology HS_k of the symmetric quotient stack [Sym^n X]"
    subcommand = "hs"

    def add_command_arguments(self, parser):
        self.add_variety_arguments(parser)
        parser.add_argument(
            "--k", type=int, required=True, help="Power of the Serre functor (0: HH^*, 1: HH_*)"
        )
        self.add_series_arguments(parser)

    def compute(self, options):
        variety = self.get_variety(options)
        k = options["k"]
        inputs = {**self.variety_inputs(options), "k": k}
        if options["series"]:
            max_n = self.get_max_n(options)
            series = engine.hs_series(variety, k, max_n)
            lines = ["HS_%d of [Sym^n %s], graded by t^j:" % (k, variety.name)]
            for n in range(max_n + 1):
                lines.append("n=%d: %s" % (n, text.format_polynomial(series.coefficient(n))))
            lines.append("by partition of %d:" % max_n)
            lines.append(text.format_summands(engine.hs_sym(variety, k, max_n).summands))
            envelope = ResultEnvelope(self.subcommand, inputs, max_n, series.dims)
            return envelope, "\n".join(lines)

        n = options["n"]
        result = engine.hs_sym(variety, k, n)
        lines = [
            "HS_%d([Sym^%d %s]) = %s" % (k, n, variety.name, text.format_polynomial(result.dims)),
            "by partition:",
            text.format_summands(result.summands),
        ]
        envelope = ResultEnvelope(self.subcommand, {**inputs, "n": n}, None, result.dims)
        return envelope, "\n".join(lines)
