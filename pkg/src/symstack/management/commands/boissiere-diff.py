from symstack import engine
from symstack.management.base import SymstackCommand
from symstack.multigraded import GradedDimension
from symstack.report import text
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Monomials where the original and the corrected product formulas disagree"
    subcommand = "boissiere-diff"

    def add_command_arguments(self, parser):
        self.add_variety_arguments(parser)
        parser.add_argument("--line-bundle", required=True, help="Line bundle label")
        self.add_series_arguments(parser, allow_single=False)

    def compute(self, options):
        variety = self.get_variety(options)
        label = options["line_bundle"]
        max_n = self.get_max_n(options)
        mismatches = engine.counterexample_diff(variety, label, max_n)
        axes = engine.TRIVARIATE_AXES
        lines = ["%s, L=%s: corrected vs original through t^%d" % (variety.name, label, max_n)]
        if not mismatches:
            lines.append("  no differences")
        for mismatch in mismatches:
            lines.append(
                "  " + text.format_mismatch(axes, mismatch, labels=("corrected", "original"))
            )
        details = {
            "differences": [
                {
                    "monomial": ",".join(str(d) for d in m.degree),
                    "corrected": m.expected,
                    "original": m.actual,
                }
                for m in mismatches
            ]
        }
        corrected = GradedDimension(axes, {m.degree: m.expected for m in mismatches})
        envelope = ResultEnvelope(
            self.subcommand,
            {**self.variety_inputs(options), "line_bundle": label},
            max_n,
            corrected,
            details,
        )
        return envelope, "\n".join(lines)
