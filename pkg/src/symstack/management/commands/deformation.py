from dataclasses import asdict

from symstack import engine
from symstack.management.base import SymstackCommand
from symstack.multigraded import GradedDimension
from symstack.report import text
from symstack.serializers import ResultEnvelope

LABELS = {
    "h0_tangent": "h^0(Hilb^n, T)",
    "h1_tangent": "h^1(Hilb^n, T)",
    "h1_structure_sheaf": "h^1(Hilb^n, O)",
    "h2_structure_sheaf": "h^2(Hilb^n, O)",
    "h0_bivectors": "h^0(Hilb^n, ∧^2 T)",
    "h0_trivectors": "h^0(Hilb^n, ∧^3 T)",
    "hh1": "HH^1",
    "hh2": "HH^2",
}


class Command(SymstackCommand):
    help = "Deformation-theoretic numbers of Hilb^n S read off the surface S"
    subcommand = "deformation"

    def add_command_arguments(self, parser):
        self.add_variety_arguments(parser)
        parser.add_argument("--n", type=int, required=True, help="Number of points, at least 2")

    def compute(self, options):
        variety = self.get_variety(options)
        n = options["n"]
        summary = engine.deformation_summary(variety, n)
        record = asdict(summary)
        lines = ["%s, n=%d:" % (variety.name, n)]
        lines.extend("  %-22s %d" % (LABELS[key], record[key]) for key in LABELS)
        polyvectors = engine.polyvector_fields(variety, n)
        lines.append(
            "  H^0(∧^(2n-r) T) by r: %s" % text.format_polynomial(polyvectors, ("r",))
        )
        envelope = ResultEnvelope(
            self.subcommand,
            {**self.variety_inputs(options), "n": n},
            None,
            GradedDimension(("j",), {(1,): summary.hh1, (2,): summary.hh2}),
            record,
        )
        return envelope, "\n".join(lines)
