from symstack import bwb
from symstack.management.base import SymstackCommand
from symstack.multigraded import GradedDimension
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Bott's formula: h^q(P^n, Ω^p(j))"
    subcommand = "bott"

    def add_command_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True)
        parser.add_argument("--j", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)

    def compute(self, options):
        p, j, n = options["p"], options["j"], options["n"]
        cohomology = bwb.bott(p, j, n)
        dims = GradedDimension(("q",), {(q,): dim for q, dim in cohomology.items()})
        envelope = ResultEnvelope(self.subcommand, {"p": p, "j": j, "n": n}, None, dims)
        if not cohomology:
            return envelope, "H^*(P^%d, Ω^%d(%d)) = 0" % (n, p, j)
        return envelope, "\n".join(
            "h^%d(P^%d, Ω^%d(%d)) = %d" % (q, n, p, j, dim) for q, dim in sorted(cohomology.items())
        )
