from symstack import bwb
from symstack.management.base import SymstackCommand, parse_weight
from symstack.multigraded import GradedDimension
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Borel-Weil-Bott: cohomology of S_{lambda_S} S ⊗ S_{lambda_Q} Q on Gr(k, n+1)"
    subcommand = "bwb"

    def add_command_arguments(self, parser):
        parser.add_argument("--sub", required=True, help="lambda_S, length k, e.g. --sub=0,-1")
        parser.add_argument("--quotient", required=True, help="lambda_Q, length n+1-k")
        parser.add_argument("--n", type=int, help="Ambient P^n; defaults to k + len(lambda_Q) - 1")

    def compute(self, options):
        lambda_S = parse_weight(options["sub"])
        lambda_Q = parse_weight(options["quotient"])
        n = options.get("n")
        if n is None:
            n = len(lambda_S) + len(lambda_Q) - 1
        w = bwb.BundleWeight(lambda_S, lambda_Q)
        result = bwb.bwb_cohomology(w, n)
        inputs = {"sub": str(lambda_S), "quotient": str(lambda_Q), "n": n}
        title = "Gr(%d, %d), S_%s S ⊗ S_%s Q" % (len(lambda_S), n + 1, lambda_S, lambda_Q)
        if result is None:
            envelope = ResultEnvelope(
                self.subcommand, inputs, None, GradedDimension.zero(("l",)), {"vanishes": True}
            )
            return envelope, "%s: all cohomology vanishes" % title
        envelope = ResultEnvelope(
            self.subcommand,
            inputs,
            None,
            GradedDimension.singleton(("l",), (result.degree,), result.dimension),
            {"degree": result.degree, "weight": list(result.weight.entries), "dimension": result.dimension},
        )
        return envelope, "%s: H^%d = S_%s V, dimension %d" % (
            title,
            result.degree,
            result.weight,
            result.dimension,
        )
