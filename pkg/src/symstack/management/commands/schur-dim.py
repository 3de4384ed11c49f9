from symstack import bwb
from symstack.management.base import SymstackCommand, parse_weight
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Dimension of the GL_r representation of highest weight lambda"
    subcommand = "schur-dim"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--weight", required=True, help="Comma-separated weight, e.g. --weight=1,0,-1"
        )
        parser.add_argument("--rank", type=int, help="r; defaults to the length of the weight")

    def compute(self, options):
        weight = parse_weight(options["weight"])
        dimension = bwb.schur_dim(weight, options.get("rank"))
        envelope = ResultEnvelope(
            self.subcommand,
            {"weight": str(weight), "rank": len(weight)},
            None,
            None,
            {"dimension": dimension},
        )
        return envelope, "dim S_%s = %d" % (weight, dimension)
