from symstack import quiver
from symstack.management.base import SymstackCommand
from symstack.multigraded import GradedDimension
from symstack.serializers import ResultEnvelope


class Command(SymstackCommand):
    help = "Coxeter matrix and Hochschild Euler characteristic of a directed algebra"
    subcommand = "quiver"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--cartan",
            help="JSON array of arrays. Default: the tilting algebra of Sym^2 P^1",
        )

    def compute(self, options):
        if options.get("cartan"):
            cartan = quiver.load_cartan(options["cartan"])
            inputs = {"cartan": options["cartan"]}
        else:
            cartan = quiver.SYM2_P1_CARTAN
            inputs = {"cartan": "sym2-p1"}
        coxeter = quiver.coxeter(cartan)
        chi = quiver.hh_euler_characteristic(cartan)
        details = {
            "coxeter": [[int(entry) for entry in row] for row in coxeter.tolist()],
            "trace": int(coxeter.trace()),
            "euler_characteristic": chi,
        }
        lines = ["Coxeter matrix:"]
        lines.extend("  " + " ".join("%3d" % entry for entry in row) for row in details["coxeter"])
        lines.append("tr C = %d, Σ (-1)^i hh^i = %d" % (details["trace"], chi))
        result = None
        if not options.get("cartan"):
            series = quiver.sym2_p1_series()
            result = GradedDimension(("j",), {(j,): dim for j, dim in series.items()})
            lines.append("HH^*: " + ", ".join("hh^%d = %d" % item for item in sorted(series.items())))
        return ResultEnvelope("quiver", inputs, None, result, details), "\n".join(lines)
