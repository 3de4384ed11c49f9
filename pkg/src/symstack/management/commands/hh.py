import logging

from django.core.management.base import CommandError

from symstack import engine, geometry
from symstack.management.base import USAGE_ERROR, SymstackCommand
from symstack.report import text
from symstack.serializers import ResultEnvelope

COLLAPSED = "collapsed"
BIGRADED = "bigraded"
ORBIFOLD = "orbifold"
logger = logging.getLogger(__name__)


class Command(SymstackCommand):
    help = "Hochschild homology of [Sym^n X] with coefficients in a family F^<i>"
    subcommand = "hh"

    def add_command_arguments(self, parser):
        self.add_variety_arguments(parser)
        family = parser.add_mutually_exclusive_group(required=True)
        family.add_argument("--line-bundle", help="F^<i> = L^i for this line bundle label")
        family.add_argument("--k", type=int, help="F^<i> from the k-th power of the Serre functor")
        self.add_series_arguments(parser)
        view = parser.add_mutually_exclusive_group()
        view.add_argument(
            "--bigraded",
            dest="view",
            action="store_const",
            const=BIGRADED,
            help="Print the (p,q)-graded inertia table instead of the collapsed grading",
        )
        view.add_argument(
            "--orbifold",
            dest="view",
            action="store_const",
            const=ORBIFOLD,
            help="Print the age-shifted (x,y)-graded table",
        )

    def get_family(self, variety, options, max_i):
        if options.get("line_bundle"):
            return geometry.line_bundle_family(variety, options["line_bundle"], max_i)
        return geometry.serre_family(variety, options["k"], max_i)

    def view_of(self, family, n, view):
        if view == BIGRADED:
            return engine.inertia_hodge_sym(family, n).dims
        if view == ORBIFOLD:
            return engine.orbifold_hodge_age(family, n).dims
        return engine.hh_with_coefficients_sym(family, n).dims

    def render(self, dims, view, title):
        if view in (BIGRADED, ORBIFOLD):
            return text.format_table(dims, title)
        return "%s %s" % (title, text.format_polynomial(dims))

    def compute(self, options):
        variety = self.get_variety(options)
        view = options.get("view") or COLLAPSED
        inputs = self.variety_inputs(options)
        if options.get("line_bundle"):
            inputs["line_bundle"] = options["line_bundle"]
        else:
            inputs["k"] = options["k"]
        inputs["view"] = view

        if not options["series"]:
            n = options["n"]
            if n < 0:
                raise CommandError("--n must be non-negative", returncode=USAGE_ERROR)
            family = self.get_family(variety, options, max(n, 1))
            dims = self.view_of(family, n, view)
            envelope = ResultEnvelope(self.subcommand, {**inputs, "n": n}, None, dims)
            return envelope, self.render(dims, view, "n=%d:" % n)

        max_n = self.get_max_n(options)
        family = self.get_family(variety, options, max(max_n, 1))
        if view == COLLAPSED:
            series = engine.hh_series_product(variety, family, max_n)
            lines = [
                "n=%d: %s" % (n, text.format_polynomial(series.coefficient(n)))
                for n in range(max_n + 1)
            ]
            return ResultEnvelope(self.subcommand, inputs, max_n, series.dims), "\n".join(lines)

        lines = []
        stacked = None
        for n in range(max_n + 1):
            dims = self.view_of(family, n, view)
            lines.append(self.render(dims, view, "n=%d:" % n))
            layer = dims.with_axis("t", n)
            stacked = layer if stacked is None else stacked + layer
        return ResultEnvelope(self.subcommand, inputs, max_n, stacked), "\n\n".join(lines)
