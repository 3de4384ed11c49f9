"""Shared plumbing for the symstack management commands."""
import json
import logging
import time
from dataclasses import dataclass
from typing import Optional

from constance import config
from django.core.management.base import BaseCommand, CommandError

from symstack import geometry
from symstack.bwb import GLWeight, NonDominantWeightError
from symstack.engine import ConsistencyError
from symstack.multigraded import AxisMismatchError, DivergentSeriesError
from symstack.oracle import NonIntegralAverageError, OracleGuardError
from symstack.quiver import CartanMatrixError
from symstack.serializers import ResultEnvelope, ResultEnvelopeSerializer

USAGE_ERROR = 1
VALIDATION_ERROR = 2
VERIFY_MISMATCH = 3

JSON = "json"
TEXT = "text"

VALIDATION_ERRORS = (
    geometry.VarietyValidationError,
    geometry.MissingTableError,
    AxisMismatchError,
    DivergentSeriesError,
    OracleGuardError,
    NonIntegralAverageError,
    NonDominantWeightError,
    CartanMatrixError,
    ConsistencyError,
    ValueError,
)

logger = logging.getLogger(__name__)


def parse_weight(value: str) -> GLWeight:
    try:
        return GLWeight(tuple(int(part) for part in value.split(",")))
    except ValueError:
        raise CommandError(
            "Weight %r is not a comma-separated list of integers" % value,
            returncode=USAGE_ERROR,
        )


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input_path: Optional[str]
    preset: Optional[str]
    k: Optional[int]
    n: Optional[int]
    max_n: Optional[int]
    output_format: str

    def __post_init__(self):
        if self.n is not None and self.max_n is not None and self.max_n < self.n:
            raise CommandError(
                "--max-n %d is smaller than --n %d" % (self.max_n, self.n),
                returncode=USAGE_ERROR,
            )

    @classmethod
    def from_options(cls, subcommand, options) -> "RunConfig":
        return cls(
            subcommand=subcommand,
            input_path=options.get("input"),
            preset=options.get("preset"),
            k=options.get("k"),
            n=options.get("n"),
            max_n=options.get("max_n"),
            output_format=options.get("format", TEXT),
        )


class SymstackCommand(BaseCommand):
    """Base class: variety options, output options and exit-code mapping."""

    requires_system_checks = []
    subcommand = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        argparse_exit = parser.exit

        def exit_with_usage_code(status=0, message=None):
            argparse_exit(USAGE_ERROR if status == 2 else status, message)

        parser.exit = exit_with_usage_code
        return parser

    def add_variety_arguments(self, parser, required=True):
        group = parser.add_mutually_exclusive_group(required=required)
        group.add_argument(
            "--preset",
            choices=geometry.preset_names(),
            help="Built-in variety",
        )
        group.add_argument("--input", help="Variety JSON file")

    def add_series_arguments(self, parser, allow_single=True):
        if allow_single:
            group = parser.add_mutually_exclusive_group(required=True)
            group.add_argument("--n", type=int, help="Symmetric power")
            group.add_argument(
                "--series",
                default=False,
                action="store_true",
                help="Print the generating series through --max-n",
            )
        parser.add_argument(
            "--max-n",
            type=int,
            default=None,
            help="Series truncation. Default: DEFAULT_MAX_N",
        )

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument(
            "--format", choices=[TEXT, JSON], default=TEXT, help="Output format"
        )
        parser.add_argument("--out", help="Write the output to this file")

    def add_command_arguments(self, parser):
        pass

    def get_variety(self, options) -> geometry.VarietyData:
        if options.get("input"):
            return geometry.load_variety(options["input"])
        variety = geometry.preset(options["preset"])
        logger.info("Loaded preset %s", variety.name)
        return variety

    def get_max_n(self, options) -> int:
        max_n = options.get("max_n")
        if max_n is None:
            max_n = max(config.DEFAULT_MAX_N, options.get("n") or 0)
        if max_n < 0:
            raise CommandError("--max-n must be non-negative", returncode=USAGE_ERROR)
        return max_n

    def variety_inputs(self, options):
        if options.get("input"):
            return {"input": options["input"]}
        return {"preset": options["preset"]}

    def emit(self, options, envelope: ResultEnvelope, text: str):
        if options["format"] == JSON:
            output = json.dumps(ResultEnvelopeSerializer(envelope).data, indent=2)
        else:
            output = text
        if options.get("out"):
            with open(options["out"], "w") as f:
                f.write(output + "\n")
            logger.info("Wrote %s output to %s", options["format"], options["out"])
        else:
            self.stdout.write(output)

    def execute(self, *args, **options):
        self.run_config = RunConfig.from_options(self.subcommand, options)
        start = time.time()
        try:
            result = super().execute(*args, **options)
        except CommandError:
            raise
        except VALIDATION_ERRORS as ex:
            raise CommandError(str(ex), returncode=VALIDATION_ERROR) from ex
        logger.debug("%s finished in %0.3f seconds", self.subcommand, time.time() - start)
        return result

    def compute(self, options):
        raise NotImplementedError

    def handle(self, *args, **options):
        envelope, text = self.compute(options)
        self.emit(options, envelope, text)
