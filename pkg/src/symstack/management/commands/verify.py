import logging

from constance import config
from django.core.management.base import CommandError

from symstack.management.base import VERIFY_MISMATCH, SymstackCommand
from symstack.report import text
from symstack.serializers import ResultEnvelope
from symstack.verify.base import SuiteManager

logger = logging.getLogger(__name__)


class Command(SymstackCommand):
    help = "Run verification suites; exit code 3 on the first disagreement"
    subcommand = "verify"

    def add_command_arguments(self, parser):
        parser.add_argument("suite", choices=SuiteManager.suite_names(), help="Suite to run")
        parser.add_argument(
            "--max-n", type=int, default=None, help="Largest n checked. Default: VERIFY_MAX_N"
        )

    def compute(self, options):
        max_n = options.get("max_n")
        if max_n is None:
            max_n = config.VERIFY_MAX_N
        reports = SuiteManager(options["suite"]).run(max_n)
        details = {
            report.name: {
                "checks": len(report.checks),
                "passed": report.passed,
            }
            for report in reports
        }
        envelope = ResultEnvelope(
            self.subcommand, {"suite": options["suite"]}, max_n, None, details
        )
        return envelope, "\n".join(text.format_suite(report) for report in reports), reports

    def handle(self, *args, **options):
        envelope, output, reports = self.compute(options)
        self.emit(options, envelope, output)
        for report in reports:
            failure = report.first_failure
            if failure is not None:
                raise CommandError(
                    "Suite %s failed: %s"
                    % (report.name, text.format_check(failure).strip()),
                    returncode=VERIFY_MISMATCH,
                )
