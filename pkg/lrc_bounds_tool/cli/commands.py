"""
Shared plumbing of the management commands: the ``--json`` flag, the log
level taken from ``--verbosity``, flag and document validation through the
serializers and the mapping of errors to exit codes.

Exit codes: 0 when everything passed, 1 when a verification failed, 2 for
invalid parameters, unreadable documents and exceeded search guards.
"""

import logging

from pathlib import Path
from typing import Any

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError

from bounds.formulas import SlackUndefined
from linearcode.rest.serializers import LinearCodeSerializer
from locality.params import LrcParams
from locality.rest.serializers import LrcParamsSerializer
from utils.documents import read_document, render_document
from utils.exceptions import SearchLimitExceeded

logger = logging.getLogger(__name__)

APP_LOGGERS = ["gf", "matgf", "linearcode", "locality", "bounds", "construct", "cli"]
VERBOSITY_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}

USAGE_ERROR = 2
VERIFICATION_FAILED = 1


def flatten_errors(errors: Any, prefix: str = "") -> list[str]:
    """
    The messages of a serializer's ``errors``, prefixed by the field they
    belong to.
    """
    if isinstance(errors, dict):
        messages = []
        for key, value in errors.items():
            label = "" if key == "non_field_errors" else f"{prefix}{key}: "
            messages.extend(flatten_errors(value, label))
        return messages
    if isinstance(errors, (list, tuple)):
        return [message for error in errors for message in flatten_errors(error, prefix)]
    return [f"{prefix}{errors}"]


def yes_no(value: bool) -> str:
    return "yes" if value else "no"


class LrcCommand(BaseCommand):
    """
    Base class of the commands. Subclasses implement ``run``, which returns
    the text to print; errors raised there are turned into ``CommandError``
    with the exit code of their kind.
    """

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "--json", action="store_true", help="Print the result as a JSON document."
        )

    def add_params_arguments(self, parser, required: bool = True):
        parser.add_argument("--n", type=int, required=required, help="The length of the code.")
        parser.add_argument("--k", type=int, required=required, help="The dimension.")
        self.add_locality_arguments(parser, required)

    def add_locality_arguments(self, parser, required: bool = True):
        parser.add_argument("--r", type=int, required=required, help="The locality.")
        parser.add_argument("--delta", type=int, required=required, help="The local distance.")

    def handle(self, *args, **options):
        previous = self.configure_logging(options["verbosity"])
        try:
            output = self.run(**options)
        except (ValidationError, SlackUndefined, SearchLimitExceeded) as error:
            messages = error.messages if isinstance(error, ValidationError) else [str(error)]
            logger.debug("%s failed: %s", self.__module__, messages)
            raise CommandError("\n".join(messages), returncode=USAGE_ERROR)
        finally:
            for name, level in previous.items():
                logging.getLogger(name).setLevel(level)
        if output:
            self.stdout.write(output)

    def configure_logging(self, verbosity: int) -> dict[str, int]:
        """
        Sets the level of the app loggers, returning the previous levels.
        """
        level = VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)
        previous = {}
        for name in APP_LOGGERS:
            app_logger = logging.getLogger(name)
            previous[name] = app_logger.level
            app_logger.setLevel(level)
        return previous

    def run(self, **options) -> str:
        raise NotImplementedError()

    def render(self, options: dict, data: Any, text: str) -> str:
        return render_document(data) if options["json"] else text

    def validated(self, serializer_class, data: dict, **kwargs) -> dict:
        """
        Runs ``serializer_class`` on ``data``, exiting with code 2 on invalid
        input.

        Returns
        -------
        dict
            The validated data.
        """
        serializer = serializer_class(data=data, **kwargs)
        if not serializer.is_valid():
            raise CommandError(
                "\n".join(flatten_errors(serializer.errors)), returncode=USAGE_ERROR
            )
        return serializer.validated_data

    def params_from(self, options: dict) -> LrcParams:
        data = {key: options[key] for key in ("n", "k", "r", "delta")}
        return self.validated(LrcParamsSerializer, data)["params"]

    def read_code_document(self, path: str) -> dict:
        """
        Reads and validates the code document at ``path``.

        Returns
        -------
        dict
            The validated document, the code under ``code``.
        """
        if not Path(path).is_file():
            raise CommandError(f"No such code file: {path}", returncode=USAGE_ERROR)
        try:
            data = read_document(path)
        except ParseError as error:
            raise CommandError(f"{path} isn't a JSON document: {error}", returncode=USAGE_ERROR)
        return self.validated(LinearCodeSerializer, data)

    def fail(self, message: str):
        raise CommandError(message, returncode=VERIFICATION_FAILED)



def format_report(report) -> str:
    """
    The human readable table of a ``BoundReport``.
    """
    params = report.params
    lines = [
        f"Parameters: {params}",
        f"Decomposition: n = {params.w}({params.block_size}) + {params.m}, "
        f"k = {params.u}({params.r}) + {params.v}",
    ]
    if report.regime is None:
        lines.append("Regime: none, k <= r")
    else:
        regime = report.regime
        alias = f" [{regime.alias}]" if regime.alias else ""
        lines.append(f"Regime: {regime.label.value}{alias} ({regime.label.label})")
        lines.extend(
            f"  {condition}: {yes_no(holds)}" for condition, holds in report.regime.chain
        )
    values = [
        ("singleton", report.singleton),
        ("generalized", report.generalized),
        ("disjoint", report.disjoint),
        ("large-remainder", report.large_remainder),
        ("small-remainder", report.small_remainder),
        ("improved", report.improved),
        ("dmax", report.dmax),
    ]
    lines.append("Bounds:")
    lines.extend(
        f"  {name}: {'n/a' if value is None else value}" for name, value in values
    )
    lines.append(f"Singleton bound unachievable: {yes_no(report.singleton_unachievable)}")
    if report.citations:
        lines.append(f"Citations: {'; '.join(report.citations)}")
    lines.extend(f"Open question: {question}" for question in report.open_questions)
    return "\n".join(lines)
