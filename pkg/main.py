import sys
from collections.abc import Callable, Sequence

from dotenv import load_dotenv

from immersion_census.census.derive_counts import MissingProfileError
from immersion_census.census.enumerate_classes import OutOfEnvelopeError
from immersion_census.census.involutions import UnavailableInvolutionError
from immersion_census.cli.cmd_count import cmd_count
from immersion_census.cli.cmd_export_diagrams import cmd_export_diagrams
from immersion_census.cli.cmd_list import cmd_list
from immersion_census.cli.cmd_verify import cmd_verify
from immersion_census.cli.parser import build_parser
from immersion_census.cli.run_config import RunConfig, UsageError
from immersion_census.utils.custom_logger import CustomLogger
from immersion_census.utils.settings import get_settings

logger = CustomLogger.get_logger()

COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "count": cmd_count,
    "list": cmd_list,
    "verify": cmd_verify,
    "export-diagrams": cmd_export_diagrams,
}

EXIT_USAGE = 2

# raised for requests the census cannot serve as asked
USAGE_ERRORS = (UsageError, OutOfEnvelopeError, UnavailableInvolutionError, MissingProfileError)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, load the environment and dispatch to one subcommand.

    Args:
        argv (Sequence[str] | None): Arguments without the program name; defaults
            to ``sys.argv[1:]``.

    Returns:
        int: 0 on success, 1 on a failed verification, 2 on a usage error.

    """
    args = build_parser().parse_args(argv)
    load_dotenv()
    if args.profile:
        load_dotenv(f".env.{args.profile}", override=True)
    CustomLogger.configure(args.log_level or get_settings().log_level)

    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.subcommand](cfg)
    except USAGE_ERRORS as e:
        logger.error(str(e))
        return EXIT_USAGE
    except Exception:
        logger.exception(f"Unexpected failure in {args.subcommand}")
        raise


if __name__ == "__main__":
    sys.exit(run())
