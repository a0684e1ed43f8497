"""CLI module - click group, subcommands and exit-code mapping"""
import logging

import click

from config import TOOL_NAME, TOOL_VERSION

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2


@click.group(name='transport')
@click.option('--verbose', is_flag=True, help="Log at DEBUG level")
@click.version_option(TOOL_VERSION, prog_name=TOOL_NAME)
def app(verbose: bool):
    """Coherent versus dephasing-assisted transport through a four-site network"""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


# Import command modules to register them with the group
from . import commands

from .manifest import (
    ManifestError,
    RunManifest,
    MANIFEST_SCHEMA,
    parse_manifest_text,
    load_manifest,
    resolve_manifest,
)

from .output import read_csv_columns, verify_trajectory_csv

from dynamics import InvariantBreach


def run(argv: list[str] | None = None) -> int:
    """Run the CLI and map failures to exit codes

    Returns:
        0 on success, 1 for usage/parse errors, 2 for an invariant breach
    """
    try:
        result = app.main(args=argv, prog_name='transport', standalone_mode=False)
    except InvariantBreach as e:
        logger.error(f"❌ Invariant breach: {e}")
        click.echo(f"Invariant breach: {e}", err=True)
        return EXIT_INVARIANT
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except ValueError as e:
        # ManifestError and domain validation errors
        logger.error(f"❌ {e}")
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


logger.debug("cli module loaded")
