import logging
from typing import List, Optional

import click
import typer

from pruneclust.cli import experiments, selection, trees
from pruneclust.config import settings

app = typer.Typer(
    name=settings.PROJECT_NAME,
    help="Dendrogram pruning: horizontal cut, weakest-link cost-complexity pruning and the optimal k-leaf cut",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
):
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


# Register commands
app.command("tree")(trees.tree)
app.command("prune")(trees.prune)
app.command("sequence")(trees.sequence)
app.command("gap")(selection.gap)
app.command("simulate")(experiments.simulate)
app.command("compare")(experiments.compare)
app.command("classify")(experiments.classify)


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run one command in-process and return its exit code (0 ok, 1 data error, 2 usage error)."""
    try:
        result = app(args=argv, prog_name=settings.PROJECT_NAME, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    raise SystemExit(run_cli())
