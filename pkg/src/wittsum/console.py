import logging
import typing

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

__all__ = ("console", "make_logger", "HIGHLIGHTED_KEYWORDS")


HIGHLIGHTED_KEYWORDS = [  # these keywords are highlighted specially
    "Degenerate",
    "NonDegenerateExact",
    "NonDegenerateHeuristic",
    "NotPolynomial",
    "Inconclusive",
    "verdict",
    "budget",
    "Reading",
    "Writing",
    "failed",
    "passed",
]

# throughout the codebase, use:
# >>> console.print() # instead of print()
# >>> with console.status()
# >>>    ...
# stderr, so that reports written to stdout stay machine readable.
console = Console(
    stderr=True,
    width=160,
    theme=Theme({
        "logging.keyword": 'bold yellow',
        "verdict.ok": 'bold green',
        "verdict.failed": 'bold red',
    })
)


def make_logger(name: str, verbosity: str = 'INFO') \
        -> typing.Tuple[logging.Logger, Console]:
    """
    Make the wittsum logger and console.

    :param name: logger name
    :param verbosity: The verbosity level of the logger.
    """

    # set the rich handler
    RichHandler.KEYWORDS = HIGHLIGHTED_KEYWORDS
    rich_handler = RichHandler(
        rich_tracebacks=True, tracebacks_show_locals=False,
        console=console, show_time=True
    )

    # finally, the logger
    # handlers are replaced, not stacked, when called twice for the same name
    logger = logging.getLogger(name)
    logger.handlers = [rich_handler]
    logger.setLevel(verbosity)
    logger.propagate = False

    return logger, console
