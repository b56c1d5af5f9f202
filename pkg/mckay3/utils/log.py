import logging
from rich.logging import RichHandler
from mckay3.utils.errors import stderr


def setup_logging(verbose: bool = False) -> None:
    """Route the package loggers to stderr through rich."""
    logger = logging.getLogger("mckay3")
    logger.handlers.clear()
    handler = RichHandler(console=stderr, show_path=False, show_time=False)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False
