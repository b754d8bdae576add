import logging

import click

from config import SessionConfig
from core.errors import PcplabError
from utils.parser import parse_expr
from utils.serialize import dumps, to_json, to_text

logger = logging.getLogger(__name__)


def handle(expr: str, n: int, k: int | None, as_json: bool) -> int:
    """Parse expr in O_n (or M_k(O_n) when k is given) and print its canonical form."""
    try:
        cfg = SessionConfig(n, k or 1, k is not None)
        element = parse_expr(expr, cfg)
    except PcplabError as e:
        logger.error(f"Cannot evaluate '{expr}': {e}")
        click.echo(f"error: {e}", err=True)
        return 2

    logger.info(f"Evaluated '{expr}' to {len(element.terms)} terms")
    click.echo(dumps(to_json(element)) if as_json else to_text(element))
    return 0
