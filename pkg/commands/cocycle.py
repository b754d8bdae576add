import logging

import click

from core.errors import PcplabError
from core.nadic import Word, check_base
from dynamics.groupoid import GroupoidElement, YGroupoidElement, cocycle, y_cocycle

logger = logging.getLogger(__name__)


def handle(n: int, lam: str, mu: str, i: int | None, q: int | None, k: int | None) -> int:
    """Print c(lambda z, |lambda|-|mu|, mu z) as (r,k), or the H-valued (r,j,p) when slots are given."""
    try:
        check_base(n)
        gamma = GroupoidElement(Word.parse(lam, n), Word.parse(mu, n))
        if i is None and q is None:
            click.echo(cocycle(gamma).to_text())
            return 0
        if i is None or q is None:
            raise click.UsageError("--i and --q must be given together")
        y_gamma = YGroupoidElement(gamma, i, q)
        y_gamma.check_slots(k if k is not None else max(i, q) + 1)
        click.echo(y_cocycle(y_gamma).to_text())
        return 0
    except PcplabError as e:
        logger.error(f"Cannot compute cocycle: {e}")
        click.echo(f"error: {e}", err=True)
        return 2
