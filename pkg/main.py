import logging
import sys

import click

from commands import cocycle, evaluate, verify
from config import LOG_LEVEL, SAMPLES, SEED, check_env
from core.errors import ConfigError

logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=getattr(logging, LOG_LEVEL.upper(), logging.WARNING),
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


@click.group()
def cli():
    """pcplab: O_n and M_k(O_n) as partial crossed products, computed exactly."""
    try:
        check_env()
    except ConfigError as e:
        logger.error(f"Bad environment setting: {e}")
        click.echo(f"error: {e}", err=True)
        sys.exit(2)


@cli.command("verify")
@click.option("--suite", type=click.Choice(verify.SUITES + ("all",)), required=True)
@click.option("--n", "n", type=int, required=True, help="Base n >= 2.")
@click.option("--k", "k", type=int, default=None, help="Slot count; selects an M_k(O_n) session.")
@click.option("--seed", type=int, default=SEED, show_default=True)
@click.option("--samples", type=int, default=SAMPLES, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
def verify_cmd(suite, n, k, seed, samples, as_json):
    """Run a relation suite; exit 0 when every relation holds, 1 otherwise."""
    sys.exit(verify.handle(suite, n, k, seed, samples, as_json))


@cli.command("eval")
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.argument("expr")
def eval_cmd(n, k, as_json, expr):
    """Print the canonical form of EXPR."""
    sys.exit(evaluate.handle(expr, n, k, as_json))


@cli.command("cocycle")
@click.option("--n", "n", type=int, required=True)
@click.option("--lambda", "lam", default="", help="Digits of lambda, comma separated.")
@click.option("--mu", default="", help="Digits of mu, comma separated.")
@click.option("--i", "i", type=int, default=None, help="Source slot.")
@click.option("--q", "q", type=int, default=None, help="Range slot.")
@click.option("--k", "k", type=int, default=None, help="Slot count for the slot check.")
def cocycle_cmd(n, lam, mu, i, q, k):
    """Print the cocycle of (lambda z, |lambda|-|mu|, mu z)."""
    sys.exit(cocycle.handle(n, lam, mu, i, q, k))


def main():
    logger.debug("pcplab starting")
    cli()


if __name__ == "__main__":
    main()
