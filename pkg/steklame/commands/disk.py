import click

from steklame.command_handlers.disk import DiskContext, DiskHandler
from steklame.elastic_kernel import LameParameters


@click.command()
@click.option(
    "--radius", type=float, default=1.0, show_default=True, help="disk radius"
)
@click.option("--lambda", "lam", type=float, required=True, help="Lamé lambda")
@click.option("--mu", type=float, required=True, help="shear modulus mu")
@click.option(
    "--count",
    type=click.IntRange(min=1),
    default=10,
    show_default=True,
    help="number of positive eigenvalues",
)
def disk(radius: float, lam: float, mu: float, count: int) -> None:
    """Print the analytic spectrum of a disk."""
    context = DiskContext(
        radius=radius, params=LameParameters(lam=lam, mu=mu), count=count
    )
    handle = DiskHandler(context)
    handle()
