import click
import numpy as np

from steklame.command_handlers.sweep import SweepContext, SweepHandler
from steklame.config import MfsConfig
from steklame.geometry import Boundary
from steklame.utils.params import BoundaryFileParam


@click.command()
@click.option("--lambda", "lam", type=float, required=True, help="Lamé lambda")
@click.option("--mu", "mu_values", type=float, multiple=True, help="mu, repeatable")
@click.option(
    "--mu-range",
    type=(float, float, click.IntRange(min=1)),
    help="START STOP COUNT, evenly spaced mu grid",
)
@click.option(
    "--radius", type=float, default=1.0, show_default=True, help="disk radius"
)
@click.option(
    "--count",
    type=click.IntRange(min=1),
    default=10,
    show_default=True,
    help="number of eigenvalues per mu",
)
@click.option(
    "--boundary",
    type=BoundaryFileParam(),
    help="solve this boundary with the MFS instead of the disk formulas",
)
@click.option("-n", "--sources", type=int, default=100, show_default=True)
def sweep(
    lam: float,
    mu_values: tuple[float, ...],
    mu_range: tuple[float, float, int] | None,
    radius: float,
    count: int,
    boundary: Boundary | None,
    sources: int,
) -> None:
    """Tabulate the spectrum against mu at fixed lambda."""
    grid = list(mu_values)
    if mu_range is not None:
        start, stop, steps = mu_range
        grid.extend(np.linspace(start, stop, steps).tolist())
    if not grid:
        raise click.UsageError("Give --mu or --mu-range")

    context = SweepContext(
        lam=lam,
        mu_values=grid,
        count=count,
        radius=radius,
        boundary=boundary,
        mfs=MfsConfig(sources=sources) if boundary is not None else None,
    )
    handle = SweepHandler(context)
    handle()
