from pathlib import Path

import click

from steklame.command_handlers.solve import SolveContext, SolveHandler
from steklame.config import MfsConfig
from steklame.constants import DEFAULT_ALPHA, DEFAULT_RESIDUAL_TOL
from steklame.elastic_kernel import LameParameters
from steklame.geometry import Boundary
from steklame.utils.params import BoundaryFileParam


@click.command()
@click.argument("boundary", type=BoundaryFileParam())
@click.option("--lambda", "lam", type=float, required=True, help="Lamé lambda")
@click.option("--mu", type=float, required=True, help="shear modulus mu")
@click.option(
    "-n", "--sources", type=int, default=100, show_default=True, help="source count N"
)
@click.option("--collocation", type=int, help="collocation count M [default: 2N]")
@click.option(
    "--alpha",
    type=float,
    default=DEFAULT_ALPHA,
    show_default=True,
    help="source offset as a fraction of the boundary length",
)
@click.option(
    "-k",
    "--count",
    type=click.IntRange(min=1),
    default=10,
    show_default=True,
    help="number of eigenvalues",
)
@click.option(
    "--residual-tol", type=float, default=DEFAULT_RESIDUAL_TOL, show_default=True
)
@click.option("--square", is_flag=True, help="solve the square M = N pencil")
@click.option(
    "--grid-dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="directory for eigenfunction grid CSVs",
)
@click.option(
    "--grid-index",
    "grid_indices",
    type=int,
    multiple=True,
    help="eigenvalue index to sample on a grid, repeatable",
)
@click.option("--grid-resolution", type=click.IntRange(min=2), default=64)
def solve(
    boundary: Boundary,
    lam: float,
    mu: float,
    sources: int,
    collocation: int | None,
    alpha: float,
    count: int,
    residual_tol: float,
    square: bool,
    grid_dir: Path | None,
    grid_indices: tuple[int, ...],
    grid_resolution: int,
) -> None:
    """Solve the spectrum of a boundary file with certified error bounds."""
    mfs = MfsConfig(
        sources=sources,
        collocation=collocation,
        alpha=alpha,
        residual_tol=residual_tol,
        square=square,
    )
    context = SolveContext(
        boundary=boundary,
        params=LameParameters(lam=lam, mu=mu),
        mfs=mfs,
        count=count,
        grid_dir=grid_dir,
        grid_indices=list(grid_indices) or ([1] if grid_dir else []),
        grid_resolution=grid_resolution,
    )
    handle = SolveHandler(context)
    handle()
