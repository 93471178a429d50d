import click

from steklame.command_handlers.converge import ConvergeContext, ConvergeHandler
from steklame.config import MfsConfig
from steklame.constants import CONVERGENCE_RESIDUAL_TOL, DEFAULT_ALPHA
from steklame.elastic_kernel import LameParameters
from steklame.geometry import Boundary
from steklame.utils.params import BoundaryFileParam


@click.command()
@click.argument("boundary", type=BoundaryFileParam())
@click.option("--lambda", "lam", type=float, required=True, help="Lamé lambda")
@click.option("--mu", type=float, required=True, help="shear modulus mu")
@click.option(
    "-n",
    "--sources",
    type=int,
    multiple=True,
    required=True,
    help="source count N, repeatable",
)
@click.option(
    "-i",
    "--index",
    "indices",
    type=int,
    multiple=True,
    default=(1,),
    show_default=True,
    help="eigenvalue index, repeatable",
)
@click.option(
    "--alpha",
    type=float,
    default=DEFAULT_ALPHA,
    show_default=True,
    help="source offset as a fraction of the boundary length",
)
@click.option(
    "--residual-tol",
    type=float,
    default=CONVERGENCE_RESIDUAL_TOL,
    show_default=True,
    help="certification threshold",
)
def converge(
    boundary: Boundary,
    lam: float,
    mu: float,
    sources: tuple[int, ...],
    indices: tuple[int, ...],
    alpha: float,
    residual_tol: float,
) -> None:
    """Tabulate eigenvalue errors against the number of sources."""
    context = ConvergeContext(
        boundary=boundary,
        params=LameParameters(lam=lam, mu=mu),
        sources=list(sources),
        indices=list(indices),
        mfs=MfsConfig(
            sources=min(sources), alpha=alpha, residual_tol=residual_tol
        ),
    )
    handle = ConvergeHandler(context)
    handle()
