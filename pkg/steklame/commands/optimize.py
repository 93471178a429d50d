from pathlib import Path

import click

from steklame.command_handlers.optimize import OptimizeContext, OptimizeHandler


@click.command()
@click.argument("config_file", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "-o",
    "--output-dir",
    type=click.Path(file_okay=False),
    required=True,
    help="directory for the run artifacts",
)
@click.option("--objective", type=click.IntRange(min=1), help="eigenvalue index")
@click.option("--lambda", "lam", type=float, help="Lamé lambda")
@click.option("--mu", type=float, help="shear modulus mu")
@click.option("--seed", type=int, help="seed of the random initial shape")
@click.option("--max-iterations", type=click.IntRange(min=0))
@click.option("--tolerance", type=float, help="relative objective change to stop at")
def optimize(
    config_file: str,
    output_dir: str,
    objective: int | None,
    lam: float | None,
    mu: float | None,
    seed: int | None,
    max_iterations: int | None,
    tolerance: float | None,
) -> None:
    """Maximize one eigenvalue over unit-area shapes."""
    overrides = {"objective": objective, "lambda": lam, "mu": mu, "seed": seed}
    optimizer_overrides = {"max_iterations": max_iterations, "tolerance": tolerance}

    context = OptimizeContext(
        config_path=Path(config_file),
        output_dir=Path(output_dir),
        overrides={k: v for k, v in overrides.items() if v is not None},
        optimizer_overrides={
            k: v for k, v in optimizer_overrides.items() if v is not None
        },
    )
    handle = OptimizeHandler(context)
    handle()
