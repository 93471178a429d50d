import click

from steklame import commands
from steklame.constants import DEFAULT_THREADS, THREADS_ENV_VAR
from steklame.container import Container
from steklame.utils.exceptions import handle_exceptions
from steklame.utils.logger import configure_logging
from steklame.utils.monitoring import measure


@click.group(
    commands=[
        commands.converge,
        commands.disk,
        commands.optimize,
        commands.solve,
        commands.sweep,
        commands.version,
    ]
)
@click.option("-v", "--verbose", is_flag=True, help="use verbose logging")
@click.option("-q", "--quiet", is_flag=True, help="disable logging")
@click.option(
    "--threads",
    type=click.IntRange(min=1),
    help=f"cap on worker threads, overrides {THREADS_ENV_VAR}",
)
@click.pass_obj
def cli(container: Container, verbose: bool, quiet: bool, threads: int | None) -> None:
    configure_logging(verbose=verbose, quiet=quiet)
    if threads is not None:
        container.config.threads.from_value(threads)


@measure
def main():
    container = Container()
    container.config.threads.from_env(
        THREADS_ENV_VAR,
        default=DEFAULT_THREADS,
        as_=int,
    )

    with handle_exceptions():
        cli(obj=container)


if __name__ == "__main__":
    main()
