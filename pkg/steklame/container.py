import click
from dependency_injector import containers, providers

from steklame.config import JsonRunConfigProvider
from steklame.geometry import JsonBoundaryStorage


class Container(containers.DeclarativeContainer):
    config = providers.Configuration()
    wiring_config = containers.WiringConfiguration(
        packages=[
            "steklame.command_handlers",
        ],
        modules=[
            "steklame.utils.params",
        ],
    )

    boundary_storage = providers.Singleton(JsonBoundaryStorage)

    run_config_provider = providers.Factory(JsonRunConfigProvider)

    output_buffer = providers.Singleton(click.get_text_stream, "stdout")
