import logging.config

# per-evaluation solver chatter stays below the run-level messages
SUBSYSTEM_LEVELS = {
    "steklame.geometry": "WARNING",
    "steklame.mfs": "WARNING",
    "steklame.shape_opt": "INFO",
}


def logging_config(*, verbose: bool, quiet: bool) -> dict:
    if verbose:
        log_level = "DEBUG"
    elif quiet:
        log_level = "CRITICAL"
    else:
        log_level = "INFO"

    loggers = {
        "steklame": {
            "handlers": ["console"],
            "level": log_level,
            "propagate": False,
        },
        # numpy and scipy RuntimeWarnings from ill-conditioned solves
        "py.warnings": {
            "handlers": ["console"],
            "level": "DEBUG" if verbose else "ERROR",
            "propagate": False,
        },
    }
    for name, level in SUBSYSTEM_LEVELS.items():
        loggers[name] = {"level": log_level if verbose or quiet else level}

    return {
        "version": 1,
        "disable_existing_loggers": True,
        "formatters": {
            "verbose": {
                "format": "%(asctime)s [%(levelname)s] - %(name)s - %(message)s",
            },
            "simple": {
                "format": "%(message)s",
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": log_level,
                "formatter": "verbose" if verbose else "simple",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": loggers,
    }


def configure_logging(*, verbose: bool, quiet: bool) -> None:
    logging.captureWarnings(True)
    logging.config.dictConfig(logging_config(verbose=verbose, quiet=quiet))
