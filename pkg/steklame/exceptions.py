class SteklameException(Exception):
    """Base class for every error raised by the library."""


class ConfigurationError(SteklameException):
    """Errors caused by invalid user input (exit code 2)."""


class InvalidParameterError(ConfigurationError, ValueError):
    pass


class BoundaryNotFoundError(ConfigurationError):
    def __init__(self, path: object, *args: object) -> None:
        super().__init__(f"Boundary file not found: {path}", *args)


class SingularParametrizationError(SteklameException):
    def __init__(self, speed: float, *args: object) -> None:
        super().__init__(
            f"Degenerate boundary parametrization, speed {speed:.3e}", *args
        )


class SelfIntersectionError(ConfigurationError):
    def __init__(self, *args: object) -> None:
        super().__init__("Sampled boundary polygon is not simple", *args)


class OrientationError(SteklameException):
    def __init__(self, signed_area: float, *args: object) -> None:
        super().__init__(
            f"Boundary is negatively oriented (signed area {signed_area:.6g})", *args
        )


class NonConvexBoundaryError(ConfigurationError):
    def __init__(self, quantity: str, minimum: float, *args: object) -> None:
        self.minimum = minimum
        super().__init__(
            f"Support curve is not a convex body around the origin: "
            f"min {quantity} = {minimum:.6g}",
            *args,
        )


class InvalidOffsetError(ConfigurationError):
    def __init__(self, alpha: float, count: int, *args: object) -> None:
        super().__init__(
            f"Relative source offset {alpha:g} places {count} source point(s) "
            "inside the domain",
            *args,
        )


class SingularKernelError(SteklameException):
    def __init__(self, distance: float, *args: object) -> None:
        super().__init__(
            f"Kernel evaluated at coincident points (distance {distance:.3e})", *args
        )


class InsufficientResolutionError(SteklameException):
    def __init__(self, survivors: int, requested: int, *args: object) -> None:
        self.survivors = survivors
        self.requested = requested
        super().__init__(
            f"Only {survivors} of {requested} eigenvalues survived filtering, "
            "increase the number of sources",
            *args,
        )


class UntrustworthyPairError(SteklameException):
    def __init__(self, norm: float, *args: object) -> None:
        super().__init__(f"Eigenfunction trace norm {norm:.3e} is degenerate", *args)


class MultiplicityError(SteklameException):
    def __init__(self, value: float, gap: float, size: int, *args: object) -> None:
        self.value = value
        self.gap = gap
        self.size = size
        super().__init__(
            f"Eigenvalue {value:.10g} is not simple: cluster of {size} "
            f"(relative gap {gap:.2e})",
            *args,
        )


class InvalidBranchError(ConfigurationError, ValueError):
    pass


class InfeasibleProjectionError(SteklameException):
    def __init__(self, *args: object) -> None:
        super().__init__("Convexity projection has no feasible point", *args)
