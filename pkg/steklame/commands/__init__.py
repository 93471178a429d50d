from .converge import converge  # noqa: F401
from .disk import disk  # noqa: F401
from .optimize import optimize  # noqa: F401
from .solve import solve  # noqa: F401
from .sweep import sweep  # noqa: F401
from .version import version  # noqa: F401
