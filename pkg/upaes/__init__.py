from .errors import *
from .rng import *
from .core import *
from .benchmarks import *
from .mutation import *
from .hypervolume import *
from .archivers import *
from .schema import *
from .records import *
from .writers import *
from .monitoring import *
from .pool import *
from .results import *
from .paes import *
from .oracle import *
from .config import *
from .harness import *
from .verify import *

module_version = "1.0.0"
module_name = "upaes"
module_description = "The `upaes` package runs PAES-25 on pseudo-Boolean benchmarks and checks its runtime and archive behaviour."

def check_module_version(version_expecting: str, exact: bool = True) -> bool:
    """
    Check the installed version against the one a caller was written for.

    :param version_expecting: Version string such as "1.0.0"
    :param exact: If False, only major and minor have to match, so run tables
        written by any patch release are accepted
    :return: True if the versions are compatible
    """
    if exact:
        return module_version == version_expecting
    return module_version.split(".")[:2] == version_expecting.split(".")[:2]

def get_module_info() -> dict:
    """
    Name, version and description of the package, with the benchmark,
    archiver and check suite names it accepts.
    """
    return {
        "name": module_name,
        "version": module_version,
        "description": module_description,
        "benchmarks": [kind.value for kind in BenchmarkKind],
        "archivers": [kind.value for kind in ArchiverKind],
        "suites": list(SUITES),
    }
