from importlib.resources import files
from pathlib import Path

PACKAGE_NAME = "tlr"

# Physical constants (SI)
GRAVITY = 9.81
STEFAN_BOLTZMANN = 5.670e-8
FREEZING_POINT = 273.15
FT_TO_M = 0.3048
INCH_TO_M = 0.0254
SECONDS_PER_YEAR = 365.25 * 24 * 3600.0

MONTHS_PER_YEAR = 12


def _get_package_path() -> str:
    """
    Get the package path, handling development and installed environments.

    Returns:
        Path to the package directory as a string.
    """
    try:
        package_path = str(Path(files(PACKAGE_NAME)))  # type: ignore
        configs_path = Path(package_path) / "configs"
        if configs_path.exists():
            return package_path
    except (ImportError, FileNotFoundError, ModuleNotFoundError):
        pass

    # Fallback for development environment
    return str(Path(__file__).parent)


PACKAGE_PATH = _get_package_path()
