"""Platform validation — check the numerical stack and report environment at startup."""

import platform
import sys
from dataclasses import dataclass

MIN_PYTHON = (3, 10)
MIN_NUMPY = (1, 22)


@dataclass
class PlatformInfo:
    os_name: str           # e.g. "Darwin", "Linux", "Windows"
    os_version: str        # e.g. "14.5", "10.0.22631"
    python_version: str    # e.g. "3.12.1"
    numpy_version: str     # e.g. "1.26.4"
    float_epsilon: float


class PlatformError(Exception):
    pass


def platform_check(verbose: bool = True) -> PlatformInfo:
    """Validate Python and numpy versions and report environment.

    Raises PlatformError if numpy is missing or either version is too old.
    """
    os_name = platform.system()
    os_version = platform.release()
    python_version = platform.python_version()

    if sys.version_info[:2] < MIN_PYTHON:
        raise PlatformError(
            f"Python {python_version} is too old; need {'.'.join(map(str, MIN_PYTHON))}+"
        )

    try:
        import numpy as np
    except ImportError as e:
        raise PlatformError(f"numpy not importable ({e}). Install via: pip install -r requirements.txt")

    if _version_tuple(np.__version__) < MIN_NUMPY:
        raise PlatformError(
            f"numpy {np.__version__} is too old; need {'.'.join(map(str, MIN_NUMPY))}+"
        )

    info = PlatformInfo(
        os_name=os_name,
        os_version=os_version,
        python_version=python_version,
        numpy_version=np.__version__,
        float_epsilon=float(np.finfo(float).eps),
    )

    if verbose:
        print(f"Platform: {os_name} {os_version}, Python {python_version}")
        print(f"numpy:    {info.numpy_version} (float eps {info.float_epsilon:.3e})")

    return info


def _version_tuple(text: str) -> tuple[int, ...]:
    """Leading numeric components of a version string: "1.26.4rc1" -> (1, 26, 4)."""
    parts = []
    for piece in text.split("."):
        digits = ""
        for ch in piece:
            if not ch.isdigit():
                break
            digits += ch
        if not digits:
            break
        parts.append(int(digits))
    return tuple(parts)
