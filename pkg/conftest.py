import pathlib
import sys

# allow running pytest from a fresh checkout without installing
try:
    import plactic  # noqa: F401
except ImportError:
    sys.path.insert(0, str(pathlib.Path(__file__).parent / "src"))
