from importlib.metadata import PackageNotFoundError, version

from setuptools_scm import get_version

try:
    __version__ = version('gkm-kirwan')
except PackageNotFoundError:
    try:
        __version__ = get_version()
    except LookupError:
        # neither installed nor inside a git checkout
        __version__ = '0.0.0.dev0'
