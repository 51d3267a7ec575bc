"""Order unit spaces: compression bases, spectral resolutions and property checks."""

import json

from . import _ouspec
from ._ouspec import OuspecError, registered_suites, version

__all__ = ["OuspecError", "check", "cli", "decompose", "element", "registered_suites", "spectral", "version"]


def element(model, n, data, family=None):
    e = {"model": model, "n": n, "data": list(data)}
    if family is not None:
        e["family"] = family
    return e


def check(model, n, family="", suites=(), trials=1000, seed=1, threads=1):
    return json.loads(_ouspec.check(model, n, family, list(suites), trials, seed, threads))


def spectral(elem, grid, mesh=1e-2):
    return json.loads(_ouspec.spectral(json.dumps(elem), list(grid), mesh))


def decompose(elem):
    return json.loads(_ouspec.decompose(json.dumps(elem)))


def cli(*args):
    return _ouspec.cli([str(a) for a in args])
