"""Absolute factorization of reduced polynomials over Q."""

import json

from ._core import Error, ParseError, normalize
from ._core import run as _run

__all__ = ["Error", "ParseError", "CommandFailed", "normalize", "run", "count", "factor", "generic", "section"]

EXIT_PARTIAL = 4


class CommandFailed(Error):
    def __init__(self, report):
        super().__init__(report["error"]["message"])
        self.report = report
        self.exit_code = report["exit_code"]


def run(op, expr, *, vars=None, var=None, seed=1, retries=8, plane=None, random_planes=0):
    """Run one command and return its JSON report as a dict, with the exit code added."""
    if isinstance(vars, (list, tuple)):
        vars = ",".join(vars)
    payload, code, diagnostic = _run(op, expr, vars, var, seed, retries, plane, random_planes)
    report = json.loads(payload)
    report["exit_code"] = code
    if diagnostic:
        report["diagnostic"] = diagnostic
    return report


def _checked(report, allowed=(0,)):
    if report["exit_code"] not in allowed:
        raise CommandFailed(report)
    return report


def count(expr, *, vars=None):
    return _checked(run("count", expr, vars=vars))["count"]


def factor(expr, *, vars=None, seed=1, retries=8):
    """Rational absolute factors; a partial split keeps the unsplit part in 'residual'."""
    return _checked(run("factor", expr, vars=vars, seed=seed, retries=retries), allowed=(0, EXIT_PARTIAL))


def generic(expr, var, *, vars=None):
    return _checked(run("generic", expr, vars=vars, var=var))["generic"]


def section(expr, *, vars=None, plane=None, random_planes=0, seed=1):
    return _checked(run("section", expr, vars=vars, plane=plane, random_planes=random_planes, seed=seed))
