"""Exact certificates for the second pinching inequalities.

Numbers cross the boundary as exact ``p/q`` strings and come back as
:class:`fractions.Fraction`.
"""

from fractions import Fraction
import json

from . import _core
from ._core import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "verify_minimal",
    "verify_shrinker",
    "check_certificate",
    "poly_coefficients",
    "resultant_with_derivative",
    "count_real_roots",
    "g2_limit",
    "C4",
    "shrinker_coefficients",
    "optimize",
    "run_cli",
]


def _s(x):
    return str(x)


def _pair(p):
    return Fraction(p[0]), Fraction(p[1])


def verify_minimal(theta, theta1, k):
    """Certificate bundle (a dict) for the pinching interval [n, n + n/k]."""
    return json.loads(_core.verify_minimal(_s(theta), _s(theta1), _s(k)))


def verify_shrinker(theta, theta1, delta):
    """Certificate bundle (a dict) for the pinching interval [1, 1 + delta]."""
    return json.loads(_core.verify_shrinker(_s(theta), _s(theta1), _s(delta)))


def check_certificate(cert, deep=False):
    """Replays a certificate given as a dict or JSON text; returns (status, detail)."""
    text = cert if isinstance(cert, str) else json.dumps(cert)
    return _core.check_certificate(text, deep)


def poly_coefficients(name):
    return [Fraction(c) for c in _core.poly_coefficients(name)]


def resultant_with_derivative(coeffs):
    return Fraction(_core.resultant_with_derivative([_s(c) for c in coeffs]))


def count_real_roots(coeffs, range=""):
    return _core.count_real_roots([_s(c) for c in coeffs], range)


def g2_limit(width=""):
    return _pair(_core.g2_limit(_s(width) if width else ""))


def C4(theta, width=""):
    return _pair(_core.C4(_s(theta), _s(width) if width else ""))


def shrinker_coefficients(theta, theta1, delta, width=""):
    a, b = _core.shrinker_coefficients(_s(theta), _s(theta1), _s(delta), _s(width) if width else "")
    return _pair(a), _pair(b)


def optimize(objective, theta_grid=(), theta1_grid=(), spot_checks=10):
    """Grid search; returns (summary dict, frontier rows as dicts)."""
    summary, tsv = _core.optimize(objective, [_s(t) for t in theta_grid], [_s(t) for t in theta1_grid], spot_checks)
    lines = tsv.strip().split("\n")
    header = lines[0].split("\t")
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    return json.loads(summary), rows


def run_cli(*args):
    """Runs one command line; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([_s(a) for a in args])
