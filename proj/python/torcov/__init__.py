"""Exact counts of torus covers and their quasimodular closed forms.

Series come back as lists of fractions.Fraction, index n holding the
coefficient of q^n.
"""

from fractions import Fraction

from . import _torcov
from ._torcov import BudgetError, FitError, MismatchError, TorcovError

__all__ = [
    "BudgetError", "FitError", "MismatchError", "TorcovError",
    "count", "sv_count", "brute_force", "eisenstein", "fit", "fit_string",
    "qm_series", "zeta0_z_power", "constant_term", "triple",
]


def _fr(coeffs):
    return [Fraction(c) for c in coeffs]


def _str(coeffs):
    return [str(Fraction(c)) for c in coeffs]


def count(profile, order=12, variant="all"):
    return _fr(_torcov.count(profile, order, variant))


def sv_count(profile, p=-1, order=12, variant="connected"):
    return _fr(_torcov.sv_count(profile, p, order, variant))


def brute_force(profile, d, variant="all", budget=1e8):
    return Fraction(_torcov.brute_force(profile, d, variant, budget))


def eisenstein(k, order):
    return _fr(_torcov.eisenstein(k, order))


def fit(coeffs, max_weight):
    """{(a, b, c): Fraction} with (a, b, c) the powers of G2, G4, G6."""
    return {tuple(e): Fraction(c) for e, c in _torcov.fit(_str(coeffs), max_weight)}


def fit_string(coeffs, max_weight):
    return _torcov.fit_string(_str(coeffs), max_weight)


def qm_series(poly, order):
    return _fr(_torcov.qm_series(poly, order))


def zeta0_z_power(e, order=12):
    return _torcov.zeta0_z_power(e, order)


def constant_term(graph, m=(), order=12):
    return _fr(_torcov.constant_term(graph, list(m), order))


def triple(win, wout, mu="", completed=0):
    a, ap = _torcov.triple(list(win), list(wout), mu, completed)
    return Fraction(a), Fraction(ap)
