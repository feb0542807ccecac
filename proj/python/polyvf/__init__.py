"""Exact computations with polynomial vector fields and their tensor-field modules."""

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _core
from ._core import DimensionMismatch, Inconclusive, ResourceError, SearchFailure, VerificationError

__all__ = [
    "Result",
    "phi",
    "shift",
    "span",
    "hilbert",
    "homology",
    "weights",
    "specht",
    "DimensionMismatch",
    "Inconclusive",
    "ResourceError",
    "SearchFailure",
    "VerificationError",
]

Number = Union[int, Fraction, str]


@dataclass(frozen=True)
class Result:
    """Decoded JSON report and whether all of its certificates verified."""

    data: dict
    verified: bool
    csv: str = ""


def _wrap(report, csv=""):
    return Result(json.loads(report.json), report.verified, csv)


def _rats(values: Union[Number, Sequence[Number]]) -> str:
    if isinstance(values, (int, Fraction, str)):
        values = [values]
    return ",".join(str(v) for v in values)


def _exponents(generators: Iterable[Sequence[int]]) -> str:
    return ";".join(",".join(str(a) for a in g) for g in generators)


def phi(r, lam, mu, max_r=5):
    return _wrap(_core.phi(r, _rats(lam), _rats(mu), max_r))


def shift(r, lam, mu, bound=10, cutoff=8):
    return _wrap(_core.shift(r, _rats(lam), _rats(mu), bound, cutoff))


def span(r, lam, mu, cutoff=8, bound=10, d=1, generators=None):
    given = _exponents(generators) if generators is not None else ""
    return _wrap(_core.span(r, _rats(lam), _rats(mu), cutoff, bound, d, given))


def hilbert(r, lam, mu, cutoff=8, bound=10, window=24):
    return _wrap(_core.hilbert(r, _rats(lam), _rats(mu), cutoff, bound, window))


def homology(algebra, coeffs="trivial", pmax=2, wmax=10, jobs=1, max_slice=20000):
    report, csv = _core.homology(algebra, coeffs, pmax, wmax, jobs, max_slice)
    return _wrap(report, csv)


def weights(partition: Sequence[int], n=None, wmax=6):
    return _wrap(_core.weights(_rats(partition), len(partition) if n is None else n, wmax))


def specht(polys, n, cutoff=10, check_subs=0):
    """Closure of polynomials given as lists of (exponent, coefficient) pairs."""
    payload = {"n": n, "polys": [[{"exp": list(e), "coef": str(c)} for e, c in p] for p in polys]}
    return _wrap(_core.specht(json.dumps(payload), cutoff, check_subs))
