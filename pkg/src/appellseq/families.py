"""Catalog of generating-function families producing coefficient sequences.

Each family fixes the exponential coefficients d_n of f(t):

* bernoulli:        f(t) = (e^t - 1)/t,      d_n = 1/(n+1)
* euler:            f(t) = (e^t + 1)/2,      d_0 = 1, d_n = 1/2 (n >= 1)
* hyper_bernoulli:  f(t) = 1F1(M; M+N; t),   d_n = (M)^(n) / (M+N)^(n)
* hyper_cauchy:     f(t) = 2F1(M, N; N+1; -t),
                    d_n = (-1)^n (M)^(n) (N)^(n) / (N+1)^(n)
* custom:           user-supplied d_n from a file

where (x)^(n) is the rising factorial.  The alternating sign of the
hypergeometric Cauchy kind is folded into d_n so every family presents
the same normalized f(t) to the engine.  M = N = 1 recovers the classical
Bernoulli and Cauchy numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .arith import parse_rational, rising_factorial
from .engine import CoefficientSequence, NormalizationError
from .series import TruncatedSeries

BERNOULLI = "bernoulli"
EULER = "euler"
HYPER_BERNOULLI = "hyper_bernoulli"
HYPER_CAUCHY = "hyper_cauchy"
CUSTOM = "custom"

_PARAMETRIC_KINDS = (HYPER_BERNOULLI, HYPER_CAUCHY)


@dataclass(frozen=True)
class FamilySpec:
    """A named generating family, or a custom coefficient list."""

    kind: str
    m: Optional[int] = None
    n: Optional[int] = None
    values: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.kind in _PARAMETRIC_KINDS:
            if self.m is None or self.n is None or self.m < 1 or self.n < 1:
                raise ValueError(
                    f"{self.kind} needs integer parameters M >= 1 and N >= 1"
                )
        elif self.kind == CUSTOM:
            if not self.values:
                raise ValueError("custom family needs a nonempty value list")
            if self.values[0] != 1:
                raise NormalizationError(f"d_0 must be 1 (got {self.values[0]})")
        elif self.kind not in (BERNOULLI, EULER):
            raise ValueError(f"unknown family kind {self.kind!r}")

    @classmethod
    def bernoulli(cls) -> "FamilySpec":
        return cls(BERNOULLI)

    @classmethod
    def euler(cls) -> "FamilySpec":
        return cls(EULER)

    @classmethod
    def hyper_bernoulli(cls, m: int, n: int) -> "FamilySpec":
        return cls(HYPER_BERNOULLI, m=m, n=n)

    @classmethod
    def hyper_cauchy(cls, m: int, n: int) -> "FamilySpec":
        return cls(HYPER_CAUCHY, m=m, n=n)

    @classmethod
    def custom(cls, values) -> "FamilySpec":
        return cls(CUSTOM, values=tuple(Fraction(v) for v in values))

    @property
    def label(self) -> str:
        if self.kind in _PARAMETRIC_KINDS:
            return f"{self.kind.replace('_', '-')}({self.m},{self.n})"
        return self.kind


def family_coefficients(spec: FamilySpec, n_max: int) -> CoefficientSequence:
    """Exact d_0..d_{n_max} for the given family; d_0 = 1 in every kind."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if spec.kind == BERNOULLI:
        d = [Fraction(1, n + 1) for n in range(n_max + 1)]
    elif spec.kind == EULER:
        d = [Fraction(1)] + [Fraction(1, 2)] * n_max
    elif spec.kind == HYPER_BERNOULLI:
        d = [
            rising_factorial(spec.m, n) / rising_factorial(spec.m + spec.n, n)
            for n in range(n_max + 1)
        ]
    elif spec.kind == HYPER_CAUCHY:
        d = []
        for n in range(n_max + 1):
            v = (
                rising_factorial(spec.m, n)
                * rising_factorial(spec.n, n)
                / rising_factorial(spec.n + 1, n)
            )
            d.append(-v if n % 2 else v)
    elif spec.kind == CUSTOM:
        if n_max >= len(spec.values):
            raise ValueError(
                f"custom family provides d_0..d_{len(spec.values) - 1}, "
                f"cannot serve n_max={n_max}"
            )
        d = list(spec.values[: n_max + 1])
    else:  # pragma: no cover - kinds are validated on construction
        raise ValueError(f"unknown family kind {spec.kind!r}")
    return CoefficientSequence(tuple(d))


def load_custom_family(path: Union[str, Path]) -> FamilySpec:
    """Read a custom family file: one "p/q" per line, d_0 first.

    Blank lines and lines starting with '#' are ignored.  The first value
    must equal 1 (the normalization every algorithm assumes).
    """
    path = Path(path)
    values = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(parse_rational(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if not values:
        raise ValueError(f"{path}: no coefficients found")
    if values[0] != 1:
        raise NormalizationError(f"{path}: d_0 must be 1 (got {values[0]})")
    return FamilySpec.custom(values)


@dataclass(frozen=True)
class IdentityCheck:
    """Result of comparing a family against a closed form, term by term."""

    n_max: int
    first_mismatch: Optional[int]

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def family_identity_checks(spec: FamilySpec, n_max: int) -> IdentityCheck:
    """Check the M = 1 hypergeometric Bernoulli closed form.

    For hyper_bernoulli(1, N) the coefficients collapse to
    d_n = n! N! / (N+n)!; any other spec is rejected.
    """
    if spec.kind != HYPER_BERNOULLI or spec.m != 1:
        raise ValueError("closed-form check applies to hyper_bernoulli(1, N) only")
    d = family_coefficients(spec, n_max).d
    N = spec.n
    first_bad = None
    for n in range(n_max + 1):
        expected = Fraction(1)
        for i in range(n):  # n! N! / (N+n)! = prod_{i<n} (i+1)/(N+i+1)
            expected *= Fraction(i + 1, N + i + 1)
        if d[n] != expected:
            first_bad = n
            break
    return IdentityCheck(n_max=n_max, first_mismatch=first_bad)


def classical_cauchy_oracle(n_max: int) -> list[Fraction]:
    """Cauchy numbers c_0..c_{n_max} straight from t/log(1+t).

    Built from first principles: log(1+t)/t has ordinary coefficients
    (-1)^n/(n+1), and c_n = n! [t^n] of its inverse.  Independent of the
    hypergeometric route, so the two can check each other.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    log_over_t = TruncatedSeries(
        Fraction(-1 if n % 2 else 1, n + 1) for n in range(n_max + 1)
    )
    inv = log_over_t.inverse()
    out = []
    fact = 1
    for n in range(n_max + 1):
        if n:
            fact *= n
        out.append(fact * inv.coeffs[n])
    return out
