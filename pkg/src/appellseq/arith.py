"""Exact scalar arithmetic and combinatorial primitives.

Every numeric value in this package is a `fractions.Fraction`: arbitrary
precision, stored in lowest terms with a positive denominator, so equality
is structural and safe for cross-algorithm comparison.  The helpers here
add the wire format ("p/q" strings), the binomial convention used by the
Hasse-Teichmueller derivative, rising factorials, and composition
enumeration.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator, Union

#: Strict compositions of n blow up as 2^(n-1); enumeration past this point
#: is refused instead of silently grinding.
DEFAULT_COMPOSITION_CAP = 22

RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*(\d+))?")


class CombinatorialBlowupError(ValueError):
    """Raised when a composition enumeration would exceed the configured cap."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer) into a Fraction.

    Only the integer and integer/positive-integer forms are accepted;
    decimal or float notation is rejected.
    """
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a p/q rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: RationalLike) -> str:
    """Render a rational as "p/q" in lowest terms, or "p" when q == 1.

    Zero renders as "0".  This is the serialization used by every file and
    CLI format in the package, and it round-trips through parse_rational.
    """
    return str(Fraction(x))


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that k < 0 or k > n gives 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"rising_factorial needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def compositions(
    n: int,
    k: int,
    *,
    weak: bool = False,
    cap: int | None = DEFAULT_COMPOSITION_CAP,
) -> Iterator[tuple[int, ...]]:
    """Enumerate the compositions of n into exactly k parts, lexicographically.

    Strict compositions (the default) have every part >= 1 and number
    C(n-1, k-1); weak compositions allow zero parts and number
    C(n+k-1, k-1).  The order is deterministic (ascending lexicographic),
    and each tuple is produced exactly once.

    Raises CombinatorialBlowupError when n exceeds `cap` (pass cap=None to
    disable the guard).
    """
    if n < 0:
        raise ValueError(f"compositions needs n >= 0, got {n}")
    if k < 1:
        raise ValueError(f"compositions needs k >= 1, got {k}")
    if cap is not None and n > cap:
        raise CombinatorialBlowupError(
            f"refusing to enumerate compositions of n={n}: "
            f"enumeration cap is {cap}"
        )
    return _compositions(n, k, 0 if weak else 1)


def _compositions(n: int, k: int, lo: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        if n >= lo:
            yield (n,)
        return
    for first in range(lo, n - lo * (k - 1) + 1):
        for rest in _compositions(n - first, k - 1, lo):
            yield (first,) + rest
