"""Independent reference implementations used only by the tests.

Nothing here calls back into the package's algorithm code paths beyond
trivially constructing TruncatedSeries values; the point is to have a
second, dumber route to every quantity under test.
"""

from fractions import Fraction

from appellseq.series import TruncatedSeries

ZERO = Fraction(0)
ONE = Fraction(1)


def rand_fraction(rng, p_max=9, q_max=9):
    return Fraction(rng.randint(-p_max, p_max), rng.randint(1, q_max))


def rand_series(rng, order, nonzero_constant=False):
    c0 = rand_fraction(rng)
    if nonzero_constant:
        while c0 == 0:
            c0 = rand_fraction(rng)
    return TruncatedSeries([c0] + [rand_fraction(rng) for _ in range(order)])


def naive_mul(a, b):
    """Cauchy product of two coefficient lists, shortest prefix wins."""
    n_out = min(len(a), len(b))
    out = []
    for n in range(n_out):
        out.append(sum((a[j] * b[n - j] for j in range(n + 1)), ZERO))
    return out


def gauss_det(matrix):
    """Determinant by plain fraction Gaussian elimination with pivoting."""
    n = len(matrix)
    rows = [list(row) for row in matrix]
    det = ONE
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor:
                for j in range(k, n):
                    rows[i][j] -= factor * rows[k][j]
    return det


def iter_compositions(n, k, lo):
    """All tuples (i_1..i_k), each part >= lo, summing to n."""
    if k == 1:
        if n >= lo:
            yield (n,)
        return
    for first in range(lo, n + 1):
        for rest in iter_compositions(n - first, k - 1, lo):
            yield (first,) + rest


def weak_D(d, r, e):
    """D_r(e) as the literal weak-composition sum over d_i / i!."""
    fact = [1] * (e + 1)
    for i in range(1, e + 1):
        fact[i] = fact[i - 1] * i
    total = ZERO
    for parts in iter_compositions(e, r, 0):
        prod = ONE
        for i in parts:
            prod *= Fraction(d[i], fact[i]) if isinstance(d[i], int) else d[i] / fact[i]
        total += prod
    return total


def akiyama_tanigawa(n_max):
    """Bernoulli numbers B_0..B_{n_max} by the Akiyama-Tanigawa scheme.

    The scheme natively produces the B_1 = +1/2 convention; the sign at
    n = 1 is flipped to match the generating function t/(e^t - 1).
    """
    out = []
    for n in range(n_max + 1):
        row = [ZERO] * (n + 1)
        for m in range(n + 1):
            row[m] = Fraction(1, m + 1)
            for j in range(m, 0, -1):
                row[j - 1] = j * (row[j - 1] - row[j])
        out.append(-row[0] if n == 1 else row[0])
    return out


def ht_by_differentiation(series, n):
    """H^(n) computed as (1/n!) (d/dt)^n, the classical route."""
    coeffs = list(series.coeffs)
    for _ in range(n):
        coeffs = [m * coeffs[m] for m in range(1, len(coeffs))]
        if not coeffs:
            coeffs = [ZERO]
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return TruncatedSeries([c / fact for c in coeffs])


def _composition_series_sum(tables, n, k, lo, prefix=None):
    """Sum over compositions (i_1..i_k) of n, parts >= lo, of the series
    products prefix * tables[0][i_1] * ... built by prefix sharing.

    `tables` holds one H-derivative lookup per factor slot; for a single
    series f repeated k times, pass the same table k times.
    """
    table = tables[0]
    if k == 1:
        if n < lo:
            return None
        term = table[n]
        return term if prefix is None else prefix * term
    total = None
    for first in range(lo, n - lo * (k - 1) + 1):
        step = table[first] if prefix is None else prefix * table[first]
        sub = _composition_series_sum(tables[1:], n - first, k - 1, lo, step)
        if sub is not None:
            total = sub if total is None else total + sub
    return total


def ht_product_rule_rhs(factors, n):
    """Right side of the order-n product rule for the given series factors:
    the sum over weak compositions of n of products of H-derivatives."""
    tables = [[f.ht(i) for i in range(n + 1)] for f in factors]
    return _composition_series_sum(tables, n, len(factors), 0)


def ht_quotient_strict_rhs(f, n):
    """Right side of the strict quotient rule,

        sum_{k=1..n} (-1)^k / f^(k+1) * sum over (i_1..i_k >= 1) of
        H^(i_1)(f) ... H^(i_k)(f),

    truncated to the order the left side supports."""
    table = [f.ht(i) for i in range(n + 1)]
    inv = f.inverse()
    inv_pow = inv
    total = None
    for k in range(1, n + 1):
        inv_pow = inv_pow * inv  # 1 / f^(k+1)
        inner = _composition_series_sum([table] * k, n, k, 1)
        if inner is None:
            continue
        term = inner * inv_pow
        if k % 2:
            term = -term
        total = term if total is None else total + term
    return total.truncate(max(f.order - n, 0))


def ht_quotient_weak_rhs(f, n):
    """Right side of the weak-composition quotient rule,

        sum_{k=1..n} C(n+1, k+1) (-1)^k / f^(k+1) * sum over
        (i_1..i_k >= 0) of H^(i_1)(f) ... H^(i_k)(f),

    truncated to the order the left side supports."""
    from math import comb

    table = [f.ht(i) for i in range(n + 1)]
    inv = f.inverse()
    inv_pow = inv
    total = None
    for k in range(1, n + 1):
        inv_pow = inv_pow * inv
        inner = _composition_series_sum([table] * k, n, k, 0)
        term = inner * inv_pow * comb(n + 1, k + 1)
        if k % 2:
            term = -term
        total = term if total is None else total + term
    return total.truncate(max(f.order - n, 0))
