"""Eigenvalues of real square matrices, with exact multiplicities for integer input.

Skew Laplacians are frequently defective (a single arc already gives the
nilpotent ``[[1, -1], [1, -1]]``), and a floating-point QR solver spreads a
``k``-fold defective eigenvalue into a ring of radius ``~eps**(1/k)``.  Energies
are sums of moduli, so that spread lands directly in the result.  For
integer matrices we therefore:

1. build the exact characteristic polynomial (Berkowitz, integers only),
2. split it into square-free factors over Q (Yun), which fixes every
   multiplicity exactly, and
3. find the *simple* roots of each factor numerically and polish them.

Everything else goes to LAPACK (``numpy.linalg.eigvals``).  In both cases
``Spectrum.residual`` is ``max sigma_min(M - mu I)`` over the reported
values, a backward-error certificate that does not depend on the route.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

EXACT_MAX_ORDER = 32
CHARPOLY_MAX_ORDER = 16
_EPS = np.finfo(float).eps


class EigenError(ArithmeticError):
    pass


class NonConvergence(EigenError):
    pass


class EmptyMatrix(EigenError):
    pass


class OrderTooLarge(EigenError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with algebraic multiplicity, sorted by ``(-|mu|, re, im)``."""

    values: tuple[complex, ...]
    residual: float
    zero_tol: float
    method: str = "exact-factor"

    @property
    def order(self) -> int:
        return len(self.values)

    def moduli(self) -> np.ndarray:
        return np.abs(np.array(self.values, dtype=complex))

    def energy(self) -> float:
        return float(sum(abs(z) for z in self.values))


def _as_int_rows(m: np.ndarray) -> list[list[int]] | None:
    if np.issubdtype(m.dtype, np.integer):
        return m.astype(object).tolist()
    if not np.all(np.isfinite(m)) or not np.array_equal(m, np.round(m)):
        return None
    return [[int(x) for x in row] for row in m]


def _square(m) -> np.ndarray:
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise EmptyMatrix("matrix of order 0 has no eigenvalues")
    return arr


# -- exact polynomial machinery (coefficient lists, highest degree first) ----


def _berkowitz(a: list[list[int]]) -> list[int]:
    """Coefficients of ``det(xI - A)``; division-free, exact over the integers."""
    n = len(a)
    poly = [1]
    for r in range(n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        v = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        poly = [
            sum(toeplitz[i - j] * poly[j] for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return poly


def _trim(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _deriv(p: list) -> list:
    d = len(p) - 1
    return _trim([c * (d - i) for i, c in enumerate(p[:-1])]) if d > 0 else [0]


def _monic(p: list) -> list[Fraction]:
    lead = Fraction(p[0])
    return [Fraction(c) / lead for c in p]


def _divmod(a: list, b: list) -> tuple[list[Fraction], list[Fraction]]:
    a = [Fraction(c) for c in a]
    if len(a) < len(b):
        return [Fraction(0)], a
    q = []
    lead = Fraction(b[0])
    for i in range(len(a) - len(b) + 1):
        coef = a[i] / lead
        q.append(coef)
        if coef:
            for j, bc in enumerate(b):
                a[i + j] -= coef * bc
    rem = _trim(a[len(a) - len(b) + 1:] or [Fraction(0)])
    return q, rem


def _gcd(a: list, b: list) -> list[Fraction]:
    a, b = _monic(a), _trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        b = _monic(b)
        _, r = _divmod(a, b)
        a, b = b, r
    return a


def _sub(a: list, b: list) -> list:
    width = max(len(a), len(b))
    a = [0] * (width - len(a)) + list(a)
    b = [0] * (width - len(b)) + list(b)
    return _trim([x - y for x, y in zip(a, b)])


def squarefree_factors(poly: Sequence[int]) -> list[tuple[list[Fraction], int]]:
    """Yun's square-free decomposition of a nonconstant polynomial over Q.

    Returns ``(factor, multiplicity)`` pairs with monic, pairwise coprime,
    square-free factors whose product (with multiplicities) is ``poly``
    made monic.
    """
    f = _monic(_trim(list(poly)))
    if len(f) == 1:
        return []
    df = _deriv(f)
    g = _gcd(f, df)
    if len(g) == 1:
        return [(f, 1)]
    b, _ = _divmod(f, g)
    c, _ = _divmod(df, g)
    d = _sub(c, _deriv(b))
    out = []
    k = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = _sub(c, _deriv(b))
        k += 1
    return out


def _horner(coeffs: Sequence[float], z: complex) -> tuple[complex, complex]:
    p, dp = 0j, 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _polish(coeffs: Sequence[float], z: complex, steps: int = 3) -> complex:
    p, dp = _horner(coeffs, z)
    for _ in range(steps):
        if dp == 0 or p == 0:
            break
        trial = z - p / dp
        tp, tdp = _horner(coeffs, trial)
        if abs(tp) >= abs(p):
            break
        z, p, dp = trial, tp, tdp
    return z


def _snap_integer(f: list[Fraction], r: complex) -> complex:
    k = round(r.real)
    if abs(r - k) < 1e-6:
        acc = Fraction(0)
        for c in f:
            acc = acc * k + c
        if acc == 0:
            return complex(k)
    return r


def _simple_roots(f: list[Fraction]) -> list[complex]:
    """Roots of a monic square-free polynomial with rational coefficients."""
    return [_snap_integer(f, complex(z)) for z in _raw_roots(f)]


def _raw_roots(f: list[Fraction]) -> list[complex]:
    deg = len(f) - 1
    if deg == 1:
        return [complex(-f[1])]
    if deg == 2:
        b, c = f[1], f[2]
        disc = b * b - 4 * c
        if disc < 0:
            re, im = float(-b / 2), math.sqrt(float(-disc)) / 2
            return [complex(re, im), complex(re, -im)]
        s = math.sqrt(float(disc))
        q = -(float(b) + math.copysign(s, float(b))) / 2
        return [q, float(c) / q] if q != 0 else [0.0, 0.0]
    if deg % 2 == 0 and all(c == 0 for c in f[1::2]):
        # f(x) = g(x^2): solve g, then take both square roots
        out = []
        for y in _simple_roots(f[::2]):
            if abs(y.imag) == 0 and y.real < 0:
                w = complex(0.0, math.sqrt(-y.real))
            else:
                w = cmath.sqrt(y)
            out.extend([w, -w])
        return out
    coeffs = [float(c) for c in f]
    raw = [_polish(coeffs, complex(z)) for z in np.roots(coeffs)]
    scale = max(1.0, max(abs(z) for z in raw))
    thr = 1e-9 * scale
    upper = [z for z in raw if z.imag > thr]
    reals = [z.real for z in raw if abs(z.imag) <= thr]
    if 2 * len(upper) + len(reals) != deg:
        return raw
    reals = [_polish(coeffs, complex(r)).real for r in reals]
    return [complex(r) for r in reals] + upper + [z.conjugate() for z in upper]


def _sigma_min(m: np.ndarray, mus: Sequence[complex]) -> float:
    if not len(mus):
        return 0.0
    eye = np.eye(m.shape[0])
    stack = m.astype(complex)[None, :, :] - np.asarray(mus, dtype=complex)[:, None, None] * eye
    return float(np.linalg.svd(stack, compute_uv=False)[:, -1].max())


def _sort_key(z: complex) -> tuple[float, float, float]:
    return (-abs(z), z.real, z.imag)


def _clean(z: complex, scale: float) -> complex:
    tiny = 64 * _EPS * scale
    re = 0.0 if abs(z.real) <= tiny else z.real
    im = 0.0 if abs(z.imag) <= tiny else z.imag
    return complex(re, im)


def eigenvalues(m, zero_tol: float | None = None) -> Spectrum:
    """All eigenvalues of ``m`` with algebraic multiplicity."""
    arr = _square(m)
    n = arr.shape[0]
    fro = float(np.linalg.norm(arr.astype(float)))
    if zero_tol is None:
        zero_tol = 1e-8 * max(1.0, fro)
    rows = _as_int_rows(arr) if n <= EXACT_MAX_ORDER else None
    if rows is not None:
        poly = _berkowitz(rows)
        zeros = 0
        while zeros < n and poly[-1 - zeros] == 0:
            zeros += 1
        distinct: list[complex] = [0j] if zeros else []
        values: list[complex] = [0j] * zeros
        rest = poly[: len(poly) - zeros]
        for factor, mult in squarefree_factors(rest):
            for z in _simple_roots(factor):
                z = _clean(complex(z), max(1.0, fro))
                distinct.append(z)
                values.extend([z] * mult)
        method = "exact-factor"
    else:
        try:
            raw = np.linalg.eigvals(arr.astype(float))
        except np.linalg.LinAlgError as exc:
            raise NonConvergence(f"eigensolver did not converge: {exc}") from exc
        values = [_clean(complex(z), max(1.0, fro)) for z in raw]
        distinct = values
        method = "lapack"
    residual = _sigma_min(arr.astype(float), distinct)
    values.sort(key=_sort_key)
    return Spectrum(tuple(values), residual, float(zero_tol), method)


def zero_multiplicity(s: Spectrum) -> int:
    return sum(1 for z in s.values if abs(z) <= s.zero_tol)


def characteristic_polynomial(m) -> list[int]:
    """Exact ``det(xI - M)`` coefficients, highest degree first (Faddeev-LeVerrier)."""
    arr = _square(m)
    n = arr.shape[0]
    if n > CHARPOLY_MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {CHARPOLY_MAX_ORDER}")
    rows = _as_int_rows(arr)
    if rows is None:
        raise ValueError("characteristic_polynomial needs an integer-valued matrix")
    a = np.array(rows, dtype=object)
    eye = np.identity(n, dtype=object) * 1
    mk = np.zeros((n, n), dtype=object)
    coeffs = [1]
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[-1] * eye
        t = int(np.trace(a.dot(mk)))
        assert t % k == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(-t // k)
    return coeffs


def spectral_moment(m, k: int):
    """``trace(M**k)``, which equals the k-th power sum of the eigenvalues.

    Exact (a Python ``int``) for integer matrices.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    arr = _square(m)
    rows = _as_int_rows(arr)
    if rows is None:
        return float(np.trace(np.linalg.matrix_power(arr.astype(float), k)))
    a = np.array(rows, dtype=object)
    p = a
    for _ in range(k - 1):
        p = p.dot(a)
    return int(np.trace(p))


def polyval_int(coeffs: Sequence[int], z: complex) -> complex:
    return _horner([float(c) for c in coeffs], z)[0]
