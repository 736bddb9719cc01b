"""Polynomial algebra over complex floats and Gaussian rationals.

Polynomials are stored densely, ascending power order, trailing zeros
stripped.  Two coefficient domains cover the package's needs:

* :class:`PolyC` -- complex double coefficients, the workhorse for
  everything that ends up in quadrature or root finding;
* :class:`PolyQ` -- Gaussian-rational coefficients (pairs of
  :class:`fractions.Fraction`), for the statements that must be checked
  in exact arithmetic.

Wronskians are computed by cofactor expansion in the polynomial ring,
never as numeric determinants at sample points, so the exact domain
stays exact and the floating domain yields coefficientwise results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import NumericalFailure

#: Two root locations closer than this are treated as a single multiple zero.
CLUSTER_TOL = 1e-6

#: Floating root finding refuses higher degrees instead of degrading silently.
MAX_ROOT_DEGREE = 30

_RESIDUAL_REL = 1e-8
_RECONSTRUCT_REL = 1e-6


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (tuple, list)) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        if isinstance(re, GaussianRational):
            return re
        return cls(_as_fraction(re), _as_fraction(im))

    @staticmethod
    def _coerce(o):
        if isinstance(o, GaussianRational):
            return o
        if isinstance(o, (int, Fraction)):
            return GaussianRational(_as_fraction(o))
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


_QZERO = GaussianRational()
_QONE = GaussianRational(Fraction(1))


@dataclass(frozen=True)
class PolyC:
    """Univariate polynomial with complex floating coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = tuple(complex(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, c) -> "PolyC":
        return cls((complex(c),))

    @classmethod
    def monomial(cls, k: int, c=1.0) -> "PolyC":
        return cls((0j,) * k + (complex(c),))

    @classmethod
    def from_roots(cls, roots, lead=1.0) -> "PolyC":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-complex(r), 1.0))
        return p

    @cached_property
    def _array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, z):
        zz = np.asarray(z, dtype=complex)
        if self.is_zero:
            out = np.zeros_like(zz)
        else:
            out = npoly.polyval(zz, self._array)
        return complex(out) if zz.ndim == 0 else out

    def __add__(self, o):
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return PolyC(out)

    def __neg__(self):
        return PolyC(tuple(-c for c in self.coeffs))

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, PolyC):
            if self.is_zero or o.is_zero:
                return PolyC()
            return PolyC(np.convolve(self._array, o._array))
        return PolyC(tuple(c * complex(o) for c in self.coeffs))

    def __rmul__(self, o):
        return self * o

    def derivative(self) -> "PolyC":
        return PolyC(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def deflate(self, z0: complex) -> "PolyC":
        """Synthetic-division quotient by ``(z - z0)``; the remainder is dropped."""
        d = self.degree
        if d is None or d == 0:
            return PolyC()
        q = [0j] * d
        q[d - 1] = self.coeffs[d]
        for k in range(d - 1, 0, -1):
            q[k - 1] = self.coeffs[k] + z0 * q[k]
        return PolyC(q)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def to_data(self) -> list:
        return [[c.real, c.imag] for c in self.coeffs]

    @classmethod
    def from_data(cls, data) -> "PolyC":
        return cls(tuple(complex(re, im) for re, im in data))


@dataclass(frozen=True)
class PolyQ:
    """Univariate polynomial with exact Gaussian-rational coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = tuple(GaussianRational.of(x) if not isinstance(x, GaussianRational) else x
                  for x in self.coeffs)
        while c and c[-1].is_zero:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_rationals(cls, seq) -> "PolyQ":
        """Build from a sequence of coefficients, each an int, a Fraction, a
        GaussianRational, or an (re, im) pair whose parts are ints, Fractions
        or (num, den) pairs.  A bare 2-tuple is always read as (re, im)."""
        return cls(tuple(GaussianRational.of(x) if not isinstance(x, (tuple, list))
                         else GaussianRational(_as_fraction(x[0]), _as_fraction(x[1]))
                         for x in seq))

    @classmethod
    def monomial(cls, k: int, c=1) -> "PolyQ":
        return cls((_QZERO,) * k + (GaussianRational.of(c),))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, o):
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return PolyQ(out)

    def __neg__(self):
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, PolyQ):
            if self.is_zero or o.is_zero:
                return PolyQ()
            out = [_QZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
            return PolyQ(out)
        return PolyQ(tuple(c * GaussianRational.of(o) for c in self.coeffs))

    def __rmul__(self, o):
        return self * o

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(GaussianRational.of(k) * c
                           for k, c in enumerate(self.coeffs) if k >= 1))

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return PolyQ(tuple(c / lead for c in self.coeffs))

    def divmod(self, other: "PolyQ"):
        """Exact euclidean division: returns (quotient, remainder)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return PolyQ(), self
        q = [_QZERO] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            top = r[k + len(other.coeffs) - 1]
            if top.is_zero:
                continue
            f = top / lead
            q[k] = f
            for j, c in enumerate(other.coeffs):
                r[k + j] = r[k + j] - f * c
        return PolyQ(q), PolyQ(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def to_polyc(self) -> PolyC:
        return PolyC(tuple(c.to_complex() for c in self.coeffs))

    def to_data(self) -> list:
        return [[[c.re.numerator, c.re.denominator],
                 [c.im.numerator, c.im.denominator]] for c in self.coeffs]

    @classmethod
    def from_data(cls, data) -> "PolyQ":
        return cls(tuple(GaussianRational(Fraction(int(re[0]), int(re[1])),
                                          Fraction(int(im[0]), int(im[1])))
                         for re, im in data))


@dataclass(frozen=True)
class ZeroList:
    """Distinct zero locations with multiplicities, canonically ordered."""

    entries: tuple = ()

    def __post_init__(self):
        norm = sorted(((complex(a), int(m)) for a, m in self.entries),
                      key=lambda e: (e[0].real, e[0].imag))
        for _, m in norm:
            if m < 1:
                raise ValueError("zero multiplicities must be positive")
        for i in range(1, len(norm)):
            for j in range(i):
                if abs(norm[i][0] - norm[j][0]) < CLUSTER_TOL:
                    raise ValueError(
                        "zero locations closer than the clustering tolerance; "
                        "use ZeroList.merged to combine them")
        object.__setattr__(self, "entries", tuple(norm))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> int:
        """Number of zeros counted with multiplicity."""
        return sum(m for _, m in self.entries)

    def locations(self) -> np.ndarray:
        return np.asarray([a for a, _ in self.entries], dtype=complex)

    def multiplicities(self) -> np.ndarray:
        return np.asarray([m for _, m in self.entries], dtype=int)

    @classmethod
    def merged(cls, pairs, tol: float = CLUSTER_TOL) -> "ZeroList":
        """Cluster locations within ``tol`` and sum their multiplicities."""
        pairs = [(complex(a), int(m)) for a, m in pairs]
        if not pairs:
            return cls()
        groups = _cluster_indices([a for a, _ in pairs], tol)
        out = []
        for idxs in groups:
            mult = sum(pairs[i][1] for i in idxs)
            loc = sum(pairs[i][0] * pairs[i][1] for i in idxs) / mult
            out.append((loc, mult))
        return cls(tuple(out))


def _cluster_indices(locs, tol):
    """Union-find clustering of points within ``tol``; deterministic order."""
    n = len(locs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(locs[i] - locs[j]) <= tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups)]


def wronskian(fs):
    """Wronskian determinant of ``n+1`` polynomials, by cofactor expansion.

    Rows are successive derivatives; works over either coefficient domain
    (all inputs must share one).  The zero polynomial is a valid result and
    signals linear dependence.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("wronskian of an empty function list")
    kind = type(fs[0])
    if not all(isinstance(f, kind) for f in fs):
        raise TypeError("wronskian inputs must share one coefficient domain")
    rows = [fs]
    for _ in range(len(fs) - 1):
        rows.append([p.derivative() for p in rows[-1]])
    return _determinant(rows)


def wronskian_derivative(fs):
    """Derivative of the Wronskian, as the determinant with the last row
    replaced by the (n+1)-st derivatives.  Identical to
    ``wronskian(fs).derivative()`` as a polynomial."""
    fs = list(fs)
    if not fs:
        raise ValueError("wronskian of an empty function list")
    n = len(fs) - 1
    rows = [fs]
    for _ in range(n + 1):
        rows.append([p.derivative() for p in rows[-1]])
    return _determinant(rows[:n] + [rows[n + 1]])


def _determinant(m):
    if len(m) == 1:
        return m[0][0]
    acc = None
    for j in range(len(m[0])):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _determinant(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def gcd_exact(p: PolyQ, q: PolyQ) -> PolyQ:
    """Monic gcd over the Gaussian rationals (Euclidean algorithm)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero:
        # monic remainders keep the coefficient growth in check
        a, b = b, (a % b).monic()
    return a.monic()


def squarefree_part(p: PolyQ) -> PolyQ:
    """Monic ``p / gcd(p, p')``; its degree counts the distinct complex zeros."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return p.monic()
    g = gcd_exact(p, p.derivative())
    q, r = p.divmod(g)
    if not r.is_zero:
        raise ArithmeticError("inexact division in squarefree computation")
    return q.monic()


def roots_with_multiplicity(p: PolyC, cluster_tol: float = CLUSTER_TOL) -> ZeroList:
    """All roots of ``p`` with multiplicities.

    Companion-matrix eigenvalues first, with an Aberth-Ehrlich retry when
    validation fails.  Exact zero low-order coefficients are stripped
    structurally, so monomial-type factors get an exact root at 0.  Roots
    within ``cluster_tol`` are merged into one multiple zero and the cluster
    centroid is polished by Newton iteration on the (k-1)-st derivative.
    Multiple roots of floating polynomials scatter at radius ~eps^(1/k), so
    the default tolerance resolves multiplicity 2 reliably; beyond that,
    prefer structural constructions.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no well-defined root set")
    d = p.degree
    if d > MAX_ROOT_DEGREE:
        raise ValueError(f"degree {d} exceeds the root-finder cap {MAX_ROOT_DEGREE}")
    if d == 0:
        return ZeroList()
    k0 = 0
    while p.coeffs[k0] == 0:
        k0 += 1
    q = PolyC(p.coeffs[k0:])
    entries = [(0j, k0)] if k0 else []
    if q.degree >= 1:
        raw = np.roots(q._array[::-1])
        zl = _cluster_refine(q, raw, cluster_tol)
        ok, info = _roots_ok(q, zl)
        if not ok:
            raw = aberth_roots(q)
            zl = _cluster_refine(q, raw, cluster_tol)
            ok, info = _roots_ok(q, zl)
            if not ok:
                raise NumericalFailure("root finding did not converge", info)
        entries.extend(zl.entries)
    return ZeroList.merged(entries, cluster_tol)


def _cluster_refine(q, raw, tol):
    groups = _cluster_indices(list(raw), tol)
    ent = []
    for idxs in groups:
        m = len(idxs)
        x = complex(np.mean([raw[i] for i in idxs]))
        ent.append((_newton_refine(q, x, m), m))
    return ZeroList.merged(ent, tol)


def _newton_refine(p, x, mult, max_iter=60):
    g = p
    for _ in range(mult - 1):
        g = g.derivative()
    gp = g.derivative()
    for _ in range(max_iter):
        dv = gp(x)
        if dv == 0:
            break
        step = g(x) / dv
        x = x - step
        if abs(step) <= 1e-15 * (1.0 + abs(x)):
            break
    return x


def _roots_ok(p, zl):
    mags = np.abs(p._array)
    worst = 0.0
    for a, _ in zl.entries:
        scale = float(np.sum(mags * np.maximum(1.0, abs(a)) ** np.arange(len(mags))))
        res = abs(p(a)) / scale
        worst = max(worst, res)
        if res > _RESIDUAL_REL:
            return False, {"relative_residual": res, "location": a}
    if p.degree <= 12:
        roots_flat = [a for a, m in zl.entries for _ in range(m)]
        recon = PolyC.from_roots(roots_flat)
        monic = p * (1.0 / p.coeffs[-1])
        err = max(abs(x - y) for x, y in zip(recon.coeffs, monic.coeffs))
        scale = max(1.0, monic.max_abs_coeff())
        if err > _RECONSTRUCT_REL * scale:
            return False, {"reconstruction_error": err, "worst_residual": worst}
    return True, {"worst_residual": worst}


def aberth_roots(p: PolyC, max_iter: int = 300, tol: float = 1e-14) -> np.ndarray:
    """Aberth-Ehrlich simultaneous iteration; fallback root finder."""
    d = p.degree
    if d is None or d < 1:
        raise ValueError("aberth_roots needs degree >= 1")
    c = p._array
    radius = 1.0 + float(np.max(np.abs(c[:-1] / c[-1]))) if d >= 1 else 1.0
    x = radius * np.exp(2j * np.pi * (np.arange(d) + 0.376) / d)
    pp = p.derivative()
    for _ in range(max_iter):
        pv = p(x)
        dv = pp(x)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        s = np.sum(1.0 / diff, axis=1) - 1.0  # subtract the diagonal's 1/1
        w = newton / (1.0 - newton * s)
        x = x - w
        if np.max(np.abs(w)) <= tol * (1.0 + np.max(np.abs(x))):
            break
    return x
