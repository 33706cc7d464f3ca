"""Signature engine: exact inertia of Hermitian forms at roots of unity.

The form (1-w)A + (1-conj(w))A^T is assembled over the cyclotomic residue
ring, and its inertia is computed exactly.  Exact mode runs a sound
machine-float pass first (midpoint-radius arithmetic over the whole
elimination) and falls back to fully symbolic elimination whenever a sign
cannot be separated from zero; either way the result is certified.  Float
mode is plain eigenvalue computation with a certification threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cyclotomic import (
    CyclotomicElement,
    UnitRoot,
    certified_sign,
    cyc_field,
    eval_with_bound,
    _divisors,
)
from .exceptions import (
    InternalInconsistencyError,
    InvalidParameterError,
)
from .seifert import SeifertMatrix

_EPS = 2.0 ** -52
_ETA = 4e-323  # absorbs underflow in radius arithmetic

FLOAT_CERT_FACTOR = 1.0e6  # spec'd certification threshold, in units of eps*norm
FLOAT_ZERO_FACTOR = 1.0e3  # eigenvalues below this band are classified zero


@dataclass(frozen=True)
class InertiaTriple:
    """Counts (positive, zero, negative) of eigenvalues of a Hermitian form."""

    positive: int
    zero: int
    negative: int
    certified: bool = True

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def size(self) -> int:
        return self.positive + self.zero + self.negative

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.zero, self.negative)


class HermitianForm:
    """Hermitian matrix over a cyclotomic field, tagged with the evaluation root.

    The root fixes the embedding used for all sign decisions; its reduced
    denominator is the conductor of the entry field.
    """

    __slots__ = ("root", "field", "entries")

    def __init__(self, root: UnitRoot, entries: tuple[tuple[CyclotomicElement, ...], ...]):
        self.root = root
        self.field = cyc_field(root.den)
        for row in entries:
            for e in row:
                if e.field.d != self.field.d:
                    raise InvalidParameterError("entry conductor does not match the root")
        self.entries = entries

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    @classmethod
    def from_integer_symmetric(cls, rows) -> "HermitianForm":
        """Wrap a symmetric integer matrix (evaluation at omega = 1, d = 1)."""
        root = UnitRoot(0, 1)
        fld = cyc_field(1)
        m = len(rows)
        for i in range(m):
            for j in range(m):
                if rows[i][j] != rows[j][i]:
                    raise InvalidParameterError("matrix must be symmetric")
        entries = tuple(tuple(fld.scalar(x) for x in row) for row in rows)
        return cls(root, entries)

    def to_numeric(self) -> np.ndarray:
        m = self.size
        h = np.zeros((m, m), dtype=complex)
        for i in range(m):
            for j in range(m):
                h[i, j] = self.entries[i][j].evaluate(self.root)
        return (h + h.conj().T) / 2.0


@lru_cache(maxsize=None)
def _herm_entries_cached(a: SeifertMatrix, den: int):
    """Entry matrix of (1-x)A + (1-x^{-1})A^T over the conductor-den ring.

    The residues depend only on the conductor, not on which primitive root
    evaluates them, so one entry matrix serves every k/den grid point.
    Returns (rows, is_tridiagonal).
    """
    fld = cyc_field(den)
    one_minus_x = fld.one() - fld.gen()
    one_minus_xinv = fld.one() - fld.gen_inv()
    zero = fld.zero()
    m = a.size
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            p, q = a.entries[i][j], a.entries[j][i]
            if p == 0 and q == 0:
                row.append(zero)
            else:
                row.append(one_minus_x * p + one_minus_xinv * q)
        rows.append(tuple(row))
    tridiag = all(
        rows[i][j].is_zero for i in range(m) for j in range(m) if abs(i - j) >= 2
    )
    return tuple(rows), tridiag


def hermitian_form(a: SeifertMatrix, root: UnitRoot) -> HermitianForm:
    """H = (1-w)A + (1-conj(w))A^T with exact cyclotomic entries.

    At w = 1 this is the zero matrix (the d = 1 residue ring collapses
    1 - x to 0), matching the convention that the signature there is 0.
    """
    rows, _ = _herm_entries_cached(a, root.den)
    return HermitianForm(root, rows)


# -- midpoint-radius float arithmetic (sound, Rump-style) --------------------


def _mr_add(v1, r1, v2, r2):
    v = v1 + v2
    return v, r1 + r2 + 4.0 * _EPS * abs(v) + _ETA


def _mr_sub(v1, r1, v2, r2):
    v = v1 - v2
    return v, r1 + r2 + 4.0 * _EPS * abs(v) + _ETA


def _mr_mul(v1, r1, v2, r2):
    v = v1 * v2
    r = abs(v1) * r2 + abs(v2) * r1 + r1 * r2 + 4.0 * _EPS * abs(v) + _ETA
    return v, r


class _FloatPassFailed(Exception):
    """Raised internally when a sign cannot be certified at machine precision."""


def _mr_entry(element: CyclotomicElement, root: UnitRoot):
    ev = eval_with_bound(element, root)
    if ev is None:
        raise _FloatPassFailed
    return ev


# -- tridiagonal kernel ------------------------------------------------------


def _sturm_inertia_from_signs(signs: list[int]) -> InertiaTriple:
    """Inertia of an unreduced Hermitian tridiagonal from its minor signs.

    signs[i-1] is the sign of the i-th leading principal minor D_i; D_0 = 1.
    Strict interlacing of leading minors gives: a zero minor leaves the
    negative count unchanged at its own step and forces +1 at the next;
    otherwise a sign change adds one negative eigenvalue.  All eigenvalues
    are simple, so z = 1 exactly when the last minor vanishes.
    """
    m = len(signs)
    neg = 0
    prev_sign = 1
    prev_zero = False
    for s in signs:
        if s == 0:
            if prev_zero:
                raise InternalInconsistencyError(
                    "two consecutive zero minors in an unreduced tridiagonal form"
                )
            prev_zero = True
        elif prev_zero:
            neg += 1
            prev_zero = False
            prev_sign = s
        else:
            if s != prev_sign:
                neg += 1
            prev_sign = s
    zero = 1 if signs[-1] == 0 else 0
    return InertiaTriple(m - neg - zero, zero, neg, certified=True)


def _tridiag_float_signs(diag, off, root) -> list | None:
    """Per-minor signs from a sound machine-float Sturm pass.

    Returns a list with +1/-1 where certified and None where the interval
    straddles zero (exact zeros of intermediate minors are routine on
    root-of-unity grids), or None outright when evaluation overflows.
    The running pair is renormalized by exact powers of two so exponential
    minor growth or decay cannot erode relative precision, and radii
    recover after passing a near-zero minor, so later signs stay sound.
    """
    try:
        a = []
        for e in diag:
            v, r = _mr_entry(e, root)
            a.append((v.real, r))
        es = []
        for b in off:
            v, r = _mr_entry(b, root)
            av = abs(v)
            es.append(_mr_mul(av, r, av, r))
    except _FloatPassFailed:
        return None
    signs = []
    d2v, d2r = 1.0, 0.0
    d1v, d1r = a[0]
    for i in range(1, len(a) + 1):
        if abs(d1v) > d1r:
            signs.append(1 if d1v > 0 else -1)
        else:
            signs.append(None)
        if i == len(a):
            break
        t1 = _mr_mul(a[i][0], a[i][1], d1v, d1r)
        t2 = _mr_mul(es[i - 1][0], es[i - 1][1], d2v, d2r)
        d2v, d2r = d1v, d1r
        d1v, d1r = _mr_sub(t1[0], t1[1], t2[0], t2[1])
        if not math.isfinite(d1v) or not math.isfinite(d1r):
            return None
        mx = max(abs(d1v), abs(d2v))
        if mx > 0.0 and not (0.25 <= mx <= 4.0):
            s = 2.0 ** -math.frexp(mx)[1]
            d1v, d1r, d2v, d2r = d1v * s, d1r * s, d2v * s, d2r * s
    return signs


@lru_cache(maxsize=None)
def _minor_chain(diag: tuple, off: tuple) -> tuple:
    """Exact leading principal minors D_1..D_m of an unreduced tridiagonal.

    D_i = a_i D_{i-1} - |b_{i-1}|^2 D_{i-2}.  Like the entries themselves,
    the chain depends only on the conductor, so it is shared by every
    evaluation point k/den.
    """
    chain = []
    d2 = diag[0].field.one()
    d1 = diag[0]
    chain.append(d1)
    for i in range(1, len(diag)):
        nrm = off[i - 1] * off[i - 1].conjugate()
        d2, d1 = d1, diag[i] * d1 - nrm * d2
        chain.append(d1)
    return tuple(chain)


def _tridiag_inertia_exact(diag, off, root) -> InertiaTriple:
    """Exact inertia of an unreduced Hermitian tridiagonal block.

    Float-certified minor signs are kept; only ambiguous indices are
    resolved against the exact minor chain (symbolic zero test first,
    interval refinement only for genuinely tiny nonzero values).
    """
    signs = _tridiag_float_signs(diag, off, root)
    if signs is None:
        signs = [None] * len(diag)
    if any(s is None for s in signs):
        chain = _minor_chain(tuple(diag), tuple(off))
        for i, s in enumerate(signs):
            if s is None:
                if chain[i].is_zero:
                    signs[i] = 0
                else:
                    signs[i] = certified_sign(chain[i], root)[0]
    return _sturm_inertia_from_signs(signs)


# -- generic elimination ------------------------------------------------------


def _generic_float_pass(entries, root) -> InertiaTriple | None:
    """Certified machine-float pivoted elimination; None on any ambiguity.

    Works on pivot-scaled Schur complements so the recurrence mirrors the
    exact path; a completed pass certifies a nonsingular form (z = 0).
    """
    size = len(entries)
    try:
        mat = [[_mr_entry(entries[i][j], root) for j in range(size)] for i in range(size)]
    except _FloatPassFailed:
        return None
    p = n = 0
    sigma = 1
    while mat:
        size = len(mat)
        best = None
        for i in range(size):
            v, r = mat[i][i]
            re = v.real
            if abs(re) > r + size * _ETA:
                if best is None or abs(re) > best[0]:
                    best = (abs(re), i, 1 if re > 0 else -1)
        if best is None:
            return None
        _, j, s = best
        contribution = sigma * s
        if contribution > 0:
            p += 1
        else:
            n += 1
        sigma = contribution
        piv = mat[j][j]
        rest = [k for k in range(size) if k != j]
        new = []
        peak = 0.0
        for a_i in rest:
            row = []
            for b_i in rest:
                t1 = _mr_mul(piv[0], piv[1], *mat[a_i][b_i])
                t2 = _mr_mul(*mat[a_i][j], *mat[j][b_i])
                val = _mr_sub(t1[0], t1[1], t2[0], t2[1])
                if not math.isfinite(val[0].real) or not math.isfinite(val[1]):
                    return None
                peak = max(peak, abs(val[0]))
                row.append(val)
            new.append(row)
        # Renormalize by a power of two: pivot scaling is exponential otherwise.
        if new and peak > 0.0 and not (0.25 <= peak <= 4.0):
            s = 2.0 ** -math.frexp(peak)[1]
            new = [[(v * s, r * s) for v, r in row] for row in new]
        mat = new
    return InertiaTriple(p, 0, n, certified=True)


def _generic_inertia_exact(entries, root) -> InertiaTriple:
    """Exact pivoted elimination over the cyclotomic ring.

    Pivot: greatest-magnitude (by certified midpoint) nonzero diagonal
    entry; if the whole diagonal is zero, a 2x2 off-diagonal block step
    contributes (1, 0, 1).  Schur complements are scaled by the pivot to
    stay division-free; the sigma flag un-flips the inertia contributions
    when an accumulated scale is negative.
    """
    p = n = z = 0
    sigma = 1
    active = [list(row) for row in entries]
    while active:
        size = len(active)
        best = None
        for i in range(size):
            e = active[i][i]
            if not e.is_zero:
                s, approx = certified_sign(e, root)
                if s == 0:
                    raise InternalInconsistencyError("nonzero residue evaluated to zero")
                if best is None or approx > best[0]:
                    best = (approx, i, s)
        if best is not None:
            _, j, s = best
            contribution = sigma * s
            if contribution > 0:
                p += 1
            else:
                n += 1
            sigma = contribution
            piv = active[j][j]
            rest = [k for k in range(size) if k != j]
            active = [
                [piv * active[a][b] - active[a][j] * active[j][b] for b in rest]
                for a in rest
            ]
            continue
        # Whole diagonal is exactly zero.
        pos = None
        for i in range(size):
            for j in range(i + 1, size):
                if not active[i][j].is_zero:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            z += size
            break
        i, j = pos
        p += 1
        n += 1
        h = active[i][j]
        hbar = active[j][i]
        nrm = h * hbar
        rest = [k for k in range(size) if k not in (i, j)]
        active = [
            [
                nrm * active[a][b]
                - h * active[a][i] * active[j][b]
                - hbar * active[a][j] * active[i][b]
                for b in rest
            ]
            for a in rest
        ]
    return InertiaTriple(p, z, n, certified=True)


def _inertia_exact_impl(entries, tridiag: bool, root: UnitRoot) -> InertiaTriple:
    m = len(entries)
    if m == 0:
        return InertiaTriple(0, 0, 0, certified=True)
    if not tridiag:
        res = _generic_float_pass(entries, root)
        if res is not None:
            return res
        return _generic_inertia_exact(entries, root)
    # Split at symbolically-zero off-diagonals into unreduced blocks.
    p = z = n = 0
    start = 0
    for end in range(m):
        if end == m - 1 or entries[end][end + 1].is_zero:
            if end == start:
                s, _ = certified_sign(entries[start][start], root)
                if s > 0:
                    p += 1
                elif s < 0:
                    n += 1
                else:
                    z += 1
            else:
                diag = [entries[i][i] for i in range(start, end + 1)]
                off = [entries[i][i + 1] for i in range(start, end)]
                t = _tridiag_inertia_exact(diag, off, root)
                p, z, n = p + t.positive, z + t.zero, n + t.negative
            start = end + 1
    return InertiaTriple(p, z, n, certified=True)


def _inertia_exact(form: HermitianForm) -> InertiaTriple:
    m = form.size
    entries = form.entries
    tridiag = all(
        entries[i][j].is_zero
        for i in range(m)
        for j in range(m)
        if abs(i - j) >= 2
    )
    return _inertia_exact_impl(entries, tridiag, form.root)


def _inertia_from_numeric(h: np.ndarray) -> InertiaTriple:
    m = h.shape[0]
    if m == 0:
        return InertiaTriple(0, 0, 0, certified=True)
    eigs = np.linalg.eigvalsh(h)
    scale = float(np.max(np.abs(eigs))) if m else 0.0
    tau_zero = FLOAT_ZERO_FACTOR * _EPS * scale
    tau_cert = FLOAT_CERT_FACTOR * _EPS * scale
    p = int(np.sum(eigs > tau_zero))
    n = int(np.sum(eigs < -tau_zero))
    z = m - p - n
    nonzero = np.abs(eigs)[np.abs(eigs) > tau_zero]
    certified = bool(nonzero.size == 0 or np.min(nonzero) > tau_cert)
    return InertiaTriple(p, z, n, certified=certified)


def inertia(form: HermitianForm, mode: str = "exact") -> InertiaTriple:
    """Inertia triple of a Hermitian form.

    Exact mode is always certified; float mode certifies only when every
    eigenvalue classified nonzero clears 10^6 * eps * norm.
    """
    if mode == "exact":
        return _inertia_exact(form)
    if mode == "float":
        return _inertia_from_numeric(form.to_numeric())
    raise InvalidParameterError(f"mode must be 'exact' or 'float', got {mode!r}")


def _numeric_hermitian(a: SeifertMatrix, root: UnitRoot) -> np.ndarray:
    omega = root.to_complex()
    arr = np.array(a.entries, dtype=complex).reshape(a.size, a.size)
    h = (1 - omega) * arr + (1 - omega.conjugate()) * arr.T
    return (h + h.conj().T) / 2.0


@dataclass(frozen=True)
class SignatureResult:
    value: int
    inertia: InertiaTriple
    singular: bool
    certified: bool


@lru_cache(maxsize=None)
def _signature_exact_cached(a: SeifertMatrix, num: int, den: int) -> InertiaTriple:
    rows, tridiag = _herm_entries_cached(a, den)
    return _inertia_exact_impl(rows, tridiag, UnitRoot(num, den))


def signature_details(a: SeifertMatrix, root: UnitRoot, mode: str = "exact") -> SignatureResult:
    """Signature with its inertia triple, singularity and certification flags."""
    if root.is_one:
        triple = InertiaTriple(0, a.size, 0, certified=True)
        return SignatureResult(0, triple, a.size > 0, True)
    if mode == "exact":
        triple = _signature_exact_cached(a, root.num, root.den)
    elif mode == "float":
        triple = _inertia_from_numeric(_numeric_hermitian(a, root))
    else:
        raise InvalidParameterError(f"mode must be 'exact' or 'float', got {mode!r}")
    return SignatureResult(triple.signature, triple, triple.zero > 0, triple.certified)


def levine_tristram(a: SeifertMatrix, root: UnitRoot, mode: str = "exact") -> int:
    """sigma_K(omega): signature of (1-w)A + (1-conj(w))A^T; 0 at w = 1."""
    return signature_details(a, root, mode).value


# -- Alexander polynomial -----------------------------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += c * cb
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division in Z[t]; top-down long division, each step must divide."""
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    lead = den[-1]
    dn = len(den) - 1
    if len(num) == 1 and num[0] == 0:
        return [0]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[i - dn] = q
            base = i - dn
            for j, dj in enumerate(den):
                num[base + j] -= q * dj
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def alexander_polynomial(a: SeifertMatrix) -> tuple[int, ...]:
    """det(A^T - t A) in Z[t] (ascending coefficients; 1 for the empty matrix)."""
    m = a.size
    if m == 0:
        return (1,)
    mat = [
        [[a.entries[j][i], -a.entries[i][j]] for j in range(m)]
        for i in range(m)
    ]
    tridiag = all(
        a.entries[i][j] == 0 and a.entries[j][i] == 0
        for i in range(m)
        for j in range(m)
        if abs(i - j) >= 2
    )
    if tridiag:
        prev2, prev1 = [1], mat[0][0]
        for i in range(1, m):
            term1 = _poly_mul(mat[i][i], prev1)
            term2 = _poly_mul(_poly_mul(mat[i][i - 1], mat[i - 1][i]), prev2)
            prev2, prev1 = prev1, _poly_trim(_poly_sub(term1, term2))
        return tuple(_poly_trim(prev1))
    # Fraction-free Bareiss over Z[t].
    sign = 1
    prev = [1]
    for k in range(m - 1):
        if _poly_trim(list(mat[k][k])) == [0]:
            for i in range(k + 1, m):
                if _poly_trim(list(mat[i][k])) != [0]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return (0,)
        pivot = mat[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                num = _poly_sub(_poly_mul(mat[i][j], pivot), _poly_mul(mat[i][k], mat[k][j]))
                mat[i][j] = _poly_divexact(num, prev)
            mat[i][k] = [0]
        prev = pivot
    out = [sign * c for c in mat[m - 1][m - 1]]
    return tuple(_poly_trim(out))


def alexander_at(a: SeifertMatrix, root: UnitRoot) -> CyclotomicElement:
    """det(A^T - w A) as an exact cyclotomic element; zero iff the Hermitian
    form is singular at w (w must not be 1)."""
    if root.is_one:
        raise InvalidParameterError("alexander_at is undefined at omega = 1")
    fld = cyc_field(root.den)
    poly = alexander_polynomial(a)
    acc = fld.zero_list()
    for c in reversed(poly):
        acc = fld.mul_x_list(acc)
        acc[0] += c
    return fld.element(acc)


# -- averaged signatures -------------------------------------------------------


@lru_cache(maxsize=None)
def _primitive_signature_sum_exact(a: SeifertMatrix, den: int) -> int:
    """Sum of sigma over the primitive den-th roots of unity (den > 1)."""
    if den == 2:
        return levine_tristram(a, UnitRoot(1, 2))
    total = 0
    for k in range(1, (den + 1) // 2):
        if math.gcd(k, den) == 1:
            total += 2 * levine_tristram(a, UnitRoot(k, den))
    return total


def _primitive_signature_sum_float(a: SeifertMatrix, den: int) -> tuple[int, bool]:
    if den == 2:
        res = signature_details(a, UnitRoot(1, 2), "float")
        return res.value, res.certified
    total, certified = 0, True
    for k in range(1, (den + 1) // 2):
        if math.gcd(k, den) == 1:
            res = signature_details(a, UnitRoot(k, den), "float")
            total += 2 * res.value
            certified = certified and res.certified
    return total, certified


@dataclass(frozen=True)
class AvgSignatureResult:
    value: Fraction
    certified: bool


def avg_signature_details(a: SeifertMatrix, d: int, mode: str = "exact") -> AvgSignatureResult:
    """Average of sigma over the d-th roots of unity other than 1, divided by d.

    Grouping the k/d grid by reduced denominator caches each primitive-root
    sum once; conjugation symmetry halves the work.
    """
    if d < 1:
        raise InvalidParameterError(f"root count d must be positive, got {d}")
    if a.size == 0 or d == 1:
        return AvgSignatureResult(Fraction(0), True)
    total = 0
    certified = True
    for dd in _divisors(d):
        if dd == 1:
            continue
        if mode == "exact":
            total += _primitive_signature_sum_exact(a, dd)
        else:
            s, cert = _primitive_signature_sum_float(a, dd)
            total += s
            certified = certified and cert
    return AvgSignatureResult(Fraction(total, d), certified)


def avg_signature(a: SeifertMatrix, d: int, mode: str = "exact") -> Fraction:
    return avg_signature_details(a, d, mode).value


# -- torus-knot closed forms ----------------------------------------------------


def litherland_torus_signature(n: int, x: Fraction) -> int:
    """Closed-form signature of the (2, 2n+1) torus knot at e^{2 pi i x},
    for rational x in (0, 1/2]: 2n - 2*floor((2n+1)(1/2 - x))."""
    if n < 1:
        raise InvalidParameterError(f"torus parameter must be >= 1, got {n}")
    x = Fraction(x)
    if not (0 < x <= Fraction(1, 2)):
        raise InvalidParameterError(f"x must lie in (0, 1/2], got {x}")
    return 2 * n - 2 * math.floor((2 * n + 1) * (Fraction(1, 2) - x))


def torus_avg_lower_bound(n: int, d: int) -> Fraction:
    """(1 - 1/d^2) n - (d-1)/(2d): lower bound for the torus-knot signature average."""
    if n < 1 or d < 2:
        raise InvalidParameterError(f"need n >= 1 and d >= 2, got n={n}, d={d}")
    return Fraction(n * (d * d - 1), d * d) - Fraction(d - 1, 2 * d)


def jn_avg_lower_bound(n: int, d: int) -> Fraction:
    """(1 - 1/d^2) n - (5d-1)/(2d): twist-family average bound (nonnegative
    for n >= 3, d >= 2; zero only at n = 3, d = 2)."""
    if n < 1 or d < 2:
        raise InvalidParameterError(f"need n >= 1 and d >= 2, got n={n}, d={d}")
    return Fraction(n * (d * d - 1), d * d) - Fraction(5 * d - 1, 2 * d)
