"""Integer polynomial recurrences, root isolation, and spectral verifiers.

Exact layer: the polynomial family p_j = (x - 2) p_(j-1) - p_(j-2) with two
seed choices (poly_f, poly_g), characteristic polynomials by fraction-free
determinants plus interpolation at integer points, and the smallest positive
root of poly_g isolated with exact integer sign evaluations before a final
bisection.

Numerical layer: dense symmetric eigensolves with a residual contract,
tolerance-grouped spectrum reports, Kronecker-sum composition, and the
interlacing / symmetry / nonsingularity checks used by the verifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Sequence

import numpy as np

from .errors import BracketingError, DimensionMismatchError, EigenSolveError, SizeCapError
from .grid import DEFAULT_SIZE_CAP
from .signed import signed_grid_matrix

DEFAULT_RESIDUAL_TOL = 1e-10
DEFAULT_GROUP_TOL = 1e-8
DEFAULT_EIG_DIM_CAP = 4096


# -------------------------- exact polynomials ------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, coefficients ascending by degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            out[i] -= v
        return IntPolynomial(tuple(out))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPolynomial(tuple(out))

    def evaluate(self, x):
        """Horner evaluation; works for int, float, or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


_X_MINUS_2 = IntPolynomial((-2, 1))


def _recurrence(n: int, seed1: tuple[int, ...]) -> IntPolynomial:
    p_prev = IntPolynomial((1,))
    if n == 0:
        return p_prev
    p = IntPolynomial(seed1)
    for _ in range(n - 1):
        p_prev, p = p, _X_MINUS_2 * p - p_prev
    return p


def poly_f(n: int) -> IntPolynomial:
    """Family member with seeds 1 and x - 2."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _recurrence(n, (-2, 1))


def poly_g(n: int) -> IntPolynomial:
    """Family member with seeds 1 and x - 1; its square is the
    characteristic polynomial of the squared even base matrix."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _recurrence(n, (-1, 1))


def fg_identity_check(n: int) -> bool:
    """Coefficientwise check that poly_g(n) = poly_f(n) + poly_f(n-1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return poly_g(n) == poly_f(n) + poly_f(n - 1)


# ----------------------------- root isolation ------------------------------


def _sign_at_rational(coeffs: Sequence[int], num: int, den: int) -> int:
    """Exact sign of p(num/den) for den > 0, by integer Horner."""
    acc = coeffs[-1]
    dpow = 1
    for c in reversed(coeffs[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return (acc > 0) - (acc < 0)


def beta(n: int, tol: float = 1e-12) -> float:
    """Smallest positive root of poly_g(n), within +-tol.

    All n roots lie in (0, 4): the value at 0 is +-1 and never 0, so the
    scan walks a rational grid over (0, 4], verifies that exactly n sign
    changes (or exact hits) appear, and refines the grid tenfold on a
    shortfall instead of failing silently.  The first bracket is then
    bisected in exact rational arithmetic; only the final midpoint is
    rounded to float.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if tol <= 0:
        raise ValueError(f"need tol > 0, got {tol}")
    coeffs = poly_g(n).coeffs

    first = None
    den = 1000
    for _ in range(4):
        prev_sign: int | None = _sign_at_rational(coeffs, 0, 1)
        count = 0
        first = None
        for i in range(1, 4 * den + 1):
            s = _sign_at_rational(coeffs, i, den)
            if s == 0:
                count += 1
                if first is None:
                    first = ("hit", i, den)
                prev_sign = None
            elif prev_sign is None:
                prev_sign = s
            elif s != prev_sign:
                count += 1
                if first is None:
                    first = ("bracket", i, den)
                prev_sign = s
        if count == n:
            break
        den *= 10
    else:
        raise BracketingError(f"expected {n} sign changes of poly_g({n}) in (0, 4], found {count}")

    kind, i, den = first
    if kind == "hit":
        return i / den
    lo = Fraction(i - 1, den)
    hi = Fraction(i, den)
    sign_lo = _sign_at_rational(coeffs, lo.numerator, lo.denominator)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign_at_rational(coeffs, mid.numerator, mid.denominator)
        if s == 0:
            return float(mid)
        if s == sign_lo:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def beta_side_of(n: int, q: Fraction) -> int:
    """Exact side of q relative to the smallest positive root of poly_g(n).

    Returns +1 if the root exceeds q, 0 if q is the root, -1 if the root is
    below q.  Only valid for q in (0, second positive root), which holds
    whenever q is known to sit near the smallest root.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    coeffs = poly_g(n).coeffs
    s0 = _sign_at_rational(coeffs, 0, 1)
    sq = _sign_at_rational(coeffs, q.numerator, q.denominator)
    if sq == 0:
        return 0
    return 1 if sq == s0 else -1


# ------------------------ exact characteristic polys -----------------------


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [[int(v) for v in row] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(n - 1):
        if a[col][col] == 0:
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly_exact(mat) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) of an integer matrix, exactly.

    Evaluates the determinant at the integers 0..dim and interpolates in
    rational arithmetic; the result must come out integral.
    """
    m = np.asarray(mat)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("charpoly_exact expects a square matrix")
    rows = [[int(v) for v in row] for row in m.tolist()]
    d = len(rows)
    xs = list(range(d + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - rows[i][j] for j in range(d)] for i in range(d)]
        ys.append(bareiss_det(shifted))

    # Newton divided differences, then expansion to the monomial basis.
    dd = [Fraction(y) for y in ys]
    for level in range(1, d + 1):
        for i in range(d, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * (d + 1)
    basis = [Fraction(1)]
    for j, c in enumerate(dd):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            new_basis[i] -= b * xs[j]
            new_basis[i + 1] += b
        basis = new_basis
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer interpolated coefficient {c}")
        out.append(int(c))
    return IntPolynomial(tuple(out))


def charpoly_base_square_check(n: int) -> bool:
    """Exact check: charpoly of the squared even base matrix equals poly_g(n)^2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    base = signed_grid_matrix(2 * n, 1).to_dense()
    squared = base @ base
    g = poly_g(n)
    return charpoly_exact(squared) == g * g


# ----------------------------- spectrum reports ----------------------------


@dataclass(frozen=True)
class SpectrumReport:
    """Sorted eigenvalues with tolerance-grouped summary statistics."""

    eigenvalues: tuple[float, ...]
    group_tol: float
    zero_multiplicity: int
    min_positive: float | None
    symmetry_defect: float

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def spectrum_report(values, group_tol: float = DEFAULT_GROUP_TOL) -> SpectrumReport:
    vals = sorted(float(v) for v in values)
    zero_mult = sum(1 for v in vals if abs(v) < group_tol)
    positives = [v for v in vals if v >= group_tol]
    min_pos = positives[0] if positives else None
    defect = 0.0
    n = len(vals)
    for i in range(n):
        defect = max(defect, abs(vals[i] + vals[n - 1 - i]))
    return SpectrumReport(
        eigenvalues=tuple(vals),
        group_tol=group_tol,
        zero_multiplicity=zero_mult,
        min_positive=min_pos,
        symmetry_defect=defect,
    )


def eigenvalues_sym(
    mat,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    group_tol: float = DEFAULT_GROUP_TOL,
    dim_cap: int = DEFAULT_EIG_DIM_CAP,
) -> SpectrumReport:
    """Full spectrum of a dense symmetric matrix with a residual guarantee.

    Requires max|M - M^T| <= 1e-12.  After the solve, every eigenpair must
    satisfy ||M x - lambda x|| <= residual_tol * ||M||_F and the assembled
    Q Lambda Q^T must reproduce M to 1e-9 * ||M||_F, else EigenSolveError.
    """
    m = np.asarray(mat, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("eigenvalues_sym expects a square matrix")
    if m.shape[0] > dim_cap:
        raise SizeCapError(f"dim {m.shape[0]} exceeds eigensolver cap {dim_cap}")
    if m.size and np.max(np.abs(m - m.T)) > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    w, q = np.linalg.eigh(m)
    fro = float(np.linalg.norm(m))
    if fro > 0:
        resid = np.linalg.norm(m @ q - q * w, axis=0)
        if float(np.max(resid)) > residual_tol * fro:
            raise EigenSolveError(f"eigenpair residual {float(np.max(resid)):.3e} above contract")
        recon = float(np.linalg.norm(m - (q * w) @ q.T))
        if recon > 1e-9 * fro:
            raise EigenSolveError(f"reconstruction defect {recon:.3e} above contract")
    return spectrum_report(w.tolist(), group_tol)


def kron_sum_spectrum(sa: SpectrumReport, sb: SpectrumReport) -> SpectrumReport:
    """Multiset of all pairwise sums, the spectrum of I (x) A + B (x) I."""
    a = np.array(sa.eigenvalues)
    b = np.array(sb.eigenvalues)
    sums = np.add.outer(a, b).ravel()
    return spectrum_report(sums.tolist(), max(sa.group_tol, sb.group_tol))


def multiset_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Max pointwise gap between two sorted multisets; inf on size mismatch."""
    if len(a) != len(b):
        return float("inf")
    sa = sorted(a)
    sb = sorted(b)
    return max((abs(x - y) for x, y in zip(sa, sb)), default=0.0)


# ------------------------------- verifiers ---------------------------------


def symmetry_check(s: SpectrumReport, tol: float = DEFAULT_GROUP_TOL) -> bool:
    """True iff the spectrum is symmetric about 0 within tol."""
    return s.symmetry_defect <= tol


def interlacing_check(a_mat, b_mat, tol: float = DEFAULT_GROUP_TOL) -> bool:
    """Eigenvalue interlacing between a symmetric matrix and a principal
    submatrix: lambda_i >= mu_i >= lambda_(n-m+i) within tol, both sorted
    descending."""
    big = np.sort(np.linalg.eigvalsh(np.asarray(a_mat, dtype=float)))[::-1]
    small = np.sort(np.linalg.eigvalsh(np.asarray(b_mat, dtype=float)))[::-1]
    n = len(big)
    m = len(small)
    if m > n:
        raise DimensionMismatchError("submatrix larger than the host matrix")
    for i in range(m):
        if not (big[i] + tol >= small[i] >= big[n - m + i] - tol):
            return False
    return True


def min_positive_eig_even(
    n: int,
    k: int,
    group_tol: float = DEFAULT_GROUP_TOL,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> float:
    """Smallest positive eigenvalue of the even signed matrix on [2n]^k."""
    a = signed_grid_matrix(2 * n, k, size_cap)
    rep = eigenvalues_sym(a.to_dense(), group_tol=group_tol)
    if rep.min_positive is None:
        raise EigenSolveError("no positive eigenvalue found")
    return rep.min_positive


def nonsingularity_check_even(n: int, k: int, group_tol: float = DEFAULT_GROUP_TOL) -> bool:
    """True iff the even signed matrix has no eigenvalue within group_tol of 0.

    For k = 1 the check is additionally settled in exact arithmetic: the
    tridiagonal base has determinant +-1.
    """
    a = signed_grid_matrix(2 * n, k)
    rep = eigenvalues_sym(a.to_dense(), group_tol=group_tol)
    ok = rep.zero_multiplicity == 0 and min(abs(v) for v in rep.eigenvalues) > group_tol
    if k == 1:
        ok = ok and abs(bareiss_det(a.to_dense().tolist())) == 1
    return ok


@dataclass(frozen=True)
class Odd3SpectrumResult:
    k: int
    zero_multiplicity: int
    min_positive: float | None
    symmetry_defect: float
    closure_defect: float
    passed: bool


def odd3_spectrum_check(k: int, tol: float = DEFAULT_GROUP_TOL) -> Odd3SpectrumResult:
    """Verify the three spectral facts of the m = 3 signed matrix family.

    zero eigenvalue of multiplicity exactly 1, minimum positive eigenvalue
    sqrt(2), and the one-step closure rule: the spectrum at level k equals
    {lambda} U {+-sqrt(2 + lambda^2)} over the spectrum at level k - 1.
    """
    rep = eigenvalues_sym(signed_grid_matrix(3, k).to_dense(), group_tol=tol)
    if k == 1:
        expected = [-sqrt(2.0), 0.0, sqrt(2.0)]
    else:
        prev = eigenvalues_sym(signed_grid_matrix(3, k - 1).to_dense(), group_tol=tol)
        expected = list(prev.eigenvalues)
        for lam in prev.eigenvalues:
            grown = sqrt(2.0 + lam * lam)
            expected.extend((grown, -grown))
    closure = multiset_distance(rep.eigenvalues, expected)
    passed = (
        rep.zero_multiplicity == 1
        and rep.min_positive is not None
        and abs(rep.min_positive - sqrt(2.0)) <= tol
        and rep.symmetry_defect <= tol
        and closure <= tol
    )
    return Odd3SpectrumResult(
        k=k,
        zero_multiplicity=rep.zero_multiplicity,
        min_positive=rep.min_positive,
        symmetry_defect=rep.symmetry_defect,
        closure_defect=closure,
        passed=passed,
    )


# --------------------------- spectrum composition --------------------------


def base_square_spectrum(m: int, group_tol: float = DEFAULT_GROUP_TOL) -> SpectrumReport:
    """Spectrum of the squared base matrix on the m-vertex path."""
    base = signed_grid_matrix(m, 1).to_dense()
    return eigenvalues_sym(base @ base, group_tol=group_tol)


def composed_square_spectrum(m: int, k: int, group_tol: float = DEFAULT_GROUP_TOL) -> SpectrumReport:
    """Spectrum of the squared level-k matrix by k-fold Kronecker-sum
    composition of the base square spectrum (no dense level-k solve)."""
    s1 = base_square_spectrum(m, group_tol)
    s = s1
    for _ in range(k - 1):
        s = kron_sum_spectrum(s, s1)
    return s


def square_compose_check(
    m: int,
    k: int,
    tol: float = 1e-7,
    group_tol: float = DEFAULT_GROUP_TOL,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> tuple[bool, float]:
    """Compare the dense spectrum of the squared level-k matrix against the
    Kronecker composition, as sorted multisets.  Returns (ok, distance)."""
    a = signed_grid_matrix(m, k, size_cap).to_dense()
    dense = eigenvalues_sym(a @ a, group_tol=group_tol)
    composed = composed_square_spectrum(m, k, group_tol)
    dist = multiset_distance(dense.eigenvalues, composed.eigenvalues)
    return dist <= tol, dist


def signed_spectrum_from_squares(
    squares: SpectrumReport, group_tol: float = DEFAULT_GROUP_TOL, pair_tol: float = 1e-6
) -> SpectrumReport:
    """Reconstruct a symmetric signed spectrum from the multiset of its squares.

    Values below group_tol map to zeros; the remaining values must pair up
    (even multiplicities) and each pair contributes +-sqrt(value).
    """
    vals = sorted(squares.eigenvalues)
    zeros = [v for v in vals if v < group_tol]
    pos = [v for v in vals if v >= group_tol]
    if len(pos) % 2 != 0:
        raise ValueError("positive square values do not pair up")
    out = [0.0] * len(zeros)
    for i in range(0, len(pos), 2):
        lo, hi = pos[i], pos[i + 1]
        if hi - lo > pair_tol * max(1.0, hi):
            raise ValueError(f"unpaired square values {lo} vs {hi}")
        root = sqrt((lo + hi) / 2.0)
        out.extend((root, -root))
    return spectrum_report(out, group_tol)
