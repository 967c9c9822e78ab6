"""Spectral radii of induced actions, with certified rational enclosures.

The pipeline is exact end to end:

  * characteristic polynomials come from the division-free Berkowitz
    scheme, so a matrix of ints yields an IntPolynomial with no rounding;
  * powers of x and cyclotomic factors are stripped exactly; if nothing is
    left, the spectral radius is exactly 1 (Kronecker's theorem);
  * otherwise mpmath supplies root *approximations* which are then
    certified in rational arithmetic: each approximation z gets a radius
    R = n|p(z)/p'(z)| (evaluated exactly -- z is dyadic), and pairwise
    disjointness of the disks proves each contains exactly one true root.
    The spectral radius then lies in [max(|z|-R), max(|z|+R)].

Floating point is only ever used to *guess*; every reported bound is an
exact Fraction that has been proved correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Sequence, Tuple

import mpmath as mp
from mpmath.libmp.libhyper import NoConvergence

from .errors import LengthMismatch, ToleranceUnreachable
from .polys import (
    IntPolynomial,
    cauchy_root_bound,
    is_cyclotomic_product,
    squarefree_part,
    strip_unit_circle_factors,
)

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"

DEFAULT_TOL = Fraction(1, 10**9)

_DPS_LADDER = (60, 120, 240, 480)
_LOG_PAD = Fraction(1, 10**45)


# ------------------------------------------------------------------ charpoly


def char_poly(matrix: Sequence[Sequence[int]]) -> IntPolynomial:
    """Characteristic polynomial det(xI - M), monic, ascending coeffs.

    Berkowitz's division-free algorithm: iterate over leading principal
    submatrices, each step a Toeplitz convolution with the column
    [1, -M[s][s], -R*S, -R*A*S, ...] where A, R, S are the previous block,
    the new row and the new column.
    """
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    for row in matrix:
        if len(row) != n:
            raise LengthMismatch("characteristic polynomial needs a square matrix")
    # coefficients in descending order, starting from the 1x1 block
    coeffs = [1, -matrix[0][0]]
    for s in range(1, n):
        a_block = [row[:s] for row in matrix[:s]]
        row_new = matrix[s][:s]
        col_new = [matrix[i][s] for i in range(s)]
        toeplitz = [1, -matrix[s][s]]
        vec = list(col_new)
        for _ in range(s):
            toeplitz.append(-sum(row_new[i] * vec[i] for i in range(s)))
            vec = [sum(a_block[i][j] * vec[j] for j in range(s)) for i in range(s)]
        new_coeffs = [0] * (s + 2)
        for i, tv in enumerate(toeplitz):
            if tv:
                for j, cv in enumerate(coeffs):
                    if i + j < s + 2:
                        new_coeffs[i + j] += tv * cv
        coeffs = new_coeffs
    return IntPolynomial(tuple(reversed(coeffs)))


# ----------------------------------------------------------------- enclosure


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # tolerances may arrive as floats; take their decimal reading
        return Fraction(repr(value))
    raise TypeError("cannot interpret %r as an exact number" % (value,))


@dataclass(frozen=True)
class Enclosure:
    """A closed interval [lo, hi] of exact rationals, lo <= hi, lo >= 0.

    ``exact_one`` is only ever true for values proved equal to 1 by the
    cyclotomic test; the floating-point path cannot produce it.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("enclosure with lo > hi")
        if self.lo < 0:
            raise ValueError("enclosures here are for nonnegative quantities")

    @staticmethod
    def exactly(value) -> "Enclosure":
        v = _as_fraction(value)
        return Enclosure(v, v)

    @staticmethod
    def exactly_one() -> "Enclosure":
        return Enclosure(Fraction(1), Fraction(1))

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def exact_one(self) -> bool:
        return self.exact and self.lo == 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        v = _as_fraction(value)
        return self.lo <= v <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal_bounds(self, digits: int = 12) -> Tuple[str, str]:
        """Outward-rounded decimal strings: the printed interval always
        contains the exact one."""
        return (
            directed_decimal(self.lo, digits, round_up=False),
            directed_decimal(self.hi, digits, round_up=True),
        )

    def __repr__(self):
        if self.exact:
            return "Enclosure(exactly %s)" % self.lo
        return "Enclosure([%s, %s] width %.3e)" % (self.lo, self.hi, float(self.width))


def directed_decimal(q: Fraction, digits: int, round_up: bool) -> str:
    """Decimal string of q with ``digits`` fractional digits, rounded toward
    +inf or -inf (never to-nearest, so bounds stay bounds)."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = q * 10**digits
    n = scaled.numerator // scaled.denominator  # floor
    if round_up and n * scaled.denominator != scaled.numerator:
        n += 1
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return sign + str(n)
    whole, frac = divmod(n, 10**digits)
    return "%s%d.%0*d" % (sign, whole, digits, frac)


def enc_pow(e: Enclosure, n: int) -> Enclosure:
    if n < 0:
        raise ValueError("nonnegative powers only")
    return Enclosure(e.lo**n, e.hi**n)


def enc_mul(a: Enclosure, b: Enclosure) -> Enclosure:
    # all quantities are >= 0, so endpoints multiply monotonically
    return Enclosure(a.lo * b.lo, a.hi * b.hi)


def ge_status(a: Enclosure, b: Enclosure) -> str:
    """Decide a >= b with three-valued interval logic."""
    if a.lo >= b.hi:
        return PASS
    if a.hi < b.lo:
        return FAIL
    return INDETERMINATE


def eq_status(a: Enclosure, b: Enclosure, provably_equal: bool = False) -> str:
    """Decide a == b; ``provably_equal`` short-circuits when equality is
    known by an exact argument (identical quantity, equal char polys)."""
    if provably_equal:
        return PASS
    if a.exact and b.exact:
        return PASS if a.lo == b.lo else FAIL
    if a.hi < b.lo or b.hi < a.lo:
        return FAIL
    return INDETERMINATE


# ------------------------------------------------- exact complex arithmetic

_CFrac = Tuple[Fraction, Fraction]


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("nonfinite float from mpmath")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def _eval_complex(p: IntPolynomial, z: _CFrac) -> _CFrac:
    re, im = Fraction(0), Fraction(0)
    zr, zi = z
    for c in reversed(p.coeffs):
        re, im = re * zr - im * zi + c, re * zi + im * zr
    return re, im


def _abs2(z: _CFrac) -> Fraction:
    return z[0] * z[0] + z[1] * z[1]


def _sqrt_lower(q: Fraction) -> Fraction:
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    return Fraction(isqrt(n * d), d)


def _sqrt_upper(q: Fraction) -> Fraction:
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    s = isqrt(n * d)
    if s * s == n * d:
        return Fraction(s, d)
    return Fraction(s + 1, d)


def _certified_radius_bounds(sf: IntPolynomial, approx_roots) -> Optional[Tuple[Fraction, Fraction]]:
    """Turn floating root approximations into proved bounds on the largest
    root modulus of the squarefree polynomial sf, or None if the
    approximations are not good enough to certify."""
    n = sf.degree
    deriv = sf.derivative()
    points: List[_CFrac] = []
    for r in approx_roots:
        # .real/.imag return the stored mpfs untouched; re-wrapping through
        # mp.mpf would round them at the *current* precision
        points.append((_mpf_to_fraction(r.real), _mpf_to_fraction(r.imag)))
    radii: List[Fraction] = []
    for z in points:
        pval2 = _abs2(_eval_complex(sf, z))
        if pval2 == 0:
            radii.append(Fraction(0))
            continue
        dval2 = _abs2(_eval_complex(deriv, z))
        if dval2 == 0:
            return None
        radii.append(_sqrt_upper(Fraction(n * n) * pval2 / dval2))
    # pairwise disjoint disks => exactly one true root per disk
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            gap2 = _abs2((points[i][0] - points[j][0], points[i][1] - points[j][1]))
            s = radii[i] + radii[j]
            if gap2 <= s * s:
                return None
    lo = hi = None
    for z, rad in zip(points, radii):
        m2 = _abs2(z)
        zlo = _sqrt_lower(m2) - rad
        zhi = _sqrt_upper(m2) + rad
        lo = zlo if lo is None or zlo > lo else lo
        hi = zhi if hi is None or zhi > hi else hi
    return lo, hi


def radius_enclosure(p: IntPolynomial, tol=DEFAULT_TOL) -> Enclosure:
    """Certified enclosure of the largest root modulus of a monic integer
    polynomial, to width <= tol.

    Exactly 1 (a zero-width enclosure) when the polynomial is a power of x
    times a product of cyclotomics.  Raises ValueError on pure powers of x
    (nilpotent spectrum; cannot arise from an invertible action), and
    ToleranceUnreachable if certification keeps failing at the highest
    working precision.
    """
    tol = _as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if not p.is_monic:
        raise ValueError("monic polynomial expected")
    xmult = p.trailing_zeros()
    shifted = p.shift_down(xmult)
    if shifted.degree == 0:
        raise ValueError("polynomial is a pure power of x; every root is zero")
    core, _, _ = strip_unit_circle_factors(shifted)
    if core.degree == 0:
        return Enclosure.exactly_one()
    sf = squarefree_part(core)
    upper = cauchy_root_bound(sf)
    best: Optional[Enclosure] = None
    for dps in _DPS_LADDER:
        try:
            with mp.workdps(dps):
                coeffs = [mp.mpf(c) for c in reversed(sf.coeffs)]
                roots = mp.polyroots(coeffs, maxsteps=200, extraprec=120)
        except NoConvergence:
            continue
        bounds = _certified_radius_bounds(sf, roots)
        if bounds is None:
            continue
        lo, hi = bounds
        # a monic integer polynomial with nonzero constant term has root
        # modulus product >= 1, so the largest modulus is >= 1
        lo = max(lo, Fraction(1))
        hi = min(hi, upper)
        if hi < lo:
            continue
        enc = Enclosure(lo, hi)
        if best is None or enc.width < best.width:
            best = enc
        if enc.width <= tol:
            # the core is non-cyclotomic, so by Kronecker the radius is
            # strictly above 1; a certified upper bound at 1 is a bug
            assert enc.hi > 1, "certified bound contradicts Kronecker"
            return enc
    raise ToleranceUnreachable(
        "could not certify the spectral radius to width %s (best achieved: %s)"
        % (tol, best.width if best is not None else "none"),
        best=best,
    )


def spectral_radius(matrix: Sequence[Sequence[int]], tol=DEFAULT_TOL) -> Enclosure:
    """Certified spectral radius of an integer matrix."""
    return radius_enclosure(char_poly(matrix), tol)


# ------------------------------------------------------------------- degrees


def _log_directed(x: Fraction, round_up: bool) -> Fraction:
    """ln(x) rounded outward; exact conversion of the mp result plus a pad
    far below any tolerance in play."""
    if x <= 0:
        raise ValueError("log of a nonpositive value")
    if x == 1:
        return Fraction(0)
    with mp.workdps(80):
        v = mp.log(mp.mpf(x.numerator)) - mp.log(mp.mpf(x.denominator))
        f = _mpf_to_fraction(v)
    return f + _LOG_PAD if round_up else f - _LOG_PAD


def entropy_enclosure(degrees: Sequence[Enclosure]) -> Enclosure:
    """log of the max degree.  Exactly zero iff every degree is exactly 1."""
    if not degrees:
        raise LengthMismatch("need at least one degree")
    if all(d.exact_one for d in degrees):
        return Enclosure(Fraction(0), Fraction(0))
    lo = max(d.lo for d in degrees)
    hi = max(d.hi for d in degrees)
    elo = max(_log_directed(lo, False), Fraction(0)) if lo > 0 else Fraction(0)
    ehi = _log_directed(hi, True)
    return Enclosure(elo, max(elo, ehi))


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees lambda_0..lambda_k of an action, with their char polys when
    they came from an actual matrix computation (synthetic sequences used
    in tests may omit them)."""

    k: int
    degrees: Tuple[Enclosure, ...]
    char_polys: Optional[Tuple[IntPolynomial, ...]]
    entropy: Enclosure

    def __post_init__(self):
        if len(self.degrees) != self.k + 1:
            raise LengthMismatch(
                "expected %d degrees, got %d" % (self.k + 1, len(self.degrees))
            )
        if self.char_polys is not None and len(self.char_polys) != self.k + 1:
            raise LengthMismatch("char_polys length must match degrees")

    @property
    def zero_entropy_proved(self) -> bool:
        return self.entropy.exact and self.entropy.lo == 0

    @property
    def positive_entropy_proved(self) -> bool:
        if self.char_polys is not None:
            return not all(is_cyclotomic_product(cp) for cp in self.char_polys)
        return self.entropy.lo > 0

    def degree(self, i: int) -> Enclosure:
        if not 0 <= i <= self.k:
            raise IndexError("degree index out of range")
        return self.degrees[i]


def degree_sequence(k: int, degrees: Sequence[Enclosure], char_polys=None) -> DegreeSequence:
    """Assemble a DegreeSequence, deriving the entropy enclosure."""
    degs = tuple(degrees)
    return DegreeSequence(
        k=k,
        degrees=degs,
        char_polys=None if char_polys is None else tuple(char_polys),
        entropy=entropy_enclosure(degs),
    )


def dynamical_degrees(action, tol=DEFAULT_TOL) -> DegreeSequence:
    """Degrees of a validated pullback action: lambda_p is the certified
    spectral radius of the induced matrix in degree p."""
    action.ensure_valid()
    k = action.ring.config.k
    polys = []
    degs = []
    for p in range(k + 1):
        cp = char_poly(action.induce(p))
        polys.append(cp)
        degs.append(radius_enclosure(cp, tol))
    return degree_sequence(k, degs, polys)


def entropy(action, tol=DEFAULT_TOL) -> Enclosure:
    """Topological entropy of the candidate action: log max_p lambda_p."""
    return dynamical_degrees(action, tol).entropy


# ----------------------------------------------------------- property report


@dataclass(frozen=True)
class PropertyCheck:
    family: str
    description: str
    status: str
    lhs: Enclosure
    rhs: Enclosure

    def line(self) -> str:
        return "[%s] %-14s %s" % (self.status, self.family, self.description)


@dataclass(frozen=True)
class PropertyReport:
    """Interval-verified inequalities between the degrees of an action and
    its inverse: lower bounds, log-concavity, domination by lambda_1, and
    the duality lambda_i(f) = lambda_{k-i}(f^-1)."""

    action_name: str
    k: int
    forward: DegreeSequence
    backward: DegreeSequence
    checks: Tuple[PropertyCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    @property
    def failures(self) -> Tuple[PropertyCheck, ...]:
        return tuple(c for c in self.checks if c.status == FAIL)

    @property
    def indeterminates(self) -> Tuple[PropertyCheck, ...]:
        return tuple(c for c in self.checks if c.status == INDETERMINATE)

    def summary(self) -> str:
        lines = [
            "degree properties of %s (k=%d): %s"
            % (self.action_name, self.k, "all pass" if self.ok else "NOT all pass")
        ]
        lines.extend("  " + c.line() for c in self.checks)
        return "\n".join(lines)


def _charpolys_equal(ds_a: DegreeSequence, i: int, ds_b: DegreeSequence, j: int) -> bool:
    if ds_a.char_polys is None or ds_b.char_polys is None:
        return False
    return ds_a.char_polys[i] == ds_b.char_polys[j]


def property_checks(forward: DegreeSequence, backward: DegreeSequence) -> Tuple[PropertyCheck, ...]:
    """The check list for a pair (degrees of f, degrees of f^-1).

    The inequality lambda_i^i >= lambda_1 is only claimed for i <= k-1: at
    i = k the left side is 1 and the claim is false whenever the entropy is
    positive.  (From log-concavity with g = log lambda, g(0) = g(k) = 0:
    i*g(i) >= g(1) needs i*(k-i) >= k-1, which holds exactly for
    1 <= i <= k-1.)
    """
    k = forward.k
    if backward.k != k:
        raise LengthMismatch("forward and backward sequences disagree on k")
    one = Enclosure.exactly_one()
    checks: List[PropertyCheck] = []

    for i in range(k + 1):
        lam = forward.degree(i)
        status = ge_status(lam, one)
        checks.append(
            PropertyCheck(
                family="lower-bound",
                description="lambda_%d >= 1" % i,
                status=status,
                lhs=lam,
                rhs=one,
            )
        )

    for i in range(1, k):
        lhs = enc_pow(forward.degree(i), 2)
        rhs = enc_mul(forward.degree(i - 1), forward.degree(i + 1))
        status = ge_status(lhs, rhs)
        if status == INDETERMINATE and lhs.exact and rhs.exact:
            status = PASS if lhs.lo >= rhs.lo else FAIL
        checks.append(
            PropertyCheck(
                family="log-concavity",
                description="lambda_%d^2 >= lambda_%d * lambda_%d" % (i, i - 1, i + 1),
                status=status,
                lhs=lhs,
                rhs=rhs,
            )
        )

    for i in range(1, k + 1):
        lhs = enc_pow(forward.degree(1), i)
        rhs = forward.degree(i)
        if i == 1:
            status = PASS  # identical quantity
        else:
            status = ge_status(lhs, rhs)
        checks.append(
            PropertyCheck(
                family="first-dominates",
                description="lambda_1^%d >= lambda_%d" % (i, i),
                status=status,
                lhs=lhs,
                rhs=rhs,
            )
        )

    for i in range(1, k):
        lhs = enc_pow(forward.degree(i), i)
        rhs = forward.degree(1)
        status = PASS if i == 1 else ge_status(lhs, rhs)
        checks.append(
            PropertyCheck(
                family="root-bound",
                description="lambda_%d^%d >= lambda_1" % (i, i),
                status=status,
                lhs=lhs,
                rhs=rhs,
            )
        )

    for i in range(k + 1):
        lhs = forward.degree(i)
        rhs = backward.degree(k - i)
        proved = _charpolys_equal(forward, i, backward, k - i)
        status = eq_status(lhs, rhs, provably_equal=proved)
        checks.append(
            PropertyCheck(
                family="inverse-duality",
                description="lambda_%d(f) == lambda_%d(f^-1)" % (i, k - i),
                status=status,
                lhs=lhs,
                rhs=rhs,
            )
        )
    return tuple(checks)


def degree_properties_report(action, tol=DEFAULT_TOL) -> PropertyReport:
    """Compute degrees for the action and its inverse and verify the
    standard inequalities with three-valued interval logic.

    The duality checks compare characteristic polynomials first: for a
    pairing-preserving action the degree-i matrix of f and the
    degree-(k-i) matrix of f^-1 are conjugate-transpose via the pairing,
    so their polynomials agree exactly and the check passes without any
    numeric comparison.
    """
    forward = dynamical_degrees(action, tol)
    backward = dynamical_degrees(action.inverse(), tol)
    return PropertyReport(
        action_name=action.name,
        k=forward.k,
        forward=forward,
        backward=backward,
        checks=property_checks(forward, backward),
    )
