"""Candidate pullback actions on the degree-1 lattice and the matrices they
induce on every graded piece.

A candidate is an integer matrix on the ordered basis [h, e_1, ..., e_m]
with the column convention: column j holds the coefficients of the image of
the j-th basis vector. Validation checks the numerical facts every honest
automorphism pullback satisfies:

  * determinant is +1 or -1,
  * the intersection pairing is preserved on all complementary pairs of
    basis monomials (images of monomials are products of degree-1 images),
  * the top graded piece transforms trivially.

Preservation of the canonical class is recorded but treated as a warning,
not a failure: some interesting lattice isometries move K.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from . import intmat
from .errors import DimensionMismatch, NotValidated, RingMismatch
from .ring import GradedClass, Mono, RingModel


@dataclass(frozen=True)
class PairingFailure:
    """One complementary pair whose intersection number moved."""

    degree: int
    left: str
    right: str
    expected: Fraction
    got: Fraction


@dataclass(frozen=True)
class ValidationReport:
    name: str
    det: int
    det_ok: bool
    pairing_ok: bool
    top_ok: bool
    preserves_canonical: bool
    pairing_failures: Tuple[PairingFailure, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.det_ok and self.pairing_ok and self.top_ok

    def summary(self) -> str:
        lines = [
            "action %r: %s" % (self.name, "valid" if self.ok else "INVALID"),
            "  det = %+d (%s)" % (self.det, "ok" if self.det_ok else "must be +-1"),
            "  pairing preserved: %s" % self.pairing_ok,
            "  top degree fixed: %s" % self.top_ok,
            "  canonical class fixed: %s%s"
            % (self.preserves_canonical, "" if self.preserves_canonical else " (warning only)"),
        ]
        for fail in self.pairing_failures[:5]:
            lines.append(
                "    degree %d: <%s, %s> = %s, expected %s"
                % (fail.degree, fail.left, fail.right, fail.got, fail.expected)
            )
        if len(self.pairing_failures) > 5:
            lines.append("    ... %d more" % (len(self.pairing_failures) - 5))
        return "\n".join(lines)


class PullbackAction:
    """Integer matrix candidate for the pullback of an automorphism."""

    def __init__(self, ring: RingModel, matrix, name: str = "f"):
        self.ring = ring
        self.name = name
        mat = intmat.freeze(matrix)
        n = 1 + ring.m
        if len(mat) != n or any(len(row) != n for row in mat):
            raise DimensionMismatch(
                "action matrix must be %dx%d for this ring, got %dx%d"
                % (n, n, len(mat), len(mat[0]) if mat else 0)
            )
        for row in mat:
            for v in row:
                if not isinstance(v, int):
                    raise TypeError("action matrix entries must be integers, got %r" % (v,))
        self.matrix = mat
        self._report: Optional[ValidationReport] = None
        self._induced: Dict[int, tuple] = {}
        self._deg1_images: Optional[Tuple[GradedClass, ...]] = None

    # -- degree-1 action -------------------------------------------------

    def _images(self) -> Tuple[GradedClass, ...]:
        """Images of [h, e_1, ..., e_m], read off the matrix columns."""
        if self._deg1_images is None:
            cols = intmat.transpose(self.matrix)
            self._deg1_images = tuple(self.ring.parse_class(col) for col in cols)
        return self._deg1_images

    def apply(self, x: GradedClass) -> GradedClass:
        """Apply the candidate to a degree-1 class."""
        if x.ring is not self.ring:
            raise RingMismatch("class belongs to a different ring model")
        if not x.is_homogeneous(1):
            raise ValueError("apply() is defined on degree-1 classes")
        coeffs = x.coefficients(1)
        out = intmat.mat_vec(self.matrix, coeffs)
        return self.ring.parse_class(list(out))

    def _monomial_image(self, mono: Mono) -> GradedClass:
        images = self._images()
        out = self.ring.pow(images[0], mono.h_pow)
        if mono.e_pow:
            out = out * self.ring.pow(images[1 + mono.center], mono.e_pow)
        return out

    # -- validation -------------------------------------------------------

    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        R = self.ring
        d = intmat.det(self.matrix)
        det_ok = d in (1, -1)

        failures = []
        monomial_images: Dict[Mono, GradedClass] = {}

        def img(mono):
            got = monomial_images.get(mono)
            if got is None:
                got = self._monomial_image(mono)
                monomial_images[mono] = got
            return got

        for p in range(R.k + 1):
            q = R.k - p
            for mx in R.basis(p):
                fx = img(mx)
                for my in R.basis(q):
                    want = R.pairing(R.monomial_class(mx), R.monomial_class(my))
                    got = R.integrate(fx * img(my))
                    if got != want:
                        failures.append(
                            PairingFailure(p, mx.label(), my.label(), want, got)
                        )
        pairing_ok = not failures

        top = img(Mono(R.k))
        top_ok = top == R.monomial_class(Mono(R.k))

        K = R.canonical_class()
        preserves_k = self.apply(K) == K

        self._report = ValidationReport(
            name=self.name,
            det=d,
            det_ok=det_ok,
            pairing_ok=pairing_ok,
            top_ok=top_ok,
            preserves_canonical=preserves_k,
            pairing_failures=tuple(failures[:40]),
        )
        return self._report

    def ensure_valid(self) -> ValidationReport:
        report = self.validate()
        if not report.ok:
            raise NotValidated(
                "action %r failed validation:\n%s" % (self.name, report.summary()),
                report=report,
            )
        return report

    # -- induced matrices ---------------------------------------------------

    def induce(self, p: int) -> tuple:
        """Matrix of the candidate on the degree-p basis (column convention).

        Entries are provably integers; this is asserted, not assumed. The
        result is cached per degree. Requires validation to pass.
        """
        if not 0 <= p <= self.ring.k:
            raise ValueError("degree %d out of range [0, %d]" % (p, self.ring.k))
        cached = self._induced.get(p)
        if cached is not None:
            return cached
        self.ensure_valid()
        R = self.ring
        basis = R.basis(p)
        cols = []
        for mono in basis:
            image = self._monomial_image(mono)
            col = image.coefficients(p)
            assert all(c.denominator == 1 for c in col), (
                "induced matrix entries must be integers"
            )
            cols.append(tuple(int(c) for c in col))
        out = intmat.transpose(tuple(cols))
        self._induced[p] = out
        return out

    # -- group operations --------------------------------------------------

    def compose(self, other: "PullbackAction") -> "PullbackAction":
        """Pull back first by ``other``, then by ``self`` (matrix product)."""
        if self.ring is not other.ring:
            raise RingMismatch("cannot compose actions on different rings")
        return PullbackAction(
            self.ring,
            intmat.mat_mul(self.matrix, other.matrix),
            name="%s.%s" % (self.name, other.name),
        )

    def inverse(self) -> "PullbackAction":
        return PullbackAction(
            self.ring,
            intmat.inverse_unimodular(self.matrix),
            name="%s^-1" % self.name,
        )

    def power(self, n: int) -> "PullbackAction":
        if n < 0:
            return self.inverse().power(-n)
        out = identity_action(self.ring, name="%s^%d" % (self.name, n))
        acc = out.matrix
        for _ in range(n):
            acc = intmat.mat_mul(acc, self.matrix)
        return PullbackAction(self.ring, acc, name="%s^%d" % (self.name, n))

    def __repr__(self):
        return "PullbackAction(%r, k=%d, m=%d)" % (self.name, self.ring.k, self.ring.m)


def identity_action(ring: RingModel, name: str = "id") -> PullbackAction:
    return PullbackAction(ring, intmat.identity(1 + ring.m), name=name)
