"""Builders for interesting candidates on point blow-ups of the plane.

The degree-1 lattice of P^2 blown up in m points carries the Lorentzian
pairing diag(1, -1, ..., -1). Reflections in the standard roots

    a_0 = h - e_1 - e_2 - e_3,    a_i = e_i - e_(i+1)  (1 <= i <= m-1)

generate the relevant Weyl group; the a_0 reflection is the pullback of
the quadratic Cremona map based at the first three points, the a_i are
point swaps. Products of all m reflections in order give a Coxeter
element, whose first dynamical degree is Lehmer's number when m = 10.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from . import intmat
from .actions import PullbackAction
from .errors import InvalidConfig
from .ring import RingModel


def _lorentz_pair(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def reflection_matrix(m: int, root: Sequence[int]) -> tuple:
    """Reflection x -> x + <x, root> root on Z^(1+m), for roots of square -2."""
    root = tuple(root)
    if len(root) != 1 + m:
        raise InvalidConfig("root must have %d entries" % (1 + m))
    if _lorentz_pair(root, root) != -2:
        raise InvalidConfig("root must have self-intersection -2, got %d" % _lorentz_pair(root, root))
    cols = []
    n = 1 + m
    for j in range(n):
        basis = tuple(int(i == j) for i in range(n))
        coeff = _lorentz_pair(basis, root)
        cols.append(tuple(b + coeff * r for b, r in zip(basis, root)))
    return intmat.transpose(tuple(cols))


def weyl_roots(m: int) -> Tuple[tuple, ...]:
    """The standard roots a_0, ..., a_(m-1) for m >= 3 blown-up points."""
    if m < 3:
        raise InvalidConfig("need at least 3 points for the Cremona root")
    roots = [(1, -1, -1, -1) + (0,) * (m - 3)]
    for i in range(1, m):
        v = [0] * (1 + m)
        v[i] = 1
        v[i + 1] = -1
        roots.append(tuple(v))
    return tuple(roots)


def coxeter_matrix(m: int) -> tuple:
    """Product of the m standard reflections, taken left to right."""
    out = intmat.identity(1 + m)
    for root in weyl_roots(m):
        out = intmat.mat_mul(out, reflection_matrix(m, root))
    return out


def coxeter_action(ring: RingModel, name: str = "coxeter") -> PullbackAction:
    if ring.k != 2 or any(r != 0 for r in ring.config.centers):
        raise InvalidConfig("Coxeter candidates live on point blow-ups of the plane")
    return PullbackAction(ring, coxeter_matrix(ring.m), name=name)


def cremona_action(ring: RingModel, name: str = "cremona") -> PullbackAction:
    """Reflection in h - e_1 - e_2 - e_3: the quadratic Cremona pullback."""
    if ring.k != 2 or ring.m < 3 or any(r != 0 for r in ring.config.centers):
        raise InvalidConfig("the Cremona reflection needs >= 3 blown-up points in the plane")
    return PullbackAction(ring, reflection_matrix(ring.m, weyl_roots(ring.m)[0]), name=name)


def center_permutation_matrix(m: int, perm: Sequence[int]) -> tuple:
    """Candidate permuting the exceptional classes: e_(i+1) -> e_(perm[i]+1).

    ``perm`` is zero-based of length m. Only permutations of centers with
    equal dimensions give valid actions; the matrix itself does not care.
    """
    if sorted(perm) != list(range(m)):
        raise InvalidConfig("not a permutation of 0..%d: %r" % (m - 1, perm))
    cols = [tuple(int(i == 0) for i in range(1 + m))]
    for i in range(m):
        target = 1 + perm[i]
        cols.append(tuple(int(i2 == target) for i2 in range(1 + m)))
    return intmat.transpose(tuple(cols))


def permutation_action(ring: RingModel, perm: Sequence[int], name: str = "swap") -> PullbackAction:
    dims = ring.config.centers
    for i, j in enumerate(perm):
        if dims[i] != dims[j]:
            raise InvalidConfig(
                "permutation mixes centers of different dimensions (%d and %d)"
                % (dims[i], dims[j])
            )
    return PullbackAction(ring, center_permutation_matrix(ring.m, perm), name=name)
