"""The three verdicts for "a validated action fixes a nef class".

An automorphism of a blow-up whose pullback fixes a nef class alpha with
numerical dimension >= k-1 must have zero topological entropy.  Turned
around: a *candidate* pullback matrix that provably has positive entropy
while fixing such a class cannot come from an automorphism at all.  The
verdict machinery checks the hypotheses and says which side of the line a
given (action, class) pair falls on:

  Consistent       hypotheses met, zero entropy proved; nothing to object to
  HypothesesNotMet some hypothesis fails; the criterion does not speak
  NotRealizable    hypotheses met *and* positive entropy proved; no
                   automorphism induces this matrix

The third verdict needs a validated positive-entropy action fixing a class
that passes every necessary nef check.  Embedding the ten-point Coxeter
candidate into an eleven-point ring (acting trivially on the extra center)
produces exactly that: the enlarged anticanonical class 3h - e_1 - ... - e_11
is fixed on the nose.

Run:  python3 demos/fixed_class_verdicts.py
"""

from blowdyn.actions import PullbackAction, identity_action
from blowdyn.lattices import coxeter_matrix
from blowdyn.positivity import nef_necessary_check, verify_fixed_nef_class
from blowdyn.ring import BlowupConfig, build_ring


def embedded_coxeter(extra):
    """The ten-point Coxeter matrix acting on a (10+extra)-point ring,
    fixing each additional exceptional class."""
    base = coxeter_matrix(10)
    n = len(base)
    mat = tuple(
        tuple(
            base[i][j] if i < n and j < n else (1 if i == j else 0)
            for j in range(n + extra)
        )
        for i in range(n + extra)
    )
    ring = build_ring(BlowupConfig(2, (0,) * (10 + extra)))
    return ring, PullbackAction(ring, mat, name="coxeter+%d" % extra)


def show(title, verdict):
    print()
    print("### " + title)
    print(verdict.summary())


def main():
    # 1. Consistent: the identity fixes everything and has entropy 0.
    ring = build_ring(BlowupConfig(2, (0,) * 10))
    h = ring.h()
    show(
        "identity fixing h",
        verify_fixed_nef_class(identity_action(ring), nef_necessary_check(h)),
    )

    # 2. HypothesesNotMet: the Coxeter action moves h, so the fixed-class
    # hypothesis fails before entropy is even considered.
    coxeter = PullbackAction(ring, coxeter_matrix(10), name="coxeter")
    show(
        "coxeter asked about h",
        verify_fixed_nef_class(coxeter, nef_necessary_check(h)),
    )

    # 3. NotRealizable: the embedded candidate fixes the eleven-point
    # anticanonical class, every necessary nef pairing is >= 0, nu = 1 = k-1,
    # and the entropy is log(Lehmer) > 0 -- so no automorphism of any
    # eleven-point blow-up of the plane induces this matrix.
    ring11, cox11 = embedded_coxeter(1)
    anti = -ring11.canonical_class()
    show(
        "embedded coxeter fixing -K",
        verify_fixed_nef_class(cox11, nef_necessary_check(anti)),
    )


if __name__ == "__main__":
    main()
