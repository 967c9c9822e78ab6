"""A tour of the positive-entropy machinery on the ten-point plane blow-up.

The Coxeter element of the E10 Weyl group acts on the degree-1 classes of
Bl_10(P^2) as an integral matrix preserving the intersection form.  Its
spectral radius is Lehmer's number, the smallest known Salem number, and
the log of that is the topological entropy any automorphism realizing the
action would have.

Run:  python3 demos/coxeter_tour.py
"""

from blowdyn.actions import PullbackAction
from blowdyn.gate import decide, degree_chain_report
from blowdyn.lattices import coxeter_matrix
from blowdyn.ring import BlowupConfig, build_ring
from blowdyn.spectral import degree_properties_report, dynamical_degrees


def banner(text):
    print()
    print(text)
    print("-" * len(text))


def main():
    ring = build_ring(BlowupConfig(2, (0,) * 10))
    action = PullbackAction(ring, coxeter_matrix(10), name="coxeter")

    banner("validation")
    report = action.validate()
    print(report.summary())

    banner("dynamical degrees")
    ds = dynamical_degrees(action)
    for j, enc in enumerate(ds.degrees):
        if enc.exact:
            print("lambda_%d = %s (exact)" % (j, enc.lo))
        else:
            lo, hi = enc.decimal_bounds(15)
            print("lambda_%d in [%s, %s]   <- Lehmer's number" % (j, lo, hi))
    lo, hi = ds.entropy.decimal_bounds(15)
    print("entropy in [%s, %s]" % (lo, hi))

    banner("degree properties (lower bounds, log-concavity, duality)")
    print(degree_properties_report(action).summary())

    banner("the dimension gate")
    # k = 2 with point centers: 2 > 2 fails, so the gate alone decides
    # nothing here -- which is exactly why a positive-entropy candidate can
    # exist on a surface.
    print(decide(2, (0,) * 10).summary())
    # In higher dimension the same question is settled before any spectral
    # work: five-folds blown up along surfaces leave no room.
    print(decide(7, (2, 0)).summary())

    banner("the degree equality chain")
    print(degree_chain_report(action).summary())


if __name__ == "__main__":
    main()
