"""Regenerate the example documents in demos/documents/.

Run from anywhere:

    python3 demos/make_documents.py [--out-dir DIR]

The output is canonical (document.dumps), so regenerating must be a
byte-level no-op unless the builders below change.
"""

import argparse
import os
from fractions import Fraction

from blowdyn.document import InputDocument, NamedAction, NamedClass, save
from blowdyn.lattices import coxeter_matrix
from blowdyn.ring import BlowupConfig


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def f1_document() -> InputDocument:
    """P^2 blown up in one point: the first interesting ruled surface."""
    return InputDocument(
        variety=BlowupConfig(2, (0,)),
        center_labels=(None,),
        actions=(NamedAction("id", identity(2)),),
        classes=(
            NamedClass("ruling", (Fraction(1), Fraction(-1))),
            NamedClass("ample", (Fraction(3), Fraction(-1))),
        ),
    )


def e10_document() -> InputDocument:
    """Ten points on P^2 with the Coxeter element of the E10 Weyl group:
    the minimal-entropy benchmark (Lehmer's number)."""
    return InputDocument(
        variety=BlowupConfig(2, (0,) * 10),
        center_labels=(None,) * 10,
        actions=(
            NamedAction("coxeter", coxeter_matrix(10)),
            NamedAction("id", identity(11)),
        ),
        classes=(),
        tol=Fraction(1, 10**9),
    )


def blpt_p3_document() -> InputDocument:
    """P^3 blown up in a point.  "swap" exchanges h and e: it is a perfectly
    valid unimodular ring automorphism (e^3 = h^3 here), moves the canonical
    class, and is the pullback of no holomorphic automorphism — a clean
    example of why validation alone does not certify realizability."""
    return InputDocument(
        variety=BlowupConfig(3, (0,)),
        center_labels=(None,),
        actions=(
            NamedAction("id", identity(2)),
            NamedAction("swap", ((0, 1), (1, 0))),
        ),
        classes=(NamedClass("ample", (Fraction(4), Fraction(-1))),),
    )


def blline_p3_document() -> InputDocument:
    """P^3 blown up along a line.  The class h - e spans the pencil of
    planes through the line: nef, but of numerical dimension 1 < k-1."""
    return InputDocument(
        variety=BlowupConfig(3, (1,)),
        center_labels=("L",),
        actions=(NamedAction("id", identity(2)),),
        classes=(NamedClass("pencil", (Fraction(1), Fraction(-1))),),
    )


BUILDERS = {
    "f1.json": f1_document,
    "e10_coxeter.json": e10_document,
    "blpt_p3.json": blpt_p3_document,
    "blline_p3.json": blline_p3_document,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    default_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "documents")
    parser.add_argument("--out-dir", default=default_dir)
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    for name, builder in sorted(BUILDERS.items()):
        path = os.path.join(args.out_dir, name)
        save(builder(), path)
        print("wrote", path)


if __name__ == "__main__":
    main()
