"""The zero-entropy gate and the degree-chain diagnostic.

The gate is a pure arithmetic predicate on (k, max center dimension):
when k > 2r + 2, every automorphism pullback on a blow-up of P^k along
disjoint smooth centers of dimension at most r has zero topological
entropy.  The chain report walks the equality chain that proves it,

    lambda_1(f)^(k-r-1)^2 = lambda_{k-r-1}(f)^(k-r-1)
                          = lambda_{r+1}(f^-1)^(k-r-1)
                          = lambda_1(f^-1)^((k-r-1)(r+1))
                          = lambda_{k-r-1}(f^-1)^(r+1)
                          = lambda_{r+1}(f)^(r+1)
                          = lambda_1(f)^(r+1)^2,

with three-valued statuses per link, and issues a non-realizability
certificate when the gate forces zero entropy but a candidate action
provably has positive entropy: such a candidate is the pullback of no
holomorphic automorphism.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import LengthMismatch
from .ring import BlowupConfig
from .spectral import (
    DEFAULT_TOL,
    DegreeSequence,
    Enclosure,
    PASS,
    _charpolys_equal,
    dynamical_degrees,
    enc_pow,
    eq_status,
)

FORCED = "AllAutomorphismsZeroEntropy"
INCONCLUSIVE = "Inconclusive"

_SURFACE_CAVEAT = (
    "blow-ups of the plane in ten or more points admit automorphisms of "
    "positive entropy (Coxeter-element constructions), so no dimension "
    "count can close this case"
)


@dataclass(frozen=True)
class GateVerdict:
    """Outcome of the dimension gate for ambient dimension k and centers
    of dimension at most r."""

    k: int
    r: int
    dims: Tuple[int, ...]
    verdict: str
    reason: str
    margin: int  # k - (2r + 2); positive exactly when forced

    @property
    def forced(self) -> bool:
        return self.verdict == FORCED

    def summary(self) -> str:
        return "gate(k=%d, r=%d): %s — %s" % (self.k, self.r, self.verdict, self.reason)


def decide(k: int, center_dims: Sequence[int] = ()) -> GateVerdict:
    """Apply the gate to raw (k, center dimensions) data.

    No ring model is involved: the gate consumes only the ambient
    dimension and the largest center dimension, so it applies to center
    configurations the ring model cannot represent.  Raises InvalidConfig
    on data that no blow-up configuration could have.
    """
    config = BlowupConfig(k, tuple(center_dims))
    r = config.max_center_dim
    margin = k - (2 * r + 2)
    if margin > 0:
        verdict, reason = FORCED, (
            "k > 2r + 2 (%d > %d): every automorphism pullback has zero "
            "topological entropy" % (k, 2 * r + 2)
        )
    else:
        verdict, reason = INCONCLUSIVE, (
            "k > 2r + 2 fails (%d ≯ %d); %s" % (k, 2 * r + 2, _SURFACE_CAVEAT)
        )
    return GateVerdict(k=k, r=r, dims=config.centers, verdict=verdict, reason=reason, margin=margin)


# ------------------------------------------------------------ chain report


@dataclass(frozen=True)
class NonRealizabilityCertificate:
    """Witness that a validated cohomological candidate is the pullback of
    no holomorphic automorphism: the gate forces zero entropy, yet the
    candidate's entropy is provably positive (some induced characteristic
    polynomial is not a product of cyclotomics, an exact Kronecker test)."""

    k: int
    r: int
    entropy: Enclosure
    statement: str


@dataclass(frozen=True)
class ChainNode:
    label: str
    value: Enclosure


@dataclass(frozen=True)
class ChainLink:
    """Equality between consecutive chain nodes.  ``provable`` marks links
    that hold by an exact argument (equal char polys for duality links,
    index collapse for power links); the others carry interval status."""

    lhs: str
    rhs: str
    justification: str
    provable: bool
    status: str


@dataclass(frozen=True)
class PerDegreeCheck:
    side: str  # "f" or "f^-1"
    j: int
    status: str
    provable: bool

    def line(self) -> str:
        tag = " (exact)" if self.provable else ""
        return "[%s] lambda_1(%s)^%d = lambda_%d(%s)%s" % (
            self.status, self.side, self.j, self.j, self.side, tag,
        )


@dataclass(frozen=True)
class ChainReport:
    k: int
    r: int
    gate: GateVerdict
    forward: DegreeSequence
    backward: DegreeSequence
    nodes: Tuple[ChainNode, ...]
    links: Tuple[ChainLink, ...]
    per_degree: Tuple[PerDegreeCheck, ...]
    overall: str  # status of lambda_1^(k-r-1)^2 vs lambda_1^(r+1)^2
    certificate: Optional[NonRealizabilityCertificate]

    @property
    def all_links_pass(self) -> bool:
        return all(l.status == PASS for l in self.links)

    def summary(self) -> str:
        lines = ["chain report (k=%d, r=%d)" % (self.k, self.r)]
        lines.append("  " + self.gate.summary())
        for node, link in zip(self.nodes, self.links):
            lines.append("  " + _node_line(node))
            lines.append("    = [%s, %s]" % (link.status, link.justification))
        lines.append("  " + _node_line(self.nodes[-1]))
        lines.append("  overall: [%s] %s = %s" % (self.overall, self.nodes[0].label, self.nodes[-1].label))
        for chk in self.per_degree:
            lines.append("  " + chk.line())
        if self.certificate is not None:
            lines.append("  CERTIFICATE: " + self.certificate.statement)
        else:
            lines.append("  no non-realizability certificate")
        return "\n".join(lines)


def _node_line(node: ChainNode) -> str:
    if node.value.exact_one:
        return "%s = 1 (exact)" % node.label
    lo, hi = node.value.decimal_bounds()
    return "%s in [%s, %s]" % (node.label, lo, hi)


def _power_label(base_side: str, index: int, exponent: int) -> str:
    if index == 1:
        return "lambda_1(%s)^%d" % (base_side, exponent)
    return "lambda_%d(%s)^%d" % (index, base_side, exponent)


def chain_report_from_sequences(
    k: int,
    center_dims: Sequence[int],
    forward: DegreeSequence,
    backward: DegreeSequence,
) -> ChainReport:
    """Build the chain diagnostic from precomputed degree sequences; the
    action path (:func:`degree_chain_report`) reduces to this."""
    if forward.k != k or backward.k != k:
        raise LengthMismatch("degree sequences disagree with k=%d" % k)
    gate = decide(k, center_dims)
    r = gate.r
    a = k - r - 1  # complementary index; >= 1 since r <= k-2
    b = r + 1

    lam_f1, lam_b1 = forward.degree(1), backward.degree(1)
    nodes = (
        ChainNode(_power_label("f", 1, a * a), enc_pow(lam_f1, a * a)),
        ChainNode(_power_label("f", a, a), enc_pow(forward.degree(a), a)),
        ChainNode(_power_label("f^-1", b, a), enc_pow(backward.degree(b), a)),
        ChainNode(_power_label("f^-1", 1, a * b), enc_pow(lam_b1, a * b)),
        ChainNode(_power_label("f^-1", a, b), enc_pow(backward.degree(a), b)),
        ChainNode(_power_label("f", b, b), enc_pow(forward.degree(b), b)),
        ChainNode(_power_label("f", 1, b * b), enc_pow(lam_f1, b * b)),
    )

    duality_fwd = _charpolys_equal(forward, a, backward, b)
    duality_bwd = _charpolys_equal(backward, a, forward, b)
    link_data = (
        ("degree-power identity at j=%d for f" % a, a == 1),
        ("duality lambda_%d(f) = lambda_%d(f^-1)" % (a, b), duality_fwd),
        ("degree-power identity at j=%d for f^-1" % b, b == 1),
        ("degree-power identity at j=%d for f^-1" % a, a == 1),
        ("duality lambda_%d(f^-1) = lambda_%d(f)" % (a, b), duality_bwd),
        ("degree-power identity at j=%d for f" % b, b == 1),
    )
    links = tuple(
        ChainLink(
            lhs=nodes[i].label,
            rhs=nodes[i + 1].label,
            justification=just,
            provable=provable,
            status=eq_status(nodes[i].value, nodes[i + 1].value, provably_equal=provable),
        )
        for i, (just, provable) in enumerate(link_data)
    )

    per_degree = []
    for side, seq in (("f", forward), ("f^-1", backward)):
        lam1 = seq.degree(1)
        for j in range(1, a + 1):
            per_degree.append(
                PerDegreeCheck(
                    side=side,
                    j=j,
                    status=eq_status(enc_pow(lam1, j), seq.degree(j), provably_equal=(j == 1)),
                    provable=(j == 1),
                )
            )

    overall = eq_status(nodes[0].value, nodes[-1].value, provably_equal=(a == b))

    certificate = None
    if gate.forced and forward.positive_entropy_proved:
        certificate = NonRealizabilityCertificate(
            k=k,
            r=r,
            entropy=forward.entropy,
            statement=(
                "k > 2r + 2 (%d > %d) forces zero entropy for every "
                "automorphism pullback, but this action's entropy is "
                "provably positive; no holomorphic automorphism of a "
                "blow-up of P^%d along centers of dimension <= %d induces it"
                % (k, 2 * r + 2, k, r)
            ),
        )

    return ChainReport(
        k=k,
        r=r,
        gate=gate,
        forward=forward,
        backward=backward,
        nodes=nodes,
        links=links,
        per_degree=tuple(per_degree),
        overall=overall,
        certificate=certificate,
    )


def degree_chain_report(action, tol=DEFAULT_TOL) -> ChainReport:
    """Chain diagnostic for a validated action: degrees of f and f^-1,
    the seven-node equality chain, per-degree power identities, and the
    certificate when the gate and a positive-entropy proof collide."""
    action.ensure_valid()
    config = action.ring.config
    forward = dynamical_degrees(action, tol)
    backward = dynamical_degrees(action.inverse(), tol)
    return chain_report_from_sequences(config.k, config.centers, forward, backward)
