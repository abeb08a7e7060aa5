"""Weierstrass-type semigroups of a vertex on bounded windows.

Three sets are computed exactly on ``[0, B]``:

* ``Hf``   pole orders of functions whose only pole is at ``P``;
* ``Hr``   jumps ``r(aP) = r((a-1)P) + 1`` of the rank function;
* ``Hred`` jumps of ``Hr`` whose previous level has an obstruction avoiding ``P``.

Nothing is extrapolated past ``B``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .divisors import (
    count_effective,
    effective_divisors,
    monopole_witness_valid,
    point,
    reduce,
)
from .errors import BadParameter, EnumerationCapExceeded, TheoremViolation
from .graph import (
    components_of,
    cut_vertices,
    edge_connectivity,
    genus,
    require_connected,
)
from .rank_rr import first_p_free_obstruction, rank

HF_CAP = 1_000_000
RANK_CAP = 2_000_000

KINDS = ("Hf", "Hr", "Hred", "Generated")


@dataclass(frozen=True)
class SemigroupWindow:
    """Exact membership of a semigroup restricted to ``[0, bound]``."""

    kind: str
    bound: int
    members: frozenset
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def gaps(self):
        return sorted(set(range(self.bound + 1)) - self.members)

    def sorted_members(self):
        return sorted(self.members)

    def closure_violations(self):
        """Pairs ``(a, b)`` of members whose sum is in the window but missing."""
        ms = self.sorted_members()
        return [
            (a, b)
            for i, a in enumerate(ms)
            for b in ms[i:]
            if a + b <= self.bound and a + b not in self.members
        ]

    def is_closed(self):
        return not self.closure_violations()

    def minimal_generators(self):
        """Nonzero members that are not a sum of two nonzero members."""
        ms = [a for a in self.sorted_members() if a > 0]
        return [a for a in ms if not any(a - b in self.members for b in ms if 0 < b < a)]

    def gap_report(self):
        gaps = self.gaps
        return GapReport(self.kind, self.bound, tuple(gaps), len(gaps), max(gaps, default=None))

    def status(self, a):
        """``"member"``, ``"gap"`` or ``"unknown"`` (beyond the window)."""
        if a > self.bound:
            return "unknown"
        return "member" if a in self.members else "gap"

    def to_json(self):
        return {
            "kind": self.kind,
            "bound": self.bound,
            "members": self.sorted_members(),
            "gaps": self.gaps,
            "witnesses": {str(a): _jsonable(w) for a, w in sorted(self.witnesses.items())},
        }


def _jsonable(w):
    if isinstance(w, dict):
        return {k: _jsonable(v) for k, v in w.items()}
    if isinstance(w, (tuple, list)):
        return [_jsonable(x) for x in w]
    return w


@dataclass(frozen=True)
class GapReport:
    kind: str
    bound: int
    gaps: tuple
    count: int
    max_gap: int | None


def default_bound(g, P):
    """``max(2g, deg P) + 2``: every claim about the instance is decidable here."""
    return max(2 * genus(g), g.degree(P)) + 2


# --------------------------------------------------------------------------
# Hf


def hf_member(g, P, alpha, cap=HF_CAP):
    """A monopole script with pole of order exactly ``alpha`` at ``P``, or None.

    Searches effective ``A`` of degree ``alpha`` with ``P`` outside the
    support for ``A ~ alpha P``, using ``P`` as the reduction base (``alpha P``
    is already P-reduced).
    """
    n = g.n
    if alpha == 0:
        return (0,) * n
    needed = count_effective(n - 1, alpha)
    if needed > cap:
        raise EnumerationCapExceeded(f"Hf candidates for alpha={alpha}", needed, cap)
    target = point(n, P, alpha)
    for A in effective_divisors(n, alpha, avoid=P):
        red = reduce(g, A, P)
        if red.reduced == target:
            # target = A + div(s)  =>  div(-s) = A - alpha P
            return tuple(-s for s in red.script)
    return None


def hf_window(g, P, B=None, cap=HF_CAP):
    require_connected(g)
    B = default_bound(g, P) if B is None else B
    members, witnesses = set(), {}
    for alpha in range(B + 1):
        f = hf_member(g, P, alpha, cap)
        if f is None:
            continue
        check = monopole_witness_valid(g, f, P)
        if not (check.ok and check.alpha == alpha):
            raise TheoremViolation(f"Hf witness for alpha={alpha} failed revalidation: {f}")
        members.add(alpha)
        witnesses[alpha] = f
    return SemigroupWindow("Hf", B, frozenset(members), witnesses)


# --------------------------------------------------------------------------
# Hr and Hred


def rank_sequence(g, P, B, cap=RANK_CAP):
    """``[r(aP) for a in -1 .. B]`` (index 0 is ``r(-P) = -1``)."""
    seq = [-1]
    for alpha in range(B + 1):
        seq.append(rank(g, point(g.n, P, alpha), cap).rank)
    return seq


def hr_window(g, P, B=None, cap=RANK_CAP, ranks=None):
    require_connected(g)
    B = default_bound(g, P) if B is None else B
    ranks = ranks or rank_sequence(g, P, B, cap)
    members, witnesses = set(), {}
    for alpha in range(B + 1):
        prev, cur = ranks[alpha], ranks[alpha + 1]
        if cur - prev not in (0, 1):
            raise TheoremViolation(f"rank jumped by {cur - prev} at alpha={alpha}")
        if cur == prev + 1:
            members.add(alpha)
            witnesses[alpha] = (prev, cur)
    return SemigroupWindow("Hr", B, frozenset(members), witnesses)


def hred_window(g, P, B=None, cap=RANK_CAP, hr=None):
    require_connected(g)
    B = default_bound(g, P) if B is None else B
    hr = hr or hr_window(g, P, B, cap)
    members, witnesses = set(), {}
    for alpha in hr.sorted_members():
        E = first_p_free_obstruction(g, P, alpha - 1, cap)
        if E is not None:
            members.add(alpha)
            witnesses[alpha] = {"ranks": hr.witnesses[alpha], "obstruction": E}
    return SemigroupWindow("Hred", B, frozenset(members), witnesses)


# --------------------------------------------------------------------------
# Numerical semigroups


def generated_semigroup(generators, B):
    """Window of the numerical semigroup generated by ``generators``.

    Each member's witness is its coefficient vector over the generators.
    """
    gens = list(generators)
    if not gens or any(not isinstance(a, int) or a <= 0 for a in gens):
        raise BadParameter(f"generators must be positive integers, got {gens}")
    rep = {0: (0,) * len(gens)}
    for a in range(1, B + 1):
        for i, gen in enumerate(gens):
            prev = rep.get(a - gen)
            if prev is not None:
                rep[a] = prev[:i] + (prev[i] + 1,) + prev[i + 1 :]
                break
    return SemigroupWindow("Generated", B, frozenset(rep), rep)


def has_finite_gaps(generators):
    return math.gcd(*generators) == 1


def gap_count(generators):
    """Number of gaps of a numerical semigroup (``gcd`` must be 1)."""
    if not has_finite_gaps(generators):
        raise BadParameter("infinitely many gaps when gcd > 1")
    a = min(generators)
    # Frobenius number is below (a-1)(max-1); window past it is gap-free
    bound = (a - 1) * (max(generators) - 1) + a
    return len(generated_semigroup(generators, bound).gaps)


# --------------------------------------------------------------------------
# Theorem cross-checks


def min_nonzero_hf(g, P, hf=None, cap=HF_CAP):
    """Least nonzero pole order at ``P``, with the connectivity bounds checked.

    Raises :class:`TheoremViolation` if the value is not ``deg P`` at a
    non-cut vertex, exceeds ``min_i deg_{G_i} P`` at a cut vertex, or falls
    below the edge connectivity.
    """
    require_connected(g)
    if hf is None or hf.bound < g.degree(P):
        hf = hf_window(g, P, g.degree(P), cap)
    nonzero = [a for a in hf.sorted_members() if a > 0]
    if not nonzero:
        raise TheoremViolation(f"deg P = {g.degree(P)} missing from Hf window")
    m = nonzero[0]
    if P in cut_vertices(g):
        bound = min(sum(1 for w in g.neighbors(P) if w in comp) for comp in components_of(g, P))
        if m > bound:
            raise TheoremViolation(f"min Hf {m} > component degree {bound} at cut vertex {P}")
    elif m != g.degree(P):
        raise TheoremViolation(f"min Hf {m} != deg P {g.degree(P)} at non-cut vertex {P}")
    lam = edge_connectivity(g)
    if lam > m:
        raise TheoremViolation(f"edge connectivity {lam} > min Hf {m}")
    return m


@dataclass
class ContainmentReport:
    graph: object
    P: int
    bound: int
    hf: SemigroupWindow
    hr: SemigroupWindow
    hred: SemigroupWindow
    checks: dict

    @property
    def conjecture_holds(self):
        return self.checks["hr_subset_hf"]

    def to_json(self):
        g = self.graph
        return {
            "graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]},
            "vertex": self.P,
            "B": self.bound,
            "hf": self.hf.to_json(),
            "hr": self.hr.to_json(),
            "hred": self.hred.to_json(),
            "checks": dict(self.checks),
        }


def containment_report(g, P, B=None, cap=HF_CAP, rank_cap=RANK_CAP):
    """All three windows at ``P`` plus the containment checks.

    ``Hred`` outside ``Hr`` or outside ``Hf`` raises
    :class:`TheoremViolation`.  ``Hr`` outside ``Hf`` is recorded in
    ``checks["hr_minus_hf"]`` and never raised.
    """
    require_connected(g)
    B = default_bound(g, P) if B is None else B
    if B < 2 * genus(g):
        raise BadParameter(f"bound {B} < 2g = {2 * genus(g)}")
    hf = hf_window(g, P, B, cap)
    hr = hr_window(g, P, B, rank_cap)
    hred = hred_window(g, P, B, rank_cap, hr=hr)
    if not hred.members <= hr.members:
        raise TheoremViolation(f"Hred not inside Hr: {sorted(hred.members - hr.members)}")
    if not hred.members <= hf.members:
        raise TheoremViolation(f"Hred not inside Hf: {sorted(hred.members - hf.members)}")
    m = min_nonzero_hf(g, P, hf)
    g_ = genus(g)
    checks = {
        "containment_hred_hf": True,
        "containment_hred_hr": True,
        "hr_subset_hf": hr.members <= hf.members,
        "hr_minus_hf": sorted(hr.members - hf.members),
        "hf_minus_hr": sorted(hf.members - hr.members),
        "hred_equals_hr": hred.members == hr.members,
        "hf_closed": hf.is_closed(),
        "hr_closed": hr.is_closed(),
        "min_hf": m,
        "deg_P": g.degree(P),
        "is_cut_vertex": P in cut_vertices(g),
        "lambda": edge_connectivity(g),
        "genus": g_,
        "hr_gap_count": len(hr.gaps),
        "hr_max_gap": max(hr.gaps, default=None),
    }
    return ContainmentReport(g, P, B, hf, hr, hred, checks)
