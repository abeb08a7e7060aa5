"""Baker-Norine rank, Riemann-Roch checks, and obstruction sets."""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisors import (
    add,
    count_effective,
    degree,
    effective_divisors,
    point,
    reduce,
    scale,
    sub,
)
from .errors import EnumerationCapExceeded, InputError
from .graph import canonical_divisor, genus, require_connected

DEFAULT_CAP = 2_000_000
BASE = 0


def winnable(g, D):
    """True iff ``D`` is linearly equivalent to an effective divisor."""
    require_connected(g)
    if len(D) != g.n:
        raise InputError("divisor length mismatch")
    if degree(D) < 0:
        return False
    return reduce(g, D, BASE).reduced[BASE] >= 0


@dataclass(frozen=True)
class RankCertificate:
    """Rank of ``divisor`` with an obstruction witness.

    ``obstruction`` is an effective divisor of degree ``rank + 1`` such that
    ``divisor - obstruction`` is not winnable.
    """

    divisor: tuple
    rank: int
    obstruction: tuple | None

    def to_json(self):
        return {
            "divisor": list(self.divisor),
            "rank": self.rank,
            "obstruction": None if self.obstruction is None else list(self.obstruction),
        }


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, what):
        self.used += 1
        if self.used > self.cap:
            raise EnumerationCapExceeded(what, self.used, self.cap)


def rank(g, D, cap=DEFAULT_CAP, method="recursive"):
    """Baker-Norine rank of ``D`` with a certificate.

    ``method="recursive"`` uses ``r(D) = 1 + min_v r(D - v)`` for winnable
    ``D`` (and ``-1`` otherwise), memoised on the q-reduced class; ``cap``
    bounds the number of new classes explored.  ``method="enumerate"`` checks
    every effective ``E`` of degree ``k = 0, 1, ...`` in order, stopping at the
    first unwinnable ``D - E``; ``cap`` bounds ``|Div_+^k|`` per level.
    """
    require_connected(g)
    D = tuple(D)
    if len(D) != g.n:
        raise InputError("divisor length mismatch")
    if method == "enumerate":
        return _rank_enumerate(g, D, cap)
    if method != "recursive":
        raise InputError(f"unknown rank method {method!r}")
    budget = _Budget(cap)
    r, witness = _rank_class(g, reduce(g, D, BASE).reduced, budget)
    return RankCertificate(D, r, witness)


_CLASS_CACHE: dict = {}


def clear_caches():
    _CLASS_CACHE.clear()


def _rank_class(g, red, budget):
    """Rank and obstruction of the class whose base-reduced divisor is ``red``."""
    cache = _CLASS_CACHE.setdefault(g, {})
    hit = cache.get(red)
    if hit is not None:
        return hit
    n = g.n
    if degree(red) < 0 or red[BASE] < 0:
        result = (-1, (0,) * n)
    else:
        budget.spend("rank classes")
        best = None
        for v in range(n):
            child = reduce(g, sub(red, point(n, v)), BASE).reduced
            r, w = _rank_class(g, child, budget)
            if best is None or r < best[0]:
                best = (r, add(w, point(n, v)))
                if r == -1:
                    break
        result = (best[0] + 1, best[1])
    cache[red] = result
    return result


def _rank_enumerate(g, D, cap):
    if degree(D) < 0 or not winnable(g, D):
        return RankCertificate(D, -1, (0,) * g.n)
    k = 1
    while True:
        needed = count_effective(g.n, k)
        if needed > cap:
            raise EnumerationCapExceeded(f"Div_+^{k}", needed, cap)
        for E in effective_divisors(g.n, k):
            if not winnable(g, sub(D, E)):
                return RankCertificate(D, k - 1, E)
        k += 1


def verify_riemann_roch(g, D, cap=DEFAULT_CAP):
    """Check ``r(D) == deg D + 1 - g + r(K - D)`` exactly."""
    K = canonical_divisor(g)
    lhs = rank(g, D, cap).rank
    rhs = degree(D) + 1 - genus(g) + rank(g, sub(K, D), cap).rank
    return lhs == rhs


@dataclass(frozen=True)
class ObstructionSet:
    divisor: tuple
    degree: int
    all_obstructions: tuple = field(repr=False)
    p_free: tuple = field(repr=False)


def obstructions(g, P, alpha, cap=DEFAULT_CAP):
    """All obstructions of ``alpha P`` at degree ``r(alpha P) + 1``."""
    require_connected(g)
    D = point(g.n, P, alpha)
    k = rank(g, D, cap).rank + 1
    needed = count_effective(g.n, k)
    if needed > cap:
        raise EnumerationCapExceeded(f"Div_+^{k}", needed, cap)
    found = tuple(E for E in effective_divisors(g.n, k) if not winnable(g, sub(D, E)))
    p_free = tuple(E for E in found if E[P] == 0)
    return ObstructionSet(D, k, found, p_free)


def first_p_free_obstruction(g, P, alpha, cap=DEFAULT_CAP):
    """One obstruction of ``alpha P`` avoiding ``P``, or None.

    Same search as :func:`obstructions` restricted to divisors with ``P``
    outside the support, stopping at the first hit.
    """
    require_connected(g)
    D = point(g.n, P, alpha)
    k = rank(g, D, cap).rank + 1
    needed = count_effective(g.n - 1, k)
    if needed > cap:
        raise EnumerationCapExceeded(f"P-free Div_+^{k}", needed, cap)
    for E in effective_divisors(g.n, k, avoid=P):
        if not winnable(g, sub(D, E)):
            return E
    return None


def rank_of_multiple(g, P, alpha, cap=DEFAULT_CAP):
    return rank(g, scale(point(g.n, P), alpha), cap).rank
