"""Divisors, the Laplacian action on functions, and q-reduced divisors.

Divisors and firing scripts are plain tuples of Python ints indexed by
vertex.  Every equivalence statement in this package uses one convention::

    target = source + divisor_of(g, script)

Firing a set ``S`` (each vertex of ``S`` sends one chip along every edge
leaving ``S``) adds ``divisor_of(g, -1_S)``, so a script value of ``-m`` at
``v`` means ``v`` fired ``m`` net times and a positive value means it
borrowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InputError, LengthMismatch
from .graph import components, distances_from, require_connected


def _check_len(g, vec, what="divisor"):
    if len(vec) != g.n:
        raise LengthMismatch(f"{what} has length {len(vec)}, graph has {g.n} vertices")


def degree(D):
    return sum(D)


def is_effective(D):
    return all(a >= 0 for a in D)


def support(D):
    return frozenset(v for v, a in enumerate(D) if a)


def add(D1, D2):
    return tuple(a + b for a, b in zip(D1, D2))


def sub(D1, D2):
    return tuple(a - b for a, b in zip(D1, D2))


def scale(D, c):
    return tuple(c * a for a in D)


def point(n, v, mult=1):
    """The divisor ``mult * v``."""
    D = [0] * n
    D[v] = mult
    return tuple(D)


def divisor_of(g, f):
    """Laplacian of ``f``: coefficient ``f(v) deg v - sum_{w ~ v} f(w)``."""
    _check_len(g, f, "script")
    return tuple(
        f[v] * len(nb) - sum(f[w] for w in nb) for v, nb in enumerate(g.adjacency)
    )


def indicator(g, P):
    """Script with value -1 at ``P`` and 0 elsewhere."""
    if not 0 <= P < g.n:
        raise InputError(f"vertex {P} out of range")
    return point(g.n, P, -1)


def fire_set(g, D, S):
    """Fire every vertex of ``S`` once."""
    _check_len(g, D)
    S = frozenset(S)
    out = list(D)
    for v in S:
        for w in g.adjacency[v]:
            if w not in S:
                out[v] -= 1
                out[w] += 1
    return tuple(out)


def outdeg(g, v, A):
    """Number of neighbours of ``v`` outside ``A``."""
    return sum(1 for w in g.adjacency[v] if w not in A)


def _burn(g, D, q):
    """Dhar's burning from ``q``; returns the set of unburnt vertices."""
    burnt = [False] * g.n
    burnt[q] = True
    hits = [0] * g.n
    stack = [q]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not burnt[w]:
                hits[w] += 1
                if hits[w] > D[w]:
                    burnt[w] = True
                    stack.append(w)
    return [v for v in range(g.n) if not burnt[v]]


def is_g_parking(g, D, q):
    """True iff ``D`` is q-reduced (a G-parking function relative to ``q``)."""
    _check_len(g, D)
    if any(D[v] < 0 for v in range(g.n) if v != q):
        return False
    return not _burn(g, D, q)


class ReducedForm(NamedTuple):
    base: int
    reduced: tuple
    script: tuple


def _fire_many(g, D, script, S, times):
    for v in S:
        script[v] -= times
        for w in g.adjacency[v]:
            if w not in S:
                D[v] -= times
                D[w] += times


def reduce(g, D, q=0):
    """The unique q-reduced divisor equivalent to ``D``.

    Stage 1 makes ``D`` nonnegative off ``q`` by firing the balls
    ``{v : dist(v, q) <= k}`` for ``k`` from the eccentricity of ``q`` down to 0.
    Stage 2 repeats Dhar's burning test and fires the unburnt set as many
    times as stays legal.  The returned script satisfies
    ``reduced = D + divisor_of(g, script)`` and is normalised to 0 at ``q``.
    """
    _check_len(g, D)
    require_connected(g)
    return _reduce(g, tuple(D), q)


@lru_cache(maxsize=1 << 18)
def _reduce(g, D, q):
    D = list(D)
    script = [0] * g.n
    dist = distances_from(g, q)
    ecc = max(dist)
    for k in range(ecc - 1, -1, -1):
        ball = frozenset(v for v in range(g.n) if dist[v] <= k)
        need = 0
        for v in range(g.n):
            if dist[v] == k + 1 and D[v] < 0:
                gain = sum(1 for w in g.adjacency[v] if w in ball)
                need = max(need, -(D[v] // gain))
        if need:
            _fire_many(g, D, script, ball, need)
    while True:
        unburnt = _burn(g, D, q)
        if not unburnt:
            break
        S = frozenset(unburnt)
        times = min(D[v] // d for v in S if (d := outdeg(g, v, S)) > 0)
        _fire_many(g, D, script, S, times)
    shift = script[q]
    return ReducedForm(q, tuple(D), tuple(s - shift for s in script))


def is_principal(g, D):
    """A script ``f`` with ``divisor_of(g, f) == D``, or None."""
    _check_len(g, D)
    require_connected(g)
    if degree(D) != 0:
        return None
    red = reduce(g, D, 0)
    if any(red.reduced):
        return None
    # 0 = D + div(s)  =>  D = div(-s)
    return tuple(-s for s in red.script)


def linearly_equivalent(g, D1, D2):
    """A script ``s`` with ``D2 == D1 + divisor_of(g, s)``, or None."""
    _check_len(g, D1)
    _check_len(g, D2)
    require_connected(g)
    if degree(D1) != degree(D2):
        return None
    r1 = reduce(g, D1, 0)
    r2 = reduce(g, D2, 0)
    if r1.reduced != r2.reduced:
        return None
    # r = D1 + div(s1) = D2 + div(s2)
    return tuple(a - b for a, b in zip(r1.script, r2.script))


class MonopoleCheck(NamedTuple):
    alpha: int
    ok: bool


def monopole_witness_valid(g, f, P):
    """Check that ``f`` has its only pole at ``P``.

    Returns the pole order ``alpha = -divisor_of(f)[P]`` and whether ``f`` is a
    valid monopole.  When both ``G`` and ``G - P`` are connected and
    ``alpha > 0``, ``f`` must also attain its strict unique minimum at ``P``;
    a failure there counts as invalid.
    """
    div = divisor_of(g, f)
    alpha = -div[P]
    ok = all(div[v] >= 0 for v in range(g.n) if v != P)
    ok = ok and (alpha > 0 or not any(div))
    if ok and alpha > 0 and g.is_connected() and len(components(g, {P})) == 1:
        ok = all(f[P] < f[v] for v in range(g.n) if v != P)
    return MonopoleCheck(alpha, ok)


def effective_divisors(n, k, avoid=None):
    """Every effective divisor of degree ``k`` on ``n`` vertices.

    Yields tuples in ascending lexicographic order, so the first hit of any
    search over them is the lexicographically least.  ``avoid`` excludes one
    vertex from the support.
    """
    if k < 0:
        return
    slots = [v for v in range(n) if v != avoid]
    if not slots:
        if k == 0:
            yield (0,) * n
        return
    D = [0] * n

    def fill(i, left):
        v = slots[i]
        if i == len(slots) - 1:
            D[v] = left
            yield tuple(D)
            return
        for c in range(left + 1):
            D[v] = c
            yield from fill(i + 1, left - c)
        D[v] = 0

    yield from fill(0, k)


def count_effective(n, k):
    """``|Div_+^k|`` on ``n`` vertices."""
    from math import comb

    return comb(n + k - 1, k) if k >= 0 else 0


@dataclass(frozen=True)
class DivisorClass:
    """Canonical label of a linear-equivalence class (its q-reduced divisor)."""

    representative: tuple
    base: int = 0

    @classmethod
    def of(cls, g, D, base=0):
        return cls(reduce(g, D, base).reduced, base)


def parse_divisor(text, n, named=None):
    """Parse a dense ``a,b,c`` or sparse ``v:c,v:c`` divisor.

    ``named`` maps symbolic vertex names (e.g. ``P``) to indices for the sparse
    form.
    """
    named = named or {}
    text = text.strip()
    if not text:
        raise InputError("empty divisor")
    items = [t.strip() for t in text.split(",")]
    if any(":" in t for t in items):
        D = [0] * n
        for t in items:
            key, sep, val = t.partition(":")
            if not sep:
                raise InputError(f"mixed dense/sparse divisor entry {t!r}")
            key = key.strip()
            try:
                v = named[key] if key in named else int(key)
                c = int(val)
            except ValueError as exc:
                raise InputError(f"bad divisor entry {t!r}") from exc
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range")
            D[v] += c
        return tuple(D)
    try:
        D = tuple(int(t) for t in items)
    except ValueError as exc:
        raise InputError(f"bad dense divisor {text!r}") from exc
    if len(D) != n:
        raise LengthMismatch(f"divisor has {len(D)} entries, graph has {n} vertices")
    return D
