"""Detectors over red-blue triple colorings.

Three searches live here.  The first is a pair-state dynamic program: for a
target color, alpha(u, v) is one more than the number of triples in the
longest target-colored monotone path that finishes with the pair (u, v).
Assigning a triple (u, v, w) the target color always pushes alpha(v, w)
above alpha(u, v), which is what the avoidance search in module search
exploits for pruning.

The second finds an order-preserving embedding of a fixed pattern with all
edges blue.  Patterns of bounded width (largest span of an edge) admit a
window DP: once the last w chosen host vertices are fixed, earlier choices
cannot influence feasibility, so failed (position, window) states are
cached and the search runs in polynomial time for fixed width.

The third finds a blue member of the jump family with n jumps without
fixing the member in advance.  It scans host vertex tuples in lexicographic
order and carries, per tuple, the set of feasible jump placements encoded
as (last three flags, jumps used); every required edge of a jump pattern
touches at most five consecutive positions, so this state plus the last
four chosen vertices determines the future exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import (
    Color,
    Embedding,
    OrderedTripleSystem,
    TripleColoring,
    all_pairs,
    pair_rank,
)
from .family import JumpSpec, required_edges


class _FastBits:
    """O(1) red/blue lookups via precomputed rank offsets."""

    def __init__(self, c: TripleColoring):
        N = c.N
        self.bits = c.bits
        pref1 = [0] * (N + 2)
        for a in range(1, N + 1):
            pref1[a + 1] = pref1[a] + comb(N - a, 2)
        pref2 = [0] * (N + 2)
        for j in range(1, N + 1):
            pref2[j] = pref2[j - 1] + (N - j)
        self.pref1 = pref1
        self.pref2 = pref2

    def rank(self, a: int, b: int, c: int) -> int:
        return self.pref1[a] + (self.pref2[b - 1] - self.pref2[a]) + c - b - 1

    def is_red(self, a: int, b: int, c: int) -> bool:
        return bool((self.bits >> self.rank(a, b, c)) & 1)

    def is_blue(self, a: int, b: int, c: int) -> bool:
        return not (self.bits >> self.rank(a, b, c)) & 1


@dataclass(frozen=True)
class AlphaTable:
    """Path-depth table for one target color, in pair lex-rank order."""

    N: int
    target: Color
    values: tuple[int, ...]

    def value(self, u: int, v: int) -> int:
        return self.values[pair_rank(u, v, self.N)]

    @property
    def max_value(self) -> int:
        return max(self.values, default=0)


def alpha_table(c: TripleColoring, target: Color = Color.RED) -> AlphaTable:
    """alpha(u, v) = 1 + max alpha(t, u) over t < u with (t, u, v) on target.

    The empty maximum gives alpha = 1: a bare pair ends a trivial path.
    """
    fast = _FastBits(c)
    hit = fast.is_red if target is Color.RED else fast.is_blue
    N = c.N
    values = [0] * comb(N, 2)
    for u in range(1, N + 1):
        for v in range(u + 1, N + 1):
            best = 0
            for t in range(1, u):
                if hit(t, u, v):
                    a = values[pair_rank(t, u, N)]
                    if a > best:
                        best = a
            values[pair_rank(u, v, N)] = best + 1
    return AlphaTable(N, target, tuple(values))


def longest_red_path(c: TripleColoring) -> tuple[int, Embedding]:
    """Maximum alpha over all pairs and a path witness of that depth.

    A red monotone path on m vertices exists iff the returned depth is at
    least m - 1.  The witness has depth + 1 vertices and is the
    lexicographically least such sequence (or all of [N] for N < 2).
    """
    N = c.N
    if N < 2:
        return 0, Embedding(tuple(range(1, N + 1)))
    table = alpha_table(c, Color.RED)
    fast = _FastBits(c)
    # forward table: longest red continuation after starting with (u, v)
    cont = [0] * comb(N, 2)
    pairs = list(all_pairs(N))
    for i in range(len(pairs) - 1, -1, -1):
        u, v = pairs[i]
        best = 0
        for w in range(v + 1, N + 1):
            if fast.is_red(u, v, w):
                f = cont[pair_rank(v, w, N)] + 1
                if f > best:
                    best = f
        cont[i] = best
    top = max(cont)
    if top + 1 != table.max_value:
        raise RuntimeError("path tables disagree; this is a bug")
    u, v = min(p for i, p in enumerate(pairs) if cont[i] == top)
    path = [u, v]
    remaining = top
    while remaining:
        u, v = path[-2], path[-1]
        w = next(
            w
            for w in range(v + 1, N + 1)
            if fast.is_red(u, v, w) and cont[pair_rank(v, w, N)] == remaining - 1
        )
        path.append(w)
        remaining -= 1
    return table.max_value, Embedding(tuple(path))


def find_blue_embedding(
    c: TripleColoring, pattern: OrderedTripleSystem
) -> Embedding | None:
    """Least order-preserving embedding of pattern with every edge blue.

    None when no embedding exists; patterns larger than the host never fit.
    """
    m, N = pattern.m, c.N
    if m > N:
        return None
    if m == 0:
        return Embedding(())
    fast = _FastBits(c)
    w = pattern.width
    by_last: dict[int, list[tuple[int, int]]] = {}
    for (a, b, cc) in pattern.sorted_edges:
        by_last.setdefault(cc, []).append((a, b))
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def dfs(prefix: list[int]) -> tuple[int, ...] | None:
        pos = len(prefix) + 1
        if pos > m:
            return tuple(prefix)
        window = tuple(prefix[max(0, len(prefix) - w):])
        if (pos, window) in failed:
            return None
        start = pos - len(window)
        lo = prefix[-1] + 1 if prefix else 1
        for h in range(lo, N - (m - pos) + 1):
            ok = True
            for (a, b) in by_last.get(pos, ()):
                if not fast.is_blue(prefix[a - 1], prefix[b - 1], h):
                    ok = False
                    break
            if not ok:
                continue
            prefix.append(h)
            res = dfs(prefix)
            prefix.pop()
            if res is not None:
                return res
        failed.add((pos, window))
        return None

    found = dfs([])
    if found is None:
        return None
    for (a, b, cc) in pattern.edges:
        if not fast.is_blue(found[a - 1], found[b - 1], found[cc - 1]):
            raise RuntimeError("embedding failed recheck; this is a bug")
    return Embedding(found)


def _member_transitions(fast, n, N, prefix, alive, h):
    """Feasible (flags, used) states after appending host vertex h."""
    p = len(prefix)
    if p >= 2 and not fast.is_blue(prefix[-2], prefix[-1], h):
        return frozenset()
    one_a = p < 3 or fast.is_blue(prefix[-3], prefix[-2], h)
    one_b = p < 3 or fast.is_blue(prefix[-3], prefix[-1], h)
    two = p < 4 or fast.is_blue(prefix[-4], prefix[-2], h)
    out = set()
    for f3, used in alive:
        for f in (False, True):
            if f and (p == 0 or (f3 and f3[-1]) or used == n):
                continue
            if f3 and f3[-1] and not one_a:
                continue
            if len(f3) >= 2 and f3[-2] and not one_b:
                continue
            if len(f3) >= 3 and f3[-3] and f3[-1] and not two:
                continue
            used2 = used + f
            need = n - used2
            tail = 2 * need + f if need else (1 if f else 0)
            if h + tail > N:
                continue
            out.add(((f3 + (f,))[-3:], used2))
    return frozenset(out)


def _minimal_jump_flags(fast, n, verts) -> tuple[int, ...]:
    """Least jump set completing a known-good vertex tuple, jumps early first."""
    m = len(verts)

    def walk(pos, f3, used, jumps):
        if pos > m:
            return jumps if used == n and not f3[-1] else None
        p = pos - 1
        for f in (True, False):
            if f and (p == 0 or (f3 and f3[-1]) or used == n or pos == m):
                continue
            if f3 and f3[-1] and p >= 3 and not fast.is_blue(
                verts[p - 3], verts[p - 2], verts[p]
            ):
                continue
            if len(f3) >= 2 and f3[-2] and p >= 3 and not fast.is_blue(
                verts[p - 3], verts[p - 1], verts[p]
            ):
                continue
            if len(f3) >= 3 and f3[-3] and f3[-1] and p >= 4 and not fast.is_blue(
                verts[p - 4], verts[p - 2], verts[p]
            ):
                continue
            res = walk(
                pos + 1, (f3 + (f,))[-3:], used + f, jumps + ((pos,) if f else ())
            )
            if res is not None:
                return res
        return None

    flags = walk(1, (), 0, ())
    if flags is None:
        raise RuntimeError("flag reconstruction failed; this is a bug")
    return flags


def find_blue_jump_member(
    c: TripleColoring, n: int
) -> tuple[tuple[int, ...], JumpSpec] | None:
    """Least blue-embedded member of the jump family with n jumps.

    Searches every host size from 2n+1 up to N.  The witness minimizes the
    host vertex tuple first and the jump position tuple second; None when
    no member of the family embeds with all required edges blue.
    """
    if n < 1:
        raise ValueError("need at least one jump")
    N = c.N
    if 2 * n + 1 > N:
        return None
    fast = _FastBits(c)
    failed: set[tuple[tuple[int, ...], frozenset]] = set()

    def dfs(prefix: list[int], alive: frozenset) -> tuple[int, ...] | None:
        if any(used == n and f3 and not f3[-1] for f3, used in alive):
            return tuple(prefix)
        state = (tuple(prefix[-4:]), alive)
        if state in failed:
            return None
        lo = prefix[-1] + 1 if prefix else 1
        for h in range(lo, N + 1):
            nxt = _member_transitions(fast, n, N, prefix, alive, h)
            if not nxt:
                continue
            prefix.append(h)
            res = dfs(prefix, nxt)
            prefix.pop()
            if res is not None:
                return res
        failed.add(state)
        return None

    verts = dfs([], frozenset({((), 0)}))
    if verts is None:
        return None
    jumps = _minimal_jump_flags(fast, n, verts)
    spec = JumpSpec(len(verts), frozenset(jumps))
    for (a, b, cc) in required_edges(len(verts), spec).edges:
        if not fast.is_blue(verts[a - 1], verts[b - 1], verts[cc - 1]):
            raise RuntimeError("member witness failed recheck; this is a bug")
    return verts, spec
