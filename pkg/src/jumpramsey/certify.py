"""Certificates tying pair colorings to triple colorings.

One direction: a block chain deep enough in the beta table pins down a blue
copy of the minimal jump pattern, and extract_blue_jump_witness turns the
chain into a checked embedding.  The other direction: a coloring of the
associated graph of a jump pattern that is non-increasing along required
edges always contains a monochromatic triangle, and gh_triangle_finder
locates one by recursing on the largest jump.

The profile machinery sits between the two: every vertex gets a downward
closed staircase built from (alpha, beta) pairs of its predecessors, and
verify_profile_property checks that no group of same-staircase vertices
carries a monochromatic triangle under alpha.  Chains are the reason: such
a triangle would extend a chain by one block and push beta past itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import Color, Embedding, TripleColoring, pair_rank
from .detect import AlphaTable, alpha_table, find_blue_jump_member
from .family import JumpSpec, associated_graph, jump_min, required_edges, _as_spec, _require_valid


class CertificationError(RuntimeError):
    """A witness or certificate failed verification; names the culprit."""

    def __init__(self, message: str, edge: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.edge = edge


@dataclass(frozen=True)
class BetaChain:
    """Block chain of odd length: block i is (v_{2i-1}, v_{2i}, v_{2i+1}).

    ell counts one more than the blocks; alpha is constant inside a block
    and non-increasing from one block to the next.  The alpha conditions
    depend on a coloring and are checked by validate_beta_chain, not here.
    """

    vertices: tuple[int, ...]
    block_values: tuple[int, ...]
    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if len(self.vertices) != 2 * self.ell - 1:
            raise ValueError(
                f"chain with ell={self.ell} needs {2 * self.ell - 1} vertices"
            )
        if len(self.block_values) != self.ell - 1:
            raise ValueError(f"chain with ell={self.ell} needs {self.ell - 1} blocks")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError("chain vertices must increase")
        if any(
            a < b for a, b in zip(self.block_values, self.block_values[1:])
        ):
            raise ValueError("block values must be non-increasing")

    @property
    def final_pair(self) -> tuple[int, int] | None:
        if self.ell < 2:
            return None
        return self.vertices[-2], self.vertices[-1]

    def block(self, i: int) -> tuple[int, int, int]:
        """Vertices of block i, 1-based."""
        if not 1 <= i <= self.ell - 1:
            raise IndexError(f"no block {i} in a chain with ell={self.ell}")
        return tuple(self.vertices[2 * i - 2: 2 * i + 1])


def validate_beta_chain(c: TripleColoring, chain: BetaChain,
                        alpha: AlphaTable | None = None) -> None:
    """Raise CertificationError unless the alpha conditions hold in c."""
    if chain.vertices and not (
        1 <= chain.vertices[0] and chain.vertices[-1] <= c.N
    ):
        raise CertificationError(f"chain vertices leave [{c.N}]")
    if alpha is None:
        alpha = alpha_table(c, Color.RED)
    for i in range(1, chain.ell):
        x, y, z = chain.block(i)
        want = chain.block_values[i - 1]
        for (p, q) in ((x, y), (y, z), (x, z)):
            if alpha.value(p, q) != want:
                raise CertificationError(
                    f"block {i} claims alpha {want} but alpha({p},{q}) = "
                    f"{alpha.value(p, q)}"
                )


@dataclass(frozen=True)
class BetaTable:
    """Beta values in pair lex-rank order, with one optimal chain per pair.

    chains[r] is None exactly when the pair's beta is 1.
    """

    N: int
    alpha: AlphaTable
    betas: tuple[int, ...]
    chains: tuple[BetaChain | None, ...]

    def beta(self, u: int, v: int) -> int:
        return self.betas[pair_rank(u, v, self.N)]

    def chain(self, u: int, v: int) -> BetaChain | None:
        return self.chains[pair_rank(u, v, self.N)]

    @property
    def max_beta(self) -> int:
        return max(self.betas, default=1)


def beta_table(c: TripleColoring) -> BetaTable:
    """Longest block chain ending at each pair, by dynamic programming.

    A block (t, u, v) requires alpha(t,u) = alpha(u,v) = alpha(t,v); chains
    glue blocks at a shared vertex with non-increasing alpha.  B counts
    blocks; beta = B + 1.  Ties break toward the smallest predecessor, so
    the reconstructed chain is deterministic.
    """
    N = c.N
    alpha = alpha_table(c, Color.RED)
    size = comb(N, 2)
    blocks = [0] * size
    pred: list[tuple[int, int | None] | None] = [None] * size
    for u in range(1, N + 1):
        for v in range(u + 1, N + 1):
            r = pair_rank(u, v, N)
            auv = alpha.value(u, v)
            best, best_pred = 0, None
            for t in range(1, u):
                if alpha.value(t, u) != auv or alpha.value(t, v) != auv:
                    continue
                ext, ext_s = 0, None
                for s in range(1, t):
                    rs = pair_rank(s, t, N)
                    if blocks[rs] >= 1 and alpha.value(s, t) >= auv:
                        if blocks[rs] > ext:
                            ext, ext_s = blocks[rs], s
                if 1 + ext > best:
                    best, best_pred = 1 + ext, (t, ext_s)
            blocks[r] = best
            pred[r] = best_pred

    def rebuild(u: int, v: int) -> tuple[int, ...]:
        t, s = pred[pair_rank(u, v, N)]
        if s is None:
            return (t, u, v)
        return rebuild(s, t) + (u, v)

    betas = []
    chains: list[BetaChain | None] = []
    for u in range(1, N + 1):
        for v in range(u + 1, N + 1):
            b = blocks[pair_rank(u, v, N)]
            betas.append(b + 1)
            if b == 0:
                chains.append(None)
                continue
            verts = rebuild(u, v)
            values = tuple(
                alpha.value(verts[2 * i], verts[2 * i + 1]) for i in range(b)
            )
            chains.append(BetaChain(verts, values, b + 1))
    return BetaTable(N, alpha, tuple(betas), tuple(chains))


def extract_blue_jump_witness(c: TripleColoring, chain: BetaChain) -> Embedding:
    """Chain of ell = n+1 -> blue embedding of the minimal n-jump pattern.

    Non-increasing alpha along the chain makes every required edge blue:
    a red (u, v, w) would force alpha(v, w) past alpha(u, v).  Every edge
    is still re-checked against c; a non-blue edge is reported by name.
    """
    n = chain.ell - 1
    if n < 1:
        raise CertificationError("chain too short: need ell >= 2")
    validate_beta_chain(c, chain)
    pattern, _ = jump_min(n)
    verts = chain.vertices
    for (a, b, cc) in pattern.sorted_edges:
        triple = (verts[a - 1], verts[b - 1], verts[cc - 1])
        if c.color(*triple) is not Color.BLUE:
            raise CertificationError(
                f"required edge ({a},{b},{cc}) maps to non-blue {triple}",
                edge=(a, b, cc),
            )
    return Embedding(verts)


@dataclass(frozen=True)
class ProfileStaircase:
    """Downward-closed profile: maxB[a-1] is the deepest b at width a.

    Width runs to the largest alpha seen at the vertex, never clamped.
    """

    maxB: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.maxB):
            raise ValueError("staircase depths must be positive")
        if any(a < b for a, b in zip(self.maxB, self.maxB[1:])):
            raise ValueError("staircase must be non-increasing")

    @property
    def width(self) -> int:
        return len(self.maxB)

    def contains(self, a: int, b: int) -> bool:
        return 1 <= a <= len(self.maxB) and 1 <= b <= self.maxB[a - 1]


def profile_table(c: TripleColoring) -> dict[int, ProfileStaircase]:
    """Staircase of (alpha, beta) pairs over all predecessors, per vertex."""
    table = beta_table(c)
    N = c.N
    out: dict[int, ProfileStaircase] = {}
    for v in range(1, N + 1):
        pts = [(table.alpha.value(u, v), table.beta(u, v)) for u in range(1, v)]
        width = max((a for a, _ in pts), default=0)
        maxB = tuple(
            max(b for a2, b in pts if a2 >= a) for a in range(1, width + 1)
        )
        out[v] = ProfileStaircase(maxB)
    return out


def count_downsets(n: int) -> int:
    """Downward-closed subsets of the n-by-n grid, counted one staircase
    at a time: a subset is a non-increasing depth vector over columns."""
    if n < 0:
        raise ValueError("grid size must be nonnegative")

    def extend(column: int, cap: int) -> int:
        if column == n:
            return 1
        return sum(extend(column + 1, depth) for depth in range(cap + 1))

    return extend(0, n)


@dataclass(frozen=True)
class ProfileReport:
    """Outcome of the same-profile triangle scan."""

    n: int
    N: int
    groups: tuple[tuple[int, ...], ...]
    group_profiles: tuple[ProfileStaircase, ...]
    red_depth: int
    blue_member: tuple[tuple[int, ...], JumpSpec] | None
    triangle: tuple[int, int, int] | None = None
    triangle_alpha: int | None = None
    extended_chain: BetaChain | None = None

    @property
    def has_red_path(self) -> bool:
        return self.red_depth >= self.n + 1

    @property
    def preconditions_hold(self) -> bool:
        return not self.has_red_path and self.blue_member is None

    @property
    def clean(self) -> bool:
        return self.triangle is None


def verify_profile_property(c: TripleColoring, n: int) -> ProfileReport:
    """Group vertices by staircase and scan each group for a triangle
    monochromatic under alpha.

    Under the preconditions (no red path on n+2 vertices, no blue n-jump
    member) no group may contain one: a triangle {u,v,w} with the same
    profile at u and w yields a predecessor chain that (u,v,w) extends,
    forcing beta(v,w) above itself.  A found triangle therefore comes with
    that extended chain; when instead the preconditions fail with some
    beta above n, the report carries a chain of ell = n+1 cut from the
    beta table, the object the blue-member extraction consumes.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    N = c.N
    table = beta_table(c)
    alpha = table.alpha
    profiles = profile_table(c)
    by_profile: dict[ProfileStaircase, list[int]] = {}
    for v in range(1, N + 1):
        by_profile.setdefault(profiles[v], []).append(v)
    groups = tuple(
        tuple(vs) for vs in sorted(by_profile.values(), key=lambda vs: vs[0])
    )
    group_profiles = tuple(profiles[vs[0]] for vs in groups)
    depth = alpha.max_value
    member = find_blue_jump_member(c, n)

    triangle = triangle_alpha = None
    extended = None
    for vs in groups:
        for (u, v, w) in combinations(vs, 3):
            a = alpha.value(u, v)
            if alpha.value(u, w) == a and alpha.value(v, w) == a:
                triangle, triangle_alpha = (u, v, w), a
                extended = _extend_chain(table, u, v, w)
                break
        if triangle:
            break

    if extended is None:
        overflow = next(
            (
                (u, v)
                for u in range(1, N + 1)
                for v in range(u + 1, N + 1)
                if table.beta(u, v) >= n + 1
            ),
            None,
        )
        if overflow is not None:
            chain = table.chain(*overflow)
            extended = BetaChain(
                chain.vertices[: 2 * n + 1], chain.block_values[:n], n + 1
            )

    return ProfileReport(
        n=n,
        N=N,
        groups=groups,
        group_profiles=group_profiles,
        red_depth=depth,
        blue_member=member,
        triangle=triangle,
        triangle_alpha=triangle_alpha,
        extended_chain=extended,
    )


def _extend_chain(table: BetaTable, u: int, v: int, w: int) -> BetaChain:
    """Append (u, v, w) as one more block after a chain for some (t, u).

    The profile match promises a predecessor t of u with alpha(t,u) at
    least alpha(v,w) and beta(t,u) at least beta(v,w) >= 2; the chain for
    (t, u) then continues with v, w.
    """
    alpha = table.alpha
    a, b = alpha.value(v, w), table.beta(v, w)
    t = next(
        (
            t
            for t in range(1, u)
            if alpha.value(t, u) >= a and table.beta(t, u) >= b
        ),
        None,
    )
    if t is None:
        raise CertificationError(
            f"no predecessor of {u} dominates ({a},{b}); profiles disagree"
        )
    chain = table.chain(t, u)
    if chain is None:
        raise CertificationError(f"pair ({t},{u}) has no chain to extend")
    return BetaChain(
        chain.vertices + (v, w),
        chain.block_values + (alpha.value(u, v),),
        chain.ell + 1,
    )


def gh_triangle_finder(m: int, jumps, chi) -> tuple[int, int, int]:
    """Monochromatic triangle in the associated graph of a jump pattern.

    chi must color exactly the associated-graph pairs with values 1..|J|,
    non-increasing along every required edge.  The recursion peels the
    largest jump w: when the smallest used color never lands before w,
    drop w and recurse on the prefix; otherwise the color propagates to
    the pairs around w and {w-1, w, w+1} closes the triangle.
    """
    spec = _require_valid(_as_spec(m, jumps))
    n = len(spec.jumps)
    if n < 1:
        raise ValueError("need at least one jump")
    gh = associated_graph(m, spec)
    got, want = set(chi), gh.pairs
    if got != want:
        off = min(got.symmetric_difference(want))
        side = "missing" if off in want else "extra"
        raise ValueError(f"chi domain mismatch: {side} pair {off}")
    for pair, value in sorted(chi.items()):
        if not isinstance(value, int) or not 1 <= value <= n:
            raise ValueError(f"chi({pair}) = {value} outside 1..{n}")
    for (a, b, cc) in required_edges(m, spec).sorted_edges:
        if chi[(a, b)] < chi[(b, cc)]:
            raise CertificationError(
                f"chi increases along required edge ({a},{b},{cc})",
                edge=(a, b, cc),
            )

    tri = _gh_recurse(m, spec.sorted_jumps, chi)
    x, y, z = tri
    for pair in ((x, y), (y, z), (x, z)):
        if pair not in gh.pairs:
            raise RuntimeError(f"triangle pair {pair} not in graph; this is a bug")
    if not chi[(x, y)] == chi[(y, z)] == chi[(x, z)]:
        raise RuntimeError("triangle is not monochromatic; this is a bug")
    return tri


def _gh_recurse(m: int, jumps: tuple[int, ...], chi) -> tuple[int, int, int]:
    if len(jumps) == 1:
        v = jumps[0]
        return (v - 1, v, v + 1)
    w = jumps[-1]
    domain = associated_graph(m, frozenset(jumps)).pairs
    c = min(chi[p] for p in domain)
    before = sorted(p for p in domain if p[1] <= w - 1 and chi[p] == c)
    if not before:
        return _gh_recurse(w - 1, jumps[:-1], chi)
    u, v = before[0]
    if (u, v) == (w - 2, w - 1):
        pass
    elif (u, v) == (w - 3, w - 1) and w - 2 in jumps:
        pass
    else:
        # color propagates along (v, v+1), ..., (w-2, w-1) by minimality
        assert v < w - 1
    return (w - 1, w, w + 1)
