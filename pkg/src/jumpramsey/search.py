"""Exhaustive avoidance search over red-blue triple colorings.

decide answers "is there a coloring of all triples of [N] with no red copy
of the red pattern and no blue copy of the blue spec", branching over
triples in lex rank order, red first.  The red pattern must be a monotone
path: its presence is tracked by an incremental alpha table, and a branch
dies the moment a pair's depth reaches the path length.  Lex order makes
the table exact without cascades: every triple ending at a pair is decided
before any triple starting there.  A blue monotone path gets the same
treatment; other blue specs are pruned by running the full detector on the
partial coloring with unassigned triples read as red, which only ever
prunes completed blue structures.

Parallel runs must not change answers, witnesses, or statistics.  Work is
split by enumerating all live prefixes at a fixed depth (independent of
the worker count), each subproblem runs under the same node cap, and the
results fold in prefix order exactly as a single-threaded run would have
encountered them; the budget accounting replays sequential semantics, so
a run that would have starved sequentially reports inconclusive no matter
how many workers finished their pieces.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .core import Color, OrderedTripleSystem, TripleColoring, all_triples, pair_rank
from .detect import alpha_table, find_blue_embedding, find_blue_jump_member, longest_red_path
from .family import monotone_path

DEFAULT_BUDGET = 10**9
SPLIT_DEPTH = 4


@dataclass(frozen=True)
class JumpsFamily:
    """Blue-side selector: any member of the n-jump family counts."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one jump")


@dataclass(frozen=True)
class AvoidanceProblem:
    N: int
    red: OrderedTripleSystem
    blue: OrderedTripleSystem | JumpsFamily

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be nonnegative")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    max_depth: int


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # sat | unsat | inconclusive
    witness: TripleColoring | None
    stats: SearchStats


@dataclass(frozen=True)
class BracketLevel:
    N: int
    outcome: SearchOutcome


@dataclass(frozen=True)
class BracketOutcome:
    levels: tuple[BracketLevel, ...]
    largest_sat: int | None
    status: str  # closed | open | inconclusive


class _Found(Exception):
    def __init__(self, bits: int):
        self.bits = bits


class _Budget(Exception):
    pass


class _Engine:
    """One DFS lane: incremental tables plus the partial-coloring bitmask.

    bits starts all ones (red); a blue branch clears its rank bit, so the
    mask always reads unassigned triples as red, which is what the blue
    detectors need to stay sound on partial colorings.
    """

    def __init__(self, N: int, red_m: int, blue_desc: tuple, symmetric: bool,
                 cap: int):
        self.N = N
        self.red_m = red_m
        self.symmetric = symmetric
        self.cap = cap
        self.total = comb(N, 3)
        self.pairs_idx = [
            (pair_rank(u, v, N), pair_rank(v, w, N)) for (u, v, w) in all_triples(N)
        ]
        npairs = comb(N, 2)
        self.ar = [1] * npairs
        self.blue_kind = blue_desc[0]
        if self.blue_kind == "path":
            self.blue_m = blue_desc[1]
            self.ab = [1] * npairs
        elif self.blue_kind == "pattern":
            self.pattern = OrderedTripleSystem(blue_desc[1], frozenset(blue_desc[2]))
        else:
            self.jump_n = blue_desc[1]
        self.bits = (1 << self.total) - 1
        self.nodes = 0
        self.max_depth = 0
        self.hit = False

    def _count(self, rank: int) -> None:
        if self.nodes == self.cap:
            self.hit = True
            raise _Budget()
        self.nodes += 1
        if rank + 1 > self.max_depth:
            self.max_depth = rank + 1

    def _apply(self, rank: int, red: bool) -> int:
        iuv, ivw = self.pairs_idx[rank]
        if red:
            old = self.ar[ivw]
            cand = self.ar[iuv] + 1
            if cand > old:
                self.ar[ivw] = cand
            return old
        self.bits &= ~(1 << rank)
        if self.blue_kind == "path":
            old = self.ab[ivw]
            cand = self.ab[iuv] + 1
            if cand > old:
                self.ab[ivw] = cand
            return old
        return 0

    def _unapply(self, rank: int, red: bool, token: int) -> None:
        iuv, ivw = self.pairs_idx[rank]
        if red:
            self.ar[ivw] = token
        else:
            self.bits |= 1 << rank
            if self.blue_kind == "path":
                self.ab[ivw] = token

    def _branch_dead(self, rank: int, red: bool) -> bool:
        iuv, _ = self.pairs_idx[rank]
        if red:
            return self.ar[iuv] + 1 >= self.red_m - 1
        if self.blue_kind == "path":
            return self.ab[iuv] + 1 >= self.blue_m - 1
        return False

    def blue_present(self) -> bool:
        c = TripleColoring(self.N, self.bits)
        if self.blue_kind == "pattern":
            return find_blue_embedding(c, self.pattern) is not None
        if self.blue_kind == "jumps":
            return find_blue_jump_member(c, self.jump_n) is not None
        return False

    def dfs(self, rank: int) -> None:
        if rank == self.total:
            raise _Found(self.bits)
        for red in (True, False):
            if rank == 0 and self.symmetric and not red:
                continue
            if self._branch_dead(rank, red):
                continue
            self._count(rank)
            token = self._apply(rank, red)
            if not red and self.blue_kind != "path" and self.blue_present():
                self._unapply(rank, red, token)
                continue
            self.dfs(rank + 1)
            self._unapply(rank, red, token)

    def decompose(self, depth: int) -> list[tuple[bool, ...]]:
        """All live branch prefixes at the split depth, in DFS order."""
        prefixes: list[tuple[bool, ...]] = []

        def go(rank: int, acc: list[bool]) -> None:
            if rank == depth:
                prefixes.append(tuple(acc))
                return
            for red in (True, False):
                if rank == 0 and self.symmetric and not red:
                    continue
                if self._branch_dead(rank, red):
                    continue
                self._count(rank)
                token = self._apply(rank, red)
                if not red and self.blue_kind != "path" and self.blue_present():
                    self._unapply(rank, red, token)
                    continue
                acc.append(red)
                go(rank + 1, acc)
                acc.pop()
                self._unapply(rank, red, token)

        go(0, [])
        return prefixes

    def replay(self, prefix: tuple[bool, ...]) -> None:
        for rank, red in enumerate(prefix):
            self._apply(rank, red)


def _run_split(args) -> tuple[int | None, int, bool, int]:
    N, red_m, blue_desc, symmetric, prefix, cap = args
    eng = _Engine(N, red_m, blue_desc, symmetric, cap)
    eng.replay(prefix)
    try:
        eng.dfs(len(prefix))
    except _Found as f:
        return f.bits, eng.nodes, eng.hit, eng.max_depth
    except _Budget:
        return None, eng.nodes, True, eng.max_depth
    return None, eng.nodes, False, eng.max_depth


def _blue_descriptor(blue) -> tuple:
    if isinstance(blue, JumpsFamily):
        return ("jumps", blue.n)
    if blue.edges and blue == monotone_path(blue.m):
        return ("path", blue.m)
    return ("pattern", blue.m, tuple(blue.sorted_edges))


def decide(problem: AvoidanceProblem, budget: int = DEFAULT_BUDGET,
           workers: int = 1) -> SearchOutcome:
    """Search for an avoidance coloring; see the module docstring.

    The red pattern must be a monotone path on at least 3 vertices.  A
    found witness is re-verified with the full detectors before return;
    running out of node budget reports inconclusive, never a guess.
    """
    if problem.red != monotone_path(problem.red.m) or problem.red.m < 3:
        raise ValueError("red pattern must be a monotone path on >= 3 vertices")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if workers < 1:
        raise ValueError("need at least one worker")
    N = problem.N
    red_m = problem.red.m
    blue_desc = _blue_descriptor(problem.blue)
    symmetric = (
        not isinstance(problem.blue, JumpsFamily) and problem.blue == problem.red
    )

    probe = _Engine(N, red_m, blue_desc, symmetric, cap=budget)
    if probe.blue_present():
        # blue spec embeds with no blue triples at all: nothing to search
        return SearchOutcome("unsat", None, SearchStats(0, 0))
    total = probe.total
    depth = SPLIT_DEPTH if total > SPLIT_DEPTH else total
    try:
        prefixes = probe.decompose(depth)
    except _Budget:
        return SearchOutcome("inconclusive", None, SearchStats(budget, probe.max_depth))
    nodes_dec = probe.nodes
    depth_dec = probe.max_depth
    if total <= SPLIT_DEPTH:
        # the decomposition already walked every full assignment
        results = ((_bits_of(p), 0, False, len(p)) for p in prefixes)
        return _finish(_fold(results, budget, nodes_dec, depth_dec),
                       problem, blue_desc)

    cap = budget - nodes_dec
    payloads = [(N, red_m, blue_desc, symmetric, p, cap) for p in prefixes]
    if workers == 1:
        folded = _fold((_run_split(pl) for pl in payloads), budget, nodes_dec,
                       depth_dec)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_run_split, pl) for pl in payloads]
            try:
                folded = _fold((f.result() for f in futures), budget, nodes_dec,
                               depth_dec)
            finally:
                for f in futures:
                    f.cancel()
    return _finish(folded, problem, blue_desc)


def _bits_of(prefix: tuple[bool, ...]) -> int:
    bits = 0
    for rank, red in enumerate(prefix):
        if red:
            bits |= 1 << rank
    return bits


def _fold(results, budget: int, nodes_dec: int,
          depth_dec: int) -> tuple[str, int | None, SearchStats]:
    used = nodes_dec
    depth = depth_dec
    for bits, nodes_i, hit_i, depth_i in results:
        if depth_i > depth:
            depth = depth_i
        if hit_i or nodes_i > budget - used:
            return "inconclusive", None, SearchStats(budget, depth)
        if bits is not None:
            return "sat", bits, SearchStats(used + nodes_i, depth)
        used += nodes_i
    return "unsat", None, SearchStats(used, depth)


def _finish(folded: tuple[str, int | None, SearchStats],
            problem: AvoidanceProblem, blue_desc: tuple) -> SearchOutcome:
    status, bits, stats = folded
    if bits is None:
        return SearchOutcome(status, None, stats)
    c = TripleColoring(problem.N, bits)
    depth, _ = longest_red_path(c)
    if depth >= problem.red.m - 1:
        raise RuntimeError("witness contains the red path; this is a bug")
    kind = blue_desc[0]
    if kind == "path":
        bad = alpha_table(c, Color.BLUE).max_value >= blue_desc[1] - 1
    elif kind == "pattern":
        bad = find_blue_embedding(c, problem.blue) is not None
    else:
        bad = find_blue_jump_member(c, blue_desc[1]) is not None
    if bad:
        raise RuntimeError("witness contains the blue spec; this is a bug")
    return SearchOutcome("sat", c, stats)


def bracket(red: OrderedTripleSystem, blue, nmax: int,
            budget: int = DEFAULT_BUDGET, workers: int = 1) -> BracketOutcome:
    """Climb N = 2, 3, ... up to nmax, stopping at the first unsat level.

    A witness at N restricts to one at N-1, so the first unsat level closes
    the bracket; a sat answer at nmax leaves it open.
    """
    if nmax < 3:
        raise ValueError("nmax must be at least 3")
    levels: list[BracketLevel] = []
    largest = None
    status = "open"
    for N in range(2, nmax + 1):
        out = decide(AvoidanceProblem(N, red, blue), budget, workers)
        levels.append(BracketLevel(N, out))
        if out.status == "sat":
            largest = N
            continue
        status = "closed" if out.status == "unsat" else "inconclusive"
        break
    return BracketOutcome(tuple(levels), largest, status)
