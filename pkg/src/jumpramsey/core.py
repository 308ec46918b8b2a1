"""Shared primitives for ordered 3-uniform hypergraphs on [N].

Vertices are 1-based and triples are written (a, b, c) with a < b < c.
Triple ranks are 0-based positions in the lexicographic enumeration of all
C(N, 3) increasing triples; a red-blue triple coloring is stored as one bit
per rank (1 = red).  The text formats defined here are the interchange
layer for every command-line tool in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb


class FormatError(ValueError):
    """Raised when a text input does not match one of the file formats."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Color(Enum):
    RED = "red"
    BLUE = "blue"

    def flipped(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


def check_triple(a: int, b: int, c: int, m: int) -> None:
    """Reject anything that is not an increasing triple inside [m]."""
    if not (1 <= a < b < c <= m):
        raise ValueError(f"not an increasing triple in [{m}]: ({a}, {b}, {c})")


def lex_rank(triple: tuple[int, int, int], N: int) -> int:
    """0-based position of an increasing triple in lex order over [N]."""
    a, b, c = triple
    check_triple(a, b, c, N)
    rank = 0
    for i in range(1, a):
        rank += comb(N - i, 2)
    for j in range(a + 1, b):
        rank += N - j
    return rank + (c - b - 1)


def lex_unrank(rank: int, N: int) -> tuple[int, int, int]:
    """Inverse of lex_rank."""
    total = comb(N, 3)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range for N={N}")
    a = 1
    while rank >= comb(N - a, 2):
        rank -= comb(N - a, 2)
        a += 1
    b = a + 1
    while rank >= N - b:
        rank -= N - b
        b += 1
    return (a, b, b + 1 + rank)


def all_triples(N: int):
    """All increasing triples of [N] in lex-rank order."""
    return combinations(range(1, N + 1), 3)


def pair_rank(u: int, v: int, N: int) -> int:
    """0-based lex position of an increasing pair of [N]."""
    if not 1 <= u < v <= N:
        raise ValueError(f"not an increasing pair in [{N}]: ({u}, {v})")
    return (u - 1) * N - u * (u - 1) // 2 + (v - u - 1)


def all_pairs(N: int):
    return combinations(range(1, N + 1), 2)


@dataclass(frozen=True)
class OrderedTripleSystem:
    """An ordered 3-uniform hypergraph: m vertices, a set of increasing triples."""

    m: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("vertex count must be nonnegative")
        for (a, b, c) in self.edges:
            check_triple(a, b, c, self.m)

    @property
    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.edges)

    @property
    def width(self) -> int:
        """Largest span c - a over the edges, 0 when there are none."""
        return max((c - a for (a, _, c) in self.edges), default=0)


@dataclass(frozen=True)
class Embedding:
    """An order-preserving vertex map, recorded as its increasing image."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if any(v < 1 for v in vs) or any(x >= y for x, y in zip(vs, vs[1:])):
            raise ValueError(f"embedding image must be strictly increasing: {vs}")

    def __len__(self) -> int:
        return len(self.vertices)

    def apply(self, position: int) -> int:
        """Host vertex for a 1-based pattern position."""
        return self.vertices[position - 1]


@dataclass(frozen=True)
class PairColoring:
    """A total coloring of the pairs of [N] with colors 1..k.

    Colors are stored in pair lex-rank order.
    """

    N: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.N < 0 or self.k < 0:
            raise ValueError("N and k must be nonnegative")
        want = comb(self.N, 2)
        if len(self.colors) != want:
            raise ValueError(f"expected {want} pair colors, got {len(self.colors)}")
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise ValueError(f"color {c} outside 1..{self.k}")

    @classmethod
    def from_function(cls, N: int, k: int, fn) -> "PairColoring":
        return cls(N, k, tuple(fn(u, v) for u, v in all_pairs(N)))

    def color(self, u: int, v: int) -> int:
        """Color of the unordered pair {u, v}."""
        if u == v:
            raise ValueError("pair endpoints must differ")
        if u > v:
            u, v = v, u
        return self.colors[pair_rank(u, v, self.N)]

    def colors_used(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class TripleColoring:
    """A red-blue coloring of all triples of [N], one bit per lex rank (1 = red)."""

    N: int
    bits: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        if not 0 <= self.bits < 1 << comb(self.N, 3):
            raise ValueError("bits outside the range for this N")

    @property
    def num_triples(self) -> int:
        return comb(self.N, 3)

    @classmethod
    def all_red(cls, N: int) -> "TripleColoring":
        return cls(N, (1 << comb(N, 3)) - 1)

    @classmethod
    def all_blue(cls, N: int) -> "TripleColoring":
        return cls(N, 0)

    @classmethod
    def from_function(cls, N: int, fn) -> "TripleColoring":
        """fn(a, b, c) -> Color, evaluated over all triples."""
        bits = 0
        for r, (a, b, c) in enumerate(all_triples(N)):
            if fn(a, b, c) is Color.RED:
                bits |= 1 << r
        return cls(N, bits)

    def is_red_rank(self, rank: int) -> bool:
        if not 0 <= rank < self.num_triples:
            raise ValueError(f"rank {rank} out of range")
        return bool((self.bits >> rank) & 1)

    def is_red(self, a: int, b: int, c: int) -> bool:
        return self.is_red_rank(lex_rank((a, b, c), self.N))

    def is_blue(self, a: int, b: int, c: int) -> bool:
        return not self.is_red(a, b, c)

    def color(self, a: int, b: int, c: int) -> Color:
        return Color.RED if self.is_red(a, b, c) else Color.BLUE

    def bitstring(self) -> str:
        return "".join(
            "1" if (self.bits >> r) & 1 else "0" for r in range(self.num_triples)
        )

    def red_triples(self):
        for r, t in enumerate(all_triples(self.N)):
            if (self.bits >> r) & 1:
                yield t

    def restrict(self, M: int) -> "TripleColoring":
        """Induced coloring on the first M vertices."""
        if not 0 <= M <= self.N:
            raise ValueError(f"cannot restrict to [{M}]")
        bits = 0
        for r, t in enumerate(all_triples(M)):
            if self.is_red(*t):
                bits |= 1 << r
        return TripleColoring(M, bits)


@dataclass(frozen=True)
class Witness:
    """Contents of a witness file: vertices plus optional jumps and blocks."""

    vertices: tuple[int, ...]
    jumps: tuple[int, ...] | None = None
    blocks: tuple[int, ...] | None = None


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            out.append((no, line))
    return out


def _ints(tokens: list[str], line_no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {tokens!r}", line_no) from None


def parse_pair_coloring(text: str) -> PairColoring:
    """Read the 'pairs N k' format; entry order is free, totality is not."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    no, header = lines[0]
    tok = header.split()
    if len(tok) != 3 or tok[0] != "pairs":
        raise FormatError(f"expected 'pairs N k' header, got {header!r}", no)
    N, k = _ints(tok[1:], no)
    if N < 0 or k < 0:
        raise FormatError("N and k must be nonnegative", no)
    want = comb(N, 2)
    seen: dict[int, int] = {}
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"expected 'u v c', got {line!r}", no)
        u, v, c = _ints(parts, no)
        if not 1 <= u < v <= N:
            raise FormatError(f"({u}, {v}) is not an increasing pair in [{N}]", no)
        if not 1 <= c <= k:
            raise FormatError(f"color {c} outside 1..{k}", no)
        r = pair_rank(u, v, N)
        if r in seen:
            raise FormatError(f"duplicate entry for pair ({u}, {v})", no)
        seen[r] = c
    if len(seen) != want:
        missing = next(p for p in all_pairs(N) if pair_rank(*p, N) not in seen)
        raise FormatError(f"partial coloring: pair {missing} has no color")
    return PairColoring(N, k, tuple(seen[r] for r in range(want)))


def serialize_pair_coloring(chi: PairColoring) -> str:
    out = [f"pairs {chi.N} {chi.k}"]
    for (u, v) in all_pairs(chi.N):
        out.append(f"{u} {v} {chi.color(u, v)}")
    return "\n".join(out) + "\n"


def parse_triple_coloring(text: str) -> TripleColoring:
    """Read the 'triples N' format: a header and one bitstring line."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    no, header = lines[0]
    tok = header.split()
    if len(tok) != 2 or tok[0] != "triples":
        raise FormatError(f"expected 'triples N' header, got {header!r}", no)
    (N,) = _ints(tok[1:], no)
    if N < 0:
        raise FormatError("N must be nonnegative", no)
    want = comb(N, 3)
    body = lines[1:]
    if want == 0:
        if body:
            raise FormatError("unexpected data after header", body[0][0])
        return TripleColoring(N, 0)
    if len(body) != 1:
        raise FormatError(f"expected exactly one bitstring line of length {want}")
    no, bitline = body[0]
    if len(bitline) != want or set(bitline) - {"0", "1"}:
        raise FormatError(
            f"expected {want} characters over 0/1, got {len(bitline)}", no
        )
    bits = 0
    for r, ch in enumerate(bitline):
        if ch == "1":
            bits |= 1 << r
    return TripleColoring(N, bits)


def serialize_triple_coloring(c: TripleColoring) -> str:
    return f"triples {c.N}\n{c.bitstring()}\n"


def parse_pattern(text: str):
    """Read the 'pattern m' format.

    Returns (OrderedTripleSystem, jumps) where jumps is a tuple of jump
    positions when the optional trailing 'jumps ...' line is present,
    else None.
    """
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    no, header = lines[0]
    tok = header.split()
    if len(tok) != 2 or tok[0] != "pattern":
        raise FormatError(f"expected 'pattern m' header, got {header!r}", no)
    (m,) = _ints(tok[1:], no)
    if m < 0:
        raise FormatError("m must be nonnegative", no)
    edges: set[tuple[int, int, int]] = set()
    jumps: tuple[int, ...] | None = None
    for idx, (no, line) in enumerate(lines[1:], start=1):
        parts = line.split()
        if parts[0] == "jumps":
            if idx != len(lines) - 1:
                raise FormatError("'jumps' must be the final line", no)
            jumps = tuple(_ints(parts[1:], no))
            break
        if len(parts) != 3:
            raise FormatError(f"expected 'a b c' edge line, got {line!r}", no)
        a, b, c = _ints(parts, no)
        if not 1 <= a < b < c <= m:
            raise FormatError(f"({a}, {b}, {c}) is not an increasing triple in [{m}]", no)
        if (a, b, c) in edges:
            raise FormatError(f"duplicate edge ({a}, {b}, {c})", no)
        edges.add((a, b, c))
    return OrderedTripleSystem(m, frozenset(edges)), jumps


def serialize_pattern(pattern: OrderedTripleSystem, jumps=None) -> str:
    out = [f"pattern {pattern.m}"]
    for (a, b, c) in pattern.sorted_edges:
        out.append(f"{a} {b} {c}")
    if jumps is not None:
        out.append("jumps " + " ".join(str(j) for j in sorted(jumps)))
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> Witness:
    """Read a witness file: 'witness' header, then vertices/jumps/blocks lines."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input")
    no, header = lines[0]
    if header != "witness":
        raise FormatError(f"expected 'witness' header, got {header!r}", no)
    fields: dict[str, tuple[int, ...]] = {}
    for no, line in lines[1:]:
        parts = line.split()
        key = parts[0]
        if key not in ("vertices", "jumps", "blocks"):
            raise FormatError(f"unknown witness field {key!r}", no)
        if key in fields:
            raise FormatError(f"duplicate field {key!r}", no)
        fields[key] = tuple(_ints(parts[1:], no))
    if "vertices" not in fields:
        raise FormatError("witness has no 'vertices' field")
    vs = fields["vertices"]
    if any(x >= y for x, y in zip(vs, vs[1:])):
        raise FormatError(f"vertices must be strictly increasing: {vs}")
    return Witness(vs, fields.get("jumps"), fields.get("blocks"))


def serialize_witness(w: Witness) -> str:
    out = ["witness", "vertices " + " ".join(str(v) for v in w.vertices)]
    if w.jumps is not None:
        out.append("jumps " + " ".join(str(j) for j in w.jumps))
    if w.blocks is not None:
        out.append("blocks " + " ".join(str(b) for b in w.blocks))
    return "\n".join(out) + "\n"
