"""Pair-coloring constructions and the pair-to-triple lift.

The lift turns a k-coloring chi of the pairs of [N] into a red-blue triple
coloring: (u, v, w) is red exactly when chi(u, v) < chi(v, w).  A red
monotone path on m vertices then forces m-1 strictly increasing colors, so
lifts of k-colorings never contain a red path on k+2 vertices; the
triangle-free constructions below feed the blue side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .core import Color, PairColoring, TripleColoring, all_pairs


def lift(chi: PairColoring) -> TripleColoring:
    """Red where the pair colors strictly increase along the triple."""
    def paint(a, b, c):
        return Color.RED if chi.color(a, b) < chi.color(b, c) else Color.BLUE

    return TripleColoring.from_function(chi.N, paint)


def pentagon_coloring() -> PairColoring:
    """2-coloring of the pairs of [5]: cycle pairs 1, diagonals 2."""
    cycle = {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}
    return PairColoring.from_function(
        5, 2, lambda u, v: 1 if (u, v) in cycle else 2
    )


# reduction polynomial x^4 + x + 1 as a bit mask
_GF16_MODULUS = 0b10011


def _gf16_log_table() -> dict[int, int]:
    log = {}
    p = 1
    for e in range(15):
        log[p] = e
        p <<= 1
        if p & 0b10000:
            p ^= _GF16_MODULUS
    return log


def gf16_coloring() -> PairColoring:
    """3-coloring of the pairs of [16] from the field with 16 elements.

    Vertex i stands for the polynomial with coefficient bits i-1; the color
    of {u, v} is the discrete log of their sum, taken modulo 3, shifted to
    1..3.  Addition of distinct elements never gives 0, so this is total.
    """
    log = _gf16_log_table()
    return PairColoring.from_function(
        16, 3, lambda u, v: log[(u - 1) ^ (v - 1)] % 3 + 1
    )


def schur_coloring(classes) -> PairColoring:
    """Difference coloring from a partition of 1..N-1.

    chi(u, v) is the index (1-based) of the class containing v - u.  When
    every class is sum-free the result has no monochromatic triangle.
    """
    classes = [frozenset(c) for c in classes]
    if not classes or any(not c for c in classes):
        raise ValueError("classes must be nonempty")
    owner: dict[int, int] = {}
    for i, cls in enumerate(classes, start=1):
        for d in cls:
            if d < 1:
                raise ValueError(f"difference {d} is not positive")
            if d in owner:
                raise ValueError(f"difference {d} appears in two classes")
            owner[d] = i
    N = max(owner) + 1
    for d in range(1, N):
        if d not in owner:
            raise ValueError(f"difference {d} is not covered")
    return PairColoring.from_function(N, len(classes), lambda u, v: owner[v - u])


def product_coloring(chi1: PairColoring, chi2: PairColoring) -> PairColoring:
    """Blocked product on N1*N2 vertices with k1+k2 colors.

    Vertex (a, b) maps to index (a-1)*N2 + b, so the block index is the
    major coordinate.  Pairs across blocks take chi1 on the block indices;
    pairs inside a block take chi2 shifted past chi1's palette.
    """
    N2 = chi2.N

    def paint(x, y):
        a, b = divmod(x - 1, N2)
        a2, b2 = divmod(y - 1, N2)
        if a != a2:
            return chi1.color(a + 1, a2 + 1)
        return chi1.k + chi2.color(b + 1, b2 + 1)

    return PairColoring.from_function(chi1.N * N2, chi1.k + chi2.k, paint)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def paley_coloring(q: int) -> PairColoring:
    """Quadratic-residue 2-coloring of the pairs of [q] for a prime q = 4t+1.

    Vertex i stands for the residue i-1; color 1 marks pairs whose
    difference is a nonzero square.  The congruence makes -1 a square, so
    the color does not depend on orientation.
    """
    if not _is_prime(q) or q % 4 != 1:
        raise ValueError("q must be a prime congruent to 1 mod 4")
    squares = {(x * x) % q for x in range(1, q)}
    return PairColoring.from_function(
        q, 2, lambda u, v: 1 if (v - u) % q in squares else 2
    )


def has_mono_clique(chi: PairColoring, m: int) -> tuple[int, ...] | None:
    """Lexicographically least monochromatic m-clique, or None."""
    if m < 2:
        raise ValueError("clique size must be at least 2")
    for verts in combinations(range(1, chi.N + 1), m):
        c = chi.color(verts[0], verts[1])
        if all(
            chi.color(u, v) == c for u, v in combinations(verts, 2)
        ):
            return verts
    return None


@dataclass(frozen=True)
class KnownValue:
    """A recorded clique Ramsey value r(m; n) with its witness coloring."""

    value: int
    provenance: str
    witness: Callable[[], PairColoring] | None = None


def _two_vertex_one_color() -> PairColoring:
    return PairColoring(2, 1, (1,))


def _schur_14() -> PairColoring:
    return schur_coloring([{1, 4, 10, 13}, {2, 3, 11, 12}, {5, 6, 7, 8, 9}])


KNOWN_VALUES: dict[tuple[int, int], KnownValue] = {
    (3, 1): KnownValue(3, "re-verified here by exhaustion", _two_vertex_one_color),
    (3, 2): KnownValue(6, "re-verified here by exhaustion", pentagon_coloring),
    (3, 3): KnownValue(17, "classical; witness checked here", gf16_coloring),
    (4, 2): KnownValue(18, "classical; witness checked here", lambda: paley_coloring(17)),
}


def known_value(m: int, n: int) -> KnownValue:
    try:
        return KNOWN_VALUES[(m, n)]
    except KeyError:
        raise KeyError(f"no recorded value for r({m}; {n})") from None
