"""Brute-force checks that share no code path with the formula modules.

Membership is decided by divisibility against generators, intersections by
pairwise lcm, and multigraded Betti numbers by reduced GF(2) homology of
upper Koszul simplicial complexes.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .graph import iter_bits
from .ideal import Monomial, MonomialIdeal

DEFAULT_VARIABLE_CAP = 12


class OracleSizeError(ValueError):
    """The instance is larger than the oracle's configured cap."""


def colon_membership_check(ideal: MonomialIdeal, m: Monomial, w: Monomial) -> bool:
    """True iff ``w * m`` lies in ``ideal``."""
    prod = w.bits | m.bits
    return any(g.bits & ~prod == 0 for g in ideal.gens)


def intersect_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(u.lcm(v) for u in a.gens for v in b.gens)


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    return reduce(intersect_ideals, ideals, MonomialIdeal.unit())


@dataclass(frozen=True)
class SimplicialComplexSmall:
    """Faces as bitmasks over ``labels`` (bit ``k`` is ``labels[k]``).

    An empty ``faces`` set is the void complex; ``{0}`` is the complex
    whose only face is the empty one.
    """

    labels: tuple[int, ...]
    faces: frozenset[int]

    def __post_init__(self):
        for f in self.faces:
            for v in iter_bits(f):
                if f & ~(1 << v) not in self.faces:
                    raise ValueError("face set is not closed under subsets")

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def dimension(self) -> int:
        return max((f.bit_count() - 1 for f in self.faces), default=-2)


def upper_koszul_complex(ideal: MonomialIdeal, a: int) -> SimplicialComplexSmall:
    """Faces ``W`` of ``supp(a)`` with ``x^a / x^W`` in ``ideal``.

    ``a`` is a squarefree multidegree in the interleaved variable encoding.
    """
    labels = tuple(iter_bits(a))
    k = len(labels)
    gens = [g.bits for g in ideal.gens]
    faces = set()
    for local in range(1 << k):
        w = 0
        for pos in iter_bits(local):
            w |= 1 << labels[pos]
        rest = a & ~w
        if any(g & ~rest == 0 for g in gens):
            faces.add(local)
    return SimplicialComplexSmall(labels, frozenset(faces))


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row vectors given as integers."""
    basis: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                break
            r ^= basis[lead]
    return len(basis)


def _boundary_rank(by_dim: dict[int, list[int]], d: int) -> int:
    """Rank of the boundary map from d-faces to (d-1)-faces (augmented at d = 0)."""
    if d < 0 or not by_dim.get(d) or not by_dim.get(d - 1):
        return 0
    index = {f: i for i, f in enumerate(by_dim[d - 1])}
    rows = []
    for f in by_dim[d]:
        row = 0
        for v in iter_bits(f):
            row |= 1 << index[f & ~(1 << v)]
        rows.append(row)
    return gf2_rank(rows)


def _faces_by_dim(c: SimplicialComplexSmall) -> dict[int, list[int]]:
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in sorted(c.faces):
        by_dim[f.bit_count() - 1].append(f)
    return by_dim


def reduced_homology_gf2(c: SimplicialComplexSmall, dim: int) -> int:
    """``dim H~_dim(c; GF(2))``."""
    if c.vertex_count > 16:
        raise OracleSizeError("homology oracle is limited to 16 vertices")
    by_dim = _faces_by_dim(c)
    n_faces = len(by_dim.get(dim, []))
    return n_faces - _boundary_rank(by_dim, dim) - _boundary_rank(by_dim, dim + 1)


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}``; missing keys are zero."""

    entries: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def totals(self) -> list[int]:
        """``beta_i = sum_j beta_{i,j}`` up to the last nonzero homological degree."""
        top = max((i for (i, _), v in self.entries.items() if v), default=-1)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def off_strand(self, shift: int) -> dict[tuple[int, int], int]:
        """Nonzero entries with ``j != shift + i``."""
        return {k: v for k, v in self.entries.items() if v and k[1] != shift + k[0]}


def _betti_at(gens: tuple[int, ...], a: int) -> list[tuple[int, int, int]]:
    ideal = MonomialIdeal(Monomial(b) for b in gens)
    c = upper_koszul_complex(ideal, a)
    if not c.faces:
        return []
    by_dim = _faces_by_dim(c)
    j = a.bit_count()
    out = []
    ranks = {d: _boundary_rank(by_dim, d) for d in range(0, j + 1)}
    for d in range(-1, j):
        h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out.append((d + 1, j, h))
    return out


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def betti_table_oracle(
    ideal: MonomialIdeal, variable_cap: int = DEFAULT_VARIABLE_CAP, n_jobs: int = 1
) -> BettiTable:
    """Multigraded Betti numbers summed into ``beta_{i,j}``.

    ``beta_{i,a} = dim H~_{i-1}(upper Koszul complex at a)`` over all
    squarefree ``a`` in the support of the ideal.  Multidegrees outside the
    ideal give the void complex and are skipped.
    """
    support = ideal.support()
    if support.bit_count() > variable_cap:
        raise OracleSizeError(
            f"ideal involves {support.bit_count()} variables, cap is {variable_cap}"
        )
    gens = tuple(g.bits for g in ideal.gens)
    degrees = sorted(a for a in _submasks(support) if any(g & ~a == 0 for g in gens))
    if n_jobs > 1 and len(degrees) > 64:
        with ProcessPoolExecutor(n_jobs) as pool:
            parts = list(pool.map(_betti_at, [gens] * len(degrees), degrees, chunksize=32))
    else:
        parts = [_betti_at(gens, a) for a in degrees]
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for part in parts:
        for i, j, h in part:
            entries[i, j] += h
    return BettiTable(dict(entries))
