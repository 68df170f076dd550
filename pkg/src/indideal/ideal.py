"""Squarefree monomials in T = K[s_i, t_i], the ideal of independent sets,
colon ideals and linear quotients.

A monomial is one integer with interleaved variable bits: bit ``2i`` is
``s_{i+1}`` and bit ``2i + 1`` is ``t_{i+1}``.  Divisibility, gcd and lcm of
squarefree monomials are then subset, AND and OR.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, iter_bits, mask_to_vertices
from .indep import enumerate_independent_sets



def _spread(mask: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << (2 * i)
    return out


def _gather(bits: int) -> int:
    out = 0
    for b in iter_bits(bits):
        if not b & 1:
            out |= 1 << (b >> 1)
    return out


@dataclass(frozen=True, order=False)
class Monomial:
    """Squarefree monomial; ``bits`` uses the interleaved s/t encoding."""

    bits: int = 0

    @classmethod
    def from_masks(cls, s_mask: int = 0, t_mask: int = 0) -> "Monomial":
        return cls(_spread(s_mask) | _spread(t_mask) << 1)

    @classmethod
    def var(cls, name: str, index: int) -> "Monomial":
        if name not in ("s", "t") or index < 1:
            raise ValueError(f"bad variable {name}{index}")
        return cls(1 << (2 * (index - 1) + (name == "t")))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Inverse of ``str``: ``"s1*s3*t2"`` or ``"1"``."""
        text = text.strip()
        if text == "1":
            return cls(0)
        bits = 0
        for tok in text.split("*"):
            m = re.fullmatch(r"([st])(\d+)", tok.strip())
            if not m:
                raise ValueError(f"bad monomial {text!r}")
            bits |= cls.var(m.group(1), int(m.group(2))).bits
        return cls(bits)

    @property
    def s_mask(self) -> int:
        return _gather(self.bits)

    @property
    def t_mask(self) -> int:
        return _gather(self.bits >> 1)

    @property
    def degree(self) -> int:
        return self.bits.bit_count()

    @property
    def deg_s(self) -> int:
        return self.s_mask.bit_count()

    @property
    def deg_t(self) -> int:
        return self.t_mask.bit_count()

    def is_unit(self) -> bool:
        return self.bits == 0

    def divides(self, other: "Monomial") -> bool:
        return self.bits & ~other.bits == 0

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(self.bits & other.bits)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.bits | other.bits)

    def __mul__(self, other: "Monomial") -> "Monomial":
        # squarefree product: supports are united
        return Monomial(self.bits | other.bits)

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``."""
        return Monomial(self.bits & ~other.bits)

    def variables(self) -> list[str]:
        return [f"s{v}" for v in mask_to_vertices(self.s_mask)] + [
            f"t{v}" for v in mask_to_vertices(self.t_mask)
        ]

    def sort_key(self):
        return (self.degree, [(name[0] == "t", int(name[1:])) for name in self.variables()])

    def __str__(self):
        return "*".join(self.variables()) or "1"

    def __repr__(self):
        return f"Monomial({self})"


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop duplicates and every monomial divisible by another; canonical order."""
    kept: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda m: m.degree):
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return sorted(kept, key=Monomial.sort_key)


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal given by its minimal generators in canonical order.

    The unit ideal is ``(1)``; an empty generator list is the zero ideal.
    """

    gens: tuple[Monomial, ...]

    def __init__(self, gens: Iterable[Monomial] = ()):
        object.__setattr__(self, "gens", tuple(minimalize(gens)))

    @classmethod
    def parse(cls, texts: Iterable[str]) -> "MonomialIdeal":
        return cls(Monomial.parse(t) for t in texts)

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls([Monomial(0)])

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def support(self) -> int:
        bits = 0
        for g in self.gens:
            bits |= g.bits
        return bits

    def is_generated_by_variables(self) -> bool:
        return all(g.degree == 1 for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"


def colon_by_monomial(ideal: MonomialIdeal | Sequence[Monomial], m: Monomial) -> MonomialIdeal:
    """Minimal generators of ``(I : m)``, generated by ``u / gcd(u, m)``."""
    gens = ideal.gens if isinstance(ideal, MonomialIdeal) else ideal
    return MonomialIdeal(u.quotient(m) for u in gens)


def phi(g: Graph, s: int) -> Monomial:
    """``prod_{i in S} s_i * prod_{i not in S} t_i`` for an independent vertex mask."""
    if s & ~g.full_mask or not g.is_independent(s):
        raise ValueError(f"{mask_to_vertices(s)} is not an independent set of the graph")
    return Monomial.from_masks(s, g.full_mask & ~s)


def succ_key(s: int) -> tuple:
    """Sort key putting ``s``-parts in descending generator order.

    Smaller ``deg_s`` first; for equal size, lex with ``s_1 > s_2 > ...``
    so the set whose sorted vertex list is lexicographically smaller wins.
    """
    return (s.bit_count(), tuple(iter_bits(s)))


@dataclass(frozen=True)
class GeneratorOrder:
    """Independent sets ``S_i`` and generators ``m_i``, descending in the order."""

    n: int
    sets: tuple[int, ...]
    monomials: tuple[Monomial, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.sets) != len(self.monomials):
            raise ValueError("sets and monomials differ in length")
        if self.sets and self.sets[0] != 0:
            raise ValueError("order must start with the empty set")
        for a, b in zip(self.sets, self.sets[1:]):
            # distinct independent sets never tie, so the order is strict
            if not succ_key(a) < succ_key(b):
                raise AssertionError(
                    f"generator order not strictly descending at {mask_to_vertices(a)}, {mask_to_vertices(b)}"
                )

    def __len__(self):
        return len(self.sets)


def ideal_of_independent_sets(g: Graph) -> tuple[MonomialIdeal, GeneratorOrder]:
    sets = tuple(enumerate_independent_sets(g))
    monos = tuple(phi(g, s) for s in sets)
    return MonomialIdeal(monos), GeneratorOrder(g.n, sets, monos)


@dataclass
class LinearQuotientReport:
    """Result of checking every prefix colon ``(m_1..m_{i-1}) : m_i``.

    ``set_sizes[i]`` is the number of variables generating the i-th colon
    (0 for the first generator).  ``violations`` holds ``(i, colon)`` with
    1-based ``i`` for every prefix that is not generated by exactly
    ``{t_r : r in S_i}``.
    """

    checked: int
    set_sizes: list[int]
    violations: list[tuple[int, MonomialIdeal]]

    @property
    def ok(self) -> bool:
        return not self.violations


def _prefix_colon_vars(bits: Sequence[int], i: int, arr=None):
    """Variable mask of the i-th prefix colon, or None if not variable-generated."""
    m = bits[i]
    if arr is not None:
        q = arr[:i] & np.uint64(~m & 0xFFFFFFFFFFFFFFFF)
        if not q.all():
            return None
        lin = q[(q & (q - np.uint64(1))) == 0]
        lvars = int(np.bitwise_or.reduce(lin)) if lin.size else 0
        if not (q & np.uint64(lvars)).all():
            return None
        return lvars
    qs = [u & ~m for u in bits[:i]]
    if not all(qs):
        return None
    lvars = 0
    for q in qs:
        if q & (q - 1) == 0:
            lvars |= q
    if any(not q & lvars for q in qs):
        return None
    return lvars


def verify_linear_quotients(order: GeneratorOrder) -> LinearQuotientReport:
    bits = [m.bits for m in order.monomials]
    arr = np.array(bits, dtype=np.uint64) if 2 * order.n <= 64 else None
    sizes = [0] if bits else []
    violations = []
    for i in range(1, len(bits)):
        lvars = _prefix_colon_vars(bits, i, arr)
        expected = _spread(order.sets[i]) << 1
        if lvars is None or lvars != expected:
            colon = colon_by_monomial(order.monomials[:i], order.monomials[i])
            violations.append((i + 1, colon))
            sizes.append(len(colon))
        else:
            sizes.append(lvars.bit_count())
    return LinearQuotientReport(max(len(bits) - 1, 0), sizes, violations)


def set_sizes(order: GeneratorOrder) -> list[int]:
    """``|set(m_i)|`` read off the prefix colons; raises if they are not linear."""
    report = verify_linear_quotients(order)
    if not report.ok:
        i, colon = report.violations[0]
        raise ValueError(f"prefix colon at generator {i} is {colon}, not linear")
    return report.set_sizes


def has_linear_quotients(gens: Sequence[Monomial]) -> bool:
    """True if every prefix colon of ``gens`` (in the given order) is generated by variables."""
    bits = [g.bits for g in gens]
    return all(_prefix_colon_vars(bits, i) is not None for i in range(1, len(bits)))


@dataclass
class OrderSearchResult:
    """Outcome of a linear-quotient order search.

    ``found`` is True/False when decided and None when the node budget ran
    out first.  ``order`` is a witness when ``found`` is True.
    """

    found: bool | None
    order: list[Monomial] | None
    nodes: int


def find_linear_quotient_order(ideal: MonomialIdeal, node_budget: int = 1 << 20) -> OrderSearchResult:
    """Search all generator orders for one with linear quotients.

    Whether ``u`` may follow a prefix depends only on the prefix as a set, so
    the search runs depth-first over subsets of generators and remembers
    subsets from which the full set is unreachable.  With enough budget this
    is exhaustive, so a False answer is a proof of non-existence.
    """
    gens = list(ideal.gens)
    k = len(gens)
    if k <= 1:
        return OrderSearchResult(True, gens, 0)
    bits = [g.bits for g in gens]
    full = (1 << k) - 1
    # quot[a][b] = gens[b] / gcd(gens[b], gens[a])
    quot = [[bits[b] & ~bits[a] for b in range(k)] for a in range(k)]

    def can_append(prefix: int, a: int) -> bool:
        qs = [quot[a][b] for b in iter_bits(prefix)]
        lvars = 0
        for q in qs:
            if q & (q - 1) == 0:
                if not q:
                    return False
                lvars |= q
        return all(q & lvars for q in qs)

    dead: set[int] = set()
    nodes = 0
    path: list[int] = []

    def dfs(prefix: int) -> bool | None:
        nonlocal nodes
        if prefix == full:
            return True
        if prefix in dead:
            return False
        nodes += 1
        if nodes > node_budget:
            return None
        for a in iter_bits(full & ~prefix):
            if can_append(prefix, a):
                path.append(a)
                res = dfs(prefix | 1 << a)
                if res is not False:
                    return res
                path.pop()
        dead.add(prefix)
        return False

    found = dfs(0)
    order = [gens[a] for a in path] if found else None
    return OrderSearchResult(found, order, nodes)
