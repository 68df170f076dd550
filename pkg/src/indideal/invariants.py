"""Algebraic invariants of the monomial ideal of independent sets.

Everything here is read off the graph or its independence polynomial:
minimal primes come from vertices and edges, Betti numbers from the
coefficients, and the Alexander dual from the minimal primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .graph import Graph
from .ideal import Monomial, MonomialIdeal, find_linear_quotient_order
from .indep import IndependencePolynomial, independence_polynomial

DEFAULT_DUAL_BUDGET = 1 << 14


@dataclass(frozen=True)
class PrimeComponent:
    """A minimal prime: ``(s_i, t_i)`` for a vertex or ``(t_i, t_j)`` for an edge."""

    kind: str  # "vertex" or "edge"
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "vertex" and len(self.vertices) != 1:
            raise ValueError("vertex prime needs one vertex")
        if self.kind == "edge" and (len(self.vertices) != 2 or self.vertices[0] >= self.vertices[1]):
            raise ValueError("edge prime needs two increasing vertices")
        if self.kind not in ("vertex", "edge"):
            raise ValueError(f"unknown prime kind {self.kind!r}")

    @property
    def variables(self) -> list[str]:
        if self.kind == "vertex":
            (i,) = self.vertices
            return [f"s{i}", f"t{i}"]
        i, j = self.vertices
        return [f"t{i}", f"t{j}"]

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(Monomial.parse(v) for v in self.variables)

    def dual_generator(self) -> Monomial:
        """Product of the prime's variables."""
        return Monomial.parse("*".join(self.variables))

    def __str__(self):
        return "(" + ",".join(self.variables) + ")"


def primary_decomposition(g: Graph) -> list[PrimeComponent]:
    primes = [PrimeComponent("vertex", (i,)) for i in range(1, g.n + 1)]
    primes += [PrimeComponent("edge", e) for e in g.edges()]
    return primes


def betti_numbers(poly: IndependencePolynomial | Sequence[int]) -> list[int]:
    """``beta_i(I) = sum_k s_k C(k, i)`` for ``0 <= i <= alpha``."""
    s = list(poly)
    return [sum(c * comb(k, i) for k, c in enumerate(s)) for i in range(len(s))]


def betti_from_set_sizes(sizes: Sequence[int]) -> list[int]:
    """``beta_i = sum_u C(|set(u)|, i)`` over generators with linear quotients."""
    top = max(sizes, default=0)
    return [sum(comb(k, i) for k in sizes) for i in range(top + 1)]


def projective_dimension(poly: IndependencePolynomial) -> int:
    """Projective dimension of ``T/I``: ``alpha + 1``."""
    return poly.degree + 1


def regularity(g: Graph) -> int:
    return g.n


def krull_dimension(g: Graph) -> int:
    """``dim T/I`` = number of variables minus the smallest minimal-prime height."""
    height = min(len(p.variables) for p in primary_decomposition(g))
    dim = 2 * g.n - height
    assert dim == 2 * g.n - 2, (dim, g.n)
    return dim


def is_cohen_macaulay(g: Graph, poly: IndependencePolynomial | None = None) -> bool:
    """True iff ``g`` is complete.

    Cross-checked with Auslander-Buchsbaum: depth ``2n - projdim(T/I)``
    equals the Krull dimension exactly when the independence number is 1.
    K_1 counts as complete (alpha = 1, dimension 0).
    """
    complete = g.is_complete()
    if poly is None:
        poly = independence_polynomial(g)
    depth = 2 * g.n - projective_dimension(poly)
    assert (depth == krull_dimension(g)) == complete, "CM criterion disagrees with depth"
    return complete


def alexander_dual(g: Graph) -> MonomialIdeal:
    """``(s_i t_i : i in V) + (t_i t_j : ij in E)``."""
    return MonomialIdeal(p.dual_generator() for p in primary_decomposition(g))


def dual_has_linear_resolution(g: Graph, node_budget: int = DEFAULT_DUAL_BUDGET) -> bool | None:
    """Decide whether the Alexander dual has linear quotients.

    The dual is generated in degree 2, where linear quotients and a linear
    resolution coincide.  Returns None ("undecided") if the order search
    exhausts ``node_budget`` before settling the question; False is only
    returned after the search has ruled out every order.
    """
    return find_linear_quotient_order(alexander_dual(g), node_budget).found


@dataclass
class InvariantReport:
    betti: list[int]
    projdim_quotient: int
    regularity: int
    krull_dim: int
    cohen_macaulay: bool
    primes: list[PrimeComponent] = field(repr=False)
    dual_gens: list[Monomial] = field(repr=False)
    dual_linear_resolution: bool | None

    def to_dict(self) -> dict:
        dual = self.dual_linear_resolution
        return {
            "betti": list(self.betti),
            "projdim_quotient": self.projdim_quotient,
            "regularity": self.regularity,
            "krull_dim": self.krull_dim,
            "cohen_macaulay": self.cohen_macaulay,
            "primes": [p.variables for p in self.primes],
            "dual_gens": [str(m) for m in self.dual_gens],
            "dual_linear_resolution": "undecided" if dual is None else dual,
        }


def invariant_report(g: Graph, dual_budget: int = DEFAULT_DUAL_BUDGET) -> InvariantReport:
    poly = independence_polynomial(g)
    return InvariantReport(
        betti=betti_numbers(poly),
        projdim_quotient=projective_dimension(poly),
        regularity=regularity(g),
        krull_dim=krull_dimension(g),
        cohen_macaulay=is_cohen_macaulay(g, poly),
        primes=primary_decomposition(g),
        dual_gens=list(alexander_dual(g).gens),
        dual_linear_resolution=dual_has_linear_resolution(g, dual_budget),
    )
