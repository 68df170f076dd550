"""Independent-set enumeration, counting, and closed-form family coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .graph import Graph, iter_bits

_MEMO_SIZE = 1 << 18


class FormulaConsistencyError(ArithmeticError):
    """A closed-form coefficient that must be an integer came out fractional."""


@dataclass(frozen=True)
class IndependencePolynomial:
    """Coefficients ``s_0..s_alpha``; ``coeffs[k]`` counts independent ``k``-sets."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("constant coefficient must be 1")
        if any(c <= 0 for c in self.coeffs):
            raise ValueError(f"coefficients must be positive: {list(self.coeffs)}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)


def _dfs_sets(adj: tuple[int, ...], n: int) -> Iterator[int]:
    """Preorder DFS adding vertices in ascending order.

    The candidate mask only ever holds vertices larger than the last one
    added and not adjacent to anything chosen, so the output is every
    independent set, each once, in lexicographic order of its sorted tuple.
    """
    stack = [(0, (1 << n) - 1)]
    while stack:
        chosen, cand = stack.pop()
        yield chosen
        children = []
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            children.append((chosen | low, cand & ~adj[v]))
        stack.extend(reversed(children))


def enumerate_independent_sets(g: Graph) -> Iterator[int]:
    """Yield the independent sets of ``g`` as vertex bitmasks.

    Sets come by ascending size; within a size, sets whose sorted vertex
    list is lexicographically smaller come first (``{1,3}`` before
    ``{2,3}``).  This is the descending generator order used by the ideal.
    """
    buckets: list[list[int]] = []
    for s in _dfs_sets(g.adj, g.n):
        k = s.bit_count()
        while len(buckets) <= k:
            buckets.append([])
        buckets[k].append(s)
    for bucket in buckets:
        yield from bucket


def _poly_add(a: tuple[int, ...], b: tuple[int, ...], shift: int = 0) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for k, c in enumerate(b):
        out[k + shift] += c
    return tuple(out)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _make_counter(adj: tuple[int, ...]):
    @lru_cache(maxsize=_MEMO_SIZE)
    def count(mask: int) -> tuple[int, ...]:
        if not mask:
            return (1,)
        # split off one connected component; components multiply
        seed = mask & -mask
        comp, frontier = seed, seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        if comp != mask:
            return _poly_mul(count(comp), count(mask & ~comp))
        best, best_deg = -1, -1
        for v in iter_bits(mask):
            deg = (adj[v] & mask).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
        if best_deg == 0:  # isolated vertex
            return (1, 1)
        without = count(mask & ~(1 << best))
        rest = mask & ~(1 << best) & ~adj[best]
        with_v = count(rest)
        return _poly_add(without, with_v, shift=1)

    return count


def independence_polynomial(g: Graph) -> IndependencePolynomial:
    """Count independent sets by size via I(G) = I(G - v) + x I(G - N[v]).

    Pivots on a maximum-degree vertex and splits connected components, with a
    bounded memo on the residual vertex mask.  No enumeration is performed.
    """
    if g.n == 0:
        return IndependencePolynomial((1,))
    return IndependencePolynomial(_make_counter(g.adj)(g.full_mask))


def independence_number(g: Graph) -> int:
    return independence_polynomial(g).degree


def path_coefficients(n: int) -> IndependencePolynomial:
    """``s_k = C(n + 1 - k, k)`` for the path on ``n`` vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return IndependencePolynomial(comb(n + 1 - k, k) for k in range((n + 1) // 2 + 1))


def centipede_coefficients(n: int) -> IndependencePolynomial:
    """``s_k = sum_j C(n - j, n - k) C(n + 1 - j, j)`` for ``k = 0..n``.

    The centipede has ``2n`` vertices but independence number ``n`` (each
    leg/spine pair is an edge), so ``n + 1`` coefficients.
    """
    if n < 1:
        raise ValueError("centipede needs n >= 1")
    return IndependencePolynomial(
        sum(comb(n - j, n - k) * comb(n + 1 - j, j) for j in range(k + 1))
        for k in range(n + 1)
    )


def cycle_power_coefficients(n: int, d: int) -> IndependencePolynomial:
    """``s_k = n / (n - dk) * C(n - dk, k)`` for the ``d``-th power of ``C_n``.

    Evaluated as ``n * C(n - dk, k)`` divided exactly by ``n - dk``; a
    nonzero remainder raises :class:`FormulaConsistencyError`.
    """
    if d < 1 or n < d + 1:
        raise ValueError("cycle power needs d >= 1 and n >= d + 1")
    coeffs = []
    for k in range(n // (d + 1) + 1):
        num = n * comb(n - d * k, k)
        q, r = divmod(num, n - d * k)
        if r:
            raise FormulaConsistencyError(
                f"cycle power coefficient n={n}, d={d}, k={k} is not integral: {num}/{n - d * k}"
            )
        coeffs.append(q)
    return IndependencePolynomial(coeffs)
