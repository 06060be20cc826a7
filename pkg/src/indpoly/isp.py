"""Definitional evaluators for the independent set polynomial.

Every function here computes straight from the definition: a sum of
x^|A| over independent sets A.  Two routes are implemented and tested
against each other:

* a branching recursion I(G) = I(G - v) + X * I(G - N[v]) with
  connected-component factorization and per-call memoization on the
  induced vertex subset (as a bitmask of the fixed host graph), and
* plain enumeration of subsets, bounded by ``max_vertices``.

The branching route has no hard vertex bound (cost is exponential only
in the 2-core, so pendant-heavy graphs stay cheap); the enumeration
route fails loudly with ``CapacityError`` beyond its bound.  Neither
route ever uses the clone/path shift identities, so those identities
can be tested against these evaluators without circularity.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations

from .errors import CapacityError, DomainError
from .graphs import Graph
from .quadfield import as_rational, format_rational

DEFAULT_ENUMERATION_BOUND = 20


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients,
    lowest degree first.  Trailing zero coefficients are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coefficients):
        coeffs = [as_rational(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise DomainError(f"negative degree {k}")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def evaluate(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
            return Polynomial(out)
        scalar = as_rational(other)
        return Polynomial([scalar * c for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json_dict(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"


def _ensure_recursion_depth(n: int):
    needed = 4 * n + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def _components_of(mask: int, masks) -> list:
    """Connected components of the induced subgraph, as bitmasks."""
    comps = []
    rest = mask
    while rest:
        comp = 0
        frontier = rest & -rest
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & mask & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _branch_vertex(comp: int, masks) -> int:
    """Maximum induced degree, ties broken by smallest vertex id."""
    best_v = -1
    best_deg = -1
    m = comp
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        deg = (masks[v] & comp).bit_count()
        if deg > best_deg:
            best_deg = deg
            best_v = v
    return best_v


def isp_eval(g: Graph, x) -> Fraction:
    """Evaluate the independent set polynomial of g at a rational point.

    Equals isp_coeffs(g) evaluated at x; computed directly by the scalar
    branching recursion (homogenized to pure integer arithmetic).
    """
    x = as_rational(x)
    p, q = x.numerator, x.denominator
    _ensure_recursion_depth(g.n)
    masks = g.neighbor_masks()
    memo = {}

    # J(mask) = q^|mask| * I(mask; p/q) keeps the recursion over integers.
    def component_value(comp):
        val = memo.get(comp)
        if val is not None:
            return val
        v = _branch_vertex(comp, masks)
        vbit = 1 << v
        without = comp ^ vbit
        closed = masks[v] & comp
        val = q * subgraph_value(without) + p * q ** closed.bit_count() * subgraph_value(without & ~closed)
        memo[comp] = val
        return val

    def subgraph_value(mask):
        if mask == 0:
            return 1
        result = 1
        for comp in _components_of(mask, masks):
            result *= component_value(comp)
        return result

    full = (1 << g.n) - 1
    return Fraction(subgraph_value(full), q ** g.n)


def isp_coeffs(g: Graph, *, max_degree: int | None = None) -> Polynomial:
    """All coefficients of I(G; X): coefficient k counts the independent
    sets of size k.  Computed by the branching recursion over integer
    coefficient vectors; ``max_degree`` truncates the result (sound for
    the surviving coefficients, used by count_is_of_size)."""
    _ensure_recursion_depth(g.n)
    masks = g.neighbor_masks()
    cap = g.n if max_degree is None else min(max_degree, g.n)
    memo = {}

    def poly_mul(a, b):
        out = [0] * min(len(a) + len(b) - 1, cap + 1)
        for i, c in enumerate(a):
            if c == 0:
                continue
            top = min(len(b), len(out) - i)
            for j in range(top):
                out[i + j] += c * b[j]
        return out

    def component_value(comp):
        val = memo.get(comp)
        if val is not None:
            return val
        v = _branch_vertex(comp, masks)
        vbit = 1 << v
        without = comp ^ vbit
        closed = masks[v] & comp
        left = subgraph_value(without)
        right = subgraph_value(without & ~closed)
        val = list(left)
        # add X * right
        if cap >= 1:
            need = min(len(right) + 1, cap + 1)
            while len(val) < need:
                val.append(0)
            for j in range(need - 1):
                val[j + 1] += right[j]
        memo[comp] = val
        return val

    def subgraph_value(mask):
        if mask == 0:
            return [1]
        result = [1]
        for comp in _components_of(mask, masks):
            result = poly_mul(result, component_value(comp))
        return result

    full = (1 << g.n) - 1
    return Polynomial([Fraction(c) for c in subgraph_value(full)])


def isp_coeffs_by_enumeration(
    g: Graph, *, max_vertices: int = DEFAULT_ENUMERATION_BOUND
) -> Polynomial:
    """Coefficient vector by enumeration of all vertex subsets."""
    if g.n > max_vertices:
        raise CapacityError(
            f"enumeration over {g.n} vertices exceeds the bound {max_vertices}"
        )
    masks = g.neighbor_masks()
    independent = bytearray(1 << g.n)
    independent[0] = 1
    counts = [0] * (g.n + 1)
    counts[0] = 1
    for sub in range(1, 1 << g.n):
        low = sub & -sub
        rest = sub ^ low
        if independent[rest] and not masks[low.bit_length() - 1] & rest:
            independent[sub] = 1
            counts[sub.bit_count()] += 1
    return Polynomial([Fraction(c) for c in counts])


def isp_multivariate(
    g: Graph, weights, *, max_vertices: int = DEFAULT_ENUMERATION_BOUND
) -> Fraction:
    """Sum over independent sets A of the product of per-vertex weights,
    by direct enumeration.  ``weights`` must cover every vertex."""
    if g.n > max_vertices:
        raise CapacityError(
            f"enumeration over {g.n} vertices exceeds the bound {max_vertices}"
        )
    w = {}
    for v in range(g.n):
        if v not in weights:
            raise DomainError(f"missing weight for vertex {v}")
        w[v] = as_rational(weights[v])
    masks = g.neighbor_masks()
    total = Fraction(0)
    independent = bytearray(1 << g.n)
    independent[0] = 1
    total += 1
    for sub in range(1, 1 << g.n):
        low = sub & -sub
        rest = sub ^ low
        if independent[rest] and not masks[low.bit_length() - 1] & rest:
            independent[sub] = 1
            prod = Fraction(1)
            m = sub
            while m:
                b = m & -m
                m ^= b
                prod *= w[b.bit_length() - 1]
            total += prod
    return total


def count_is_of_size(g: Graph, k: int) -> int:
    """Number of independent sets of size exactly k (branching route)."""
    if k < 0:
        raise DomainError(f"negative set size {k}")
    if k > g.n:
        return 0
    c = isp_coeffs(g, max_degree=k).coefficient(k)
    assert c.denominator == 1
    return c.numerator


def count_is_of_size_by_enumeration(
    g: Graph, k: int, *, max_vertices: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    """Number of independent sets of size exactly k by direct enumeration
    over k-subsets.  Must agree with count_is_of_size."""
    if k < 0:
        raise DomainError(f"negative set size {k}")
    if g.n > max_vertices:
        raise CapacityError(
            f"enumeration over {g.n} vertices exceeds the bound {max_vertices}"
        )
    if k > g.n:
        return 0
    masks = g.neighbor_masks()
    count = 0
    for subset in combinations(range(g.n), k):
        mask = 0
        ok = True
        for v in subset:
            if masks[v] & mask:
                ok = False
                break
            mask |= 1 << v
        if ok:
            count += 1
    return count
