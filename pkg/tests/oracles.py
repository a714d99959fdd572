"""Independent reference computations used only by the tests.

Nothing here calls the subset expansions under test: the graph Tutte
polynomial comes from deletion-contraction on an edge list, surface Tutte
terms are recomputed from explicitly built minors, and group counts are
plain enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from mapoly.maps import Map, contract, restrict
from mapoly.polynomials import Polynomial, make_monomial


def graph_edges(m: Map) -> tuple[int, tuple[tuple[int, int], ...]]:
    return m.num_vertices, tuple(m.endpoints(e) for e in m.edges)


def _is_bridge(nv, edges, i) -> bool:
    u, w = edges[i]
    if u == w:
        return False
    adj = {}
    for j, (a, b) in enumerate(edges):
        if j != i:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return w not in seen


@lru_cache(maxsize=None)
def _tutte_dc(nv: int, edges: tuple) -> Polynomial:
    if not edges:
        return Polynomial.const(1)
    X, Y = Polynomial.var("x"), Polynomial.var("y")
    u, w = edges[0]
    rest = edges[1:]
    if u == w:
        return Y * _tutte_dc(nv, rest)
    contracted = tuple((u if a == w else a, u if b == w else b) for a, b in rest)
    contracted = _canon(contracted)
    if _is_bridge(nv, edges, 0):
        return X * _tutte_dc(nv - 1, contracted)
    return _tutte_dc(nv, _canon(rest)) + _tutte_dc(nv - 1, contracted)


def _canon(edges):
    return tuple(sorted(tuple(sorted(e)) for e in edges))


def tutte_deletion_contraction(m: Map) -> Polynomial:
    """Tutte polynomial of the underlying graph by deletion-contraction."""
    nv, edges = graph_edges(m)
    return _tutte_dc(nv, _canon(edges))


def flow_polynomial_at(m: Map, q: int):
    """``phi(q) = (-1)^{n} T(0, 1 - q)``."""
    T = tutte_deletion_contraction(m)
    n = m.parameters().n
    return (-1) ** n * T.evaluate({v: {"x": 0, "y": 1 - q}[v] for v in T.variables()})


def chromatic_polynomial_at(m: Map, q: int):
    """``P(q) = (-1)^{r} q^k T(1 - q, 0)``."""
    T = tutte_deletion_contraction(m)
    p = m.parameters()
    return (-1) ** p.r * q ** p.k * T.evaluate({v: {"x": 1 - q, "y": 0}[v] for v in T.variables()})


def surface_tutte_from_minors(m: Map) -> Polynomial:
    """Surface Tutte polynomial built from explicit ``restrict`` and ``contract`` calls."""
    counts: dict = {}
    edges = m.edges
    for size in range(len(edges) + 1):
        for a in combinations(edges, size):
            res = restrict(m, a)
            con = contract(m, a)
            powers = {"x": con.parameters().n_star, "y": res.parameters().n}
            for p in con.component_parameters():
                powers[f"x{p.g}"] = powers.get(f"x{p.g}", 0) + 1
            for p in res.component_parameters():
                powers[f"y{p.g}"] = powers.get(f"y{p.g}", 0) + 1
            mono = make_monomial(powers)
            counts[mono] = counts.get(mono, 0) + 1
    return Polynomial(counts)


def hom_count_direct(g, genus: int) -> int:
    """Tuples ``(a1, b1, ..., ag, bg)`` with product of commutators equal to the identity."""
    count = 0
    for tup in product(range(g.order), repeat=2 * genus):
        acc = 0
        for i in range(genus):
            acc = g.mul(acc, g.commutator(tup[2 * i], tup[2 * i + 1]))
        count += acc == 0
    return count


def lagrange_at(xs, ys, x0):
    """Value at ``x0`` of the interpolating polynomial through ``(xs, ys)``, exactly."""
    from fractions import Fraction
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x0 - xj, xi - xj)
        total += term
    return total
