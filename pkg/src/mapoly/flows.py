"""Counting local G-flows and local G-tensions of a map.

Three independent routes are provided:

* exhaustive backtracking over edge assignments (:func:`local_count_bruteforce`),
* closed formulas in the group order and irreducible dimensions
  (:func:`local_count_formula`, :func:`nowhere_identity_count_formula`),
* evaluation of the surface Tutte polynomial (:func:`count_via_surface_tutte`).

Convention: around a vertex (flows) or along a face walk (tensions) the
half-edges are read in cyclic order; a tail half-edge contributes the edge
value and a head half-edge its inverse.  The product must be the identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import InternalError, LimitExceededError
from .groups import FiniteGroup
from .invariants import DEFAULT_CAP, check_cap, edge_subsets, expand_subsets, surface_tutte
from .maps import HalfEdge, Map, contract, delete
from .polynomials import xg, yg

FLOW = "flow"
TENSION = "tension"
MODES = (FLOW, TENSION)
DEFAULT_BUDGET = 10 ** 8


def _check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be 'flow' or 'tension', got {mode!r}")
    return mode


def constraint_walks(m: Map, mode: str) -> list[tuple[HalfEdge, ...]]:
    """Cyclic half-edge sequences whose products must vanish: vertex rotations or face walks."""
    _check_mode(mode)
    walks = m.rotations if mode == FLOW else m.faces()
    return [w for w in walks if w]


def walk_product(g: FiniteGroup, walk: Sequence[HalfEdge], values, start: int = 0) -> int:
    """Product along ``walk`` (read cyclically from ``start``) under the assignment ``values``."""
    acc = 0
    t, inv = g.table, g.inverse
    n = len(walk)
    for i in range(n):
        h = walk[(start + i) % n]
        val = values[h.edge]
        acc = t[acc][val if h.end == "+" else inv[val]]
    return acc


def is_valid_assignment(m: Map, g: FiniteGroup, mode: str, values) -> bool:
    return all(walk_product(g, w, values) == 0 for w in constraint_walks(m, mode))


def local_count_bruteforce(m: Map, g: FiniteGroup, mode: str, nowhere_identity: bool = True,
                           budget: int = DEFAULT_BUDGET) -> int:
    """Count assignments by backtracking over edges.

    A walk is checked as soon as its last edge is assigned; if that last edge
    occurs only once in the walk its value is solved for instead of searched.
    ``budget`` bounds the number of search nodes visited.
    """
    walks = constraint_walks(m, mode)
    edges = []
    seen = set()
    for w in walks:
        for h in w:
            if h.edge not in seen:
                seen.add(h.edge)
                edges.append(h.edge)
    pos = {e: i for i, e in enumerate(edges)}
    # walks completed at each depth; a walk is "solvable" at its last edge if
    # that edge occurs exactly once in it
    check_at: list[list] = [[] for _ in edges]
    for w in walks:
        last = max(pos[h.edge] for h in w)
        occurrences = [i for i, h in enumerate(w) if pos[h.edge] == last]
        check_at[last].append((w, occurrences[0] if len(occurrences) == 1 else None))
    solve_for = [None] * len(edges)
    for depth, items in enumerate(check_at):
        for j, (w, occ) in enumerate(items):
            if occ is not None:
                solve_for[depth] = (w, occ)
                items.pop(j)
                break

    t, inv = g.table, g.inverse
    candidates = list(range(1 if nowhere_identity else 0, g.order))
    values: dict[int, int] = {}
    nodes = 0

    def solve(w, occ) -> int:
        # product of the walk read from just after the unknown half-edge
        n = len(w)
        acc = 0
        for i in range(1, n):
            h = w[(occ + i) % n]
            val = values[h.edge]
            acc = t[acc][val if h.end == "+" else inv[val]]
        # unknown^{sign} * acc == 1  =>  unknown^{sign} = acc^{-1}
        u = inv[acc]
        return u if w[occ].end == "+" else inv[u]

    def rec(depth: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise LimitExceededError(
                f"brute-force search exceeded its budget of {budget} nodes",
                limit="budget", value=nodes, bound=budget)
        if depth == len(edges):
            return 1
        e = edges[depth]
        total = 0
        if solve_for[depth] is not None:
            w, occ = solve_for[depth]
            val = solve(w, occ)
            opts = (val,) if (val or not nowhere_identity) else ()
        else:
            opts = candidates
        for val in opts:
            values[e] = val
            if all(walk_product(g, w, values) == 0 for w, _ in check_at[depth]):
                total += rec(depth + 1)
        values.pop(e, None)
        return total

    count = rec(0)
    free = len(m.edges) - len(edges)
    return count * len(candidates) ** free


@lru_cache(maxsize=None)
def _dim_power_sum(dims: tuple[int, ...], chi: int) -> Fraction:
    return sum((Fraction(d) ** chi for d in dims), Fraction(0))


def local_count_formula(m: Map, g: FiniteGroup, mode: str) -> int:
    """Local flows (identity allowed): product over components of ``|G|^{e-v} sum n^chi``.

    Tensions use ``|G|^{e-f}`` (flows of the dual).
    """
    _check_mode(mode)
    total = Fraction(1)
    for p in m.component_parameters():
        other = p.v if mode == FLOW else p.f
        total *= Fraction(g.order) ** (p.e - other) * _dim_power_sum(g.irrep_dims, p.chi)
    return _as_count(total, "local count formula")


def local_flow_count_formula(m: Map, g: FiniteGroup) -> int:
    return local_count_formula(m, g, FLOW)


def _component_factor(g: FiniteGroup, parts) -> Fraction:
    out = Fraction(1)
    for p in parts:
        out *= _dim_power_sum(g.irrep_dims, p.chi) / g.order
    return out


def nowhere_identity_count_formula(m: Map, g: FiniteGroup, mode: str,
                                   cap: int = DEFAULT_CAP, force: bool = False) -> int:
    """Inclusion-exclusion over edge subsets.

    Flows: ``sum_A (-1)^{|A^c|} |G|^{n(M\\A^c)} prod_j (1/|G|) sum_l n_l^{chi(M_j)}``
    over components ``M_j`` of ``M \\ A^c``.  Tensions: ``sum_A (-1)^{|A|}
    |G|^{n*(M/A)} prod_i (1/|G|) sum_l n_l^{chi(M_i)}`` over components of ``M/A``.
    """
    _check_mode(mode)
    e = m.num_edges
    total = Fraction(0)
    order = Fraction(g.order)
    for t in expand_subsets(m, cap, force):
        a = len(t.subset)
        if mode == FLOW:
            sign = -1 if (e - a) % 2 else 1
            total += sign * order ** t.res.n * _component_factor(g, t.restriction)
        else:
            sign = -1 if a % 2 else 1
            total += sign * order ** t.con.n_star * _component_factor(g, t.contraction)
    return _as_count(total, "inclusion-exclusion formula")


def surface_tutte_bindings(m: Map, g: FiniteGroup, mode: str) -> dict:
    """Evaluation point of the surface Tutte polynomial counting nowhere-identity objects."""
    _check_mode(mode)
    gmax = m.parameters().g
    order = Fraction(g.order)
    special = {h: -_dim_power_sum(g.irrep_dims, 2 - 2 * h) / order for h in range(gmax + 1)}
    if mode == FLOW:
        b = {"x": 1, "y": -order}
        for h in range(gmax + 1):
            b[xg(h)] = 1
            b[yg(h)] = special[h]
    else:
        b = {"x": -order, "y": 1}
        for h in range(gmax + 1):
            b[xg(h)] = special[h]
            b[yg(h)] = 1
    return b


def _nowhere_identity_via_tutte(m: Map, g: FiniteGroup, mode: str, cap: int, force: bool) -> int:
    poly = surface_tutte(m, cap, force)
    pm = m.parameters()
    bindings = surface_tutte_bindings(m, g, mode)
    value = poly.evaluate({v: bindings[v] for v in poly.variables()})
    exponent = pm.e - (pm.v if mode == FLOW else pm.f)
    if exponent % 2:
        value = -value
    return _as_count(value, "surface Tutte evaluation")


def count_via_surface_tutte(m: Map, g: FiniteGroup, mode: str, nowhere_identity: bool = True,
                            cap: int = DEFAULT_CAP, force: bool = False) -> int:
    """Count via the surface Tutte polynomial.

    With ``nowhere_identity=False`` objects are grouped by the set ``B`` of
    identity-valued edges: flows of ``M`` with identity exactly on ``B`` are
    nowhere-identity flows of ``M \\ B`` and tensions are nowhere-identity
    tensions of ``M / B``.
    """
    _check_mode(mode)
    if nowhere_identity:
        return _nowhere_identity_via_tutte(m, g, mode, cap, force)
    check_cap(m, cap, force)
    total = 0
    for b in edge_subsets(m):
        minor = delete(m, b) if mode == FLOW else contract(m, b)
        total += _nowhere_identity_via_tutte(minor, g, mode, cap, force)
    return total


def count(m: Map, g: FiniteGroup, mode: str, nowhere_identity: bool = True,
          method: str = "formula", cap: int = DEFAULT_CAP, force: bool = False,
          budget: int = DEFAULT_BUDGET) -> int:
    """Dispatch to one counting route: ``formula``, ``bruteforce`` or ``tutte``."""
    if method == "bruteforce":
        return local_count_bruteforce(m, g, mode, nowhere_identity, budget)
    if method == "tutte":
        return count_via_surface_tutte(m, g, mode, nowhere_identity, cap, force)
    if method == "formula":
        if nowhere_identity:
            return nowhere_identity_count_formula(m, g, mode, cap, force)
        return local_count_formula(m, g, mode)
    raise ValueError(f"unknown method {method!r}")


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InternalError(f"{what} produced {value}, not a nonnegative integer")
    return int(value)


# -- surface groups -------------------------------------------------------------

def surface_group_hom_count(genus: int, g: FiniteGroup, method: str = "formula",
                            budget: int = DEFAULT_BUDGET) -> int:
    """Number of solutions in ``g`` of ``[a1,b1]...[a_genus,b_genus] = 1``.

    ``formula`` uses ``|G| sum_l (|G|/n_l)^{2 genus - 2}``; ``bruteforce``
    enumerates all ``2 genus``-tuples.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if method == "formula":
        order = Fraction(g.order)
        value = order * sum((order / d) ** (2 * genus - 2) for d in g.irrep_dims)
        return _as_count(value, "Frobenius-Mednyh formula")
    if method != "bruteforce":
        raise ValueError(f"unknown method {method!r}")
    if genus == 0:
        return 1
    size = g.order ** (2 * genus)
    if size > budget:
        raise LimitExceededError(
            f"{g.order}^{2 * genus} = {size} tuples exceeds the budget of {budget}",
            limit="budget", value=size, bound=budget)
    t = g.table
    comm = [[g.commutator(a, b) for b in range(g.order)] for a in range(g.order)]
    pairs = [comm[a][b] for a in range(g.order) for b in range(g.order)]
    solutions = 0
    for combo in product(pairs, repeat=genus):
        acc = 0
        for c in combo:
            acc = t[acc][c]
        if acc == 0:
            solutions += 1
    return solutions
