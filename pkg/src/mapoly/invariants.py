"""Subset-expansion invariants of maps.

Every polynomial here is a sum over edge subsets ``A``.  For each ``A`` two
minors matter: the restriction ``M \\ A^c`` (only the edges of ``A`` kept) and
the contraction ``M / A``.  :func:`expand_subsets` produces the component
parameters of both, and each invariant is a different weighting of them.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import InternalError, LimitExceededError, MapError
from .maps import Map, MapParameters, delete, dual
from .polynomials import (ONE, Polynomial, X, Y, make_monomial, poly_sum, xg, yg)

DEFAULT_CAP = 20

SPECIALIZATION_KINDS = ("krushkal", "bollobas_riordan", "las_vergnas", "tutte_graph")


@dataclass(frozen=True)
class SubsetTerm:
    """Component parameters of ``M \\ A^c`` and ``M / A`` for one subset ``A``."""

    subset: frozenset
    restriction: tuple[MapParameters, ...]
    contraction: tuple[MapParameters, ...]

    @property
    def res(self) -> MapParameters:
        return MapParameters.total(self.restriction)

    @property
    def con(self) -> MapParameters:
        return MapParameters.total(self.contraction)


def check_cap(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> None:
    if not force and m.num_edges > cap:
        raise LimitExceededError(
            f"map has {m.num_edges} edges; the subset expansion cap is {cap} "
            f"(2^{m.num_edges} subsets). Use force=True / --force to override.",
            limit="expansion cap", value=m.num_edges, bound=cap)


def edge_subsets(m: Map) -> Iterator[frozenset]:
    """All edge subsets, by size then lexicographically in edge id."""
    edges = m.edges
    for size in range(len(edges) + 1):
        for combo in combinations(edges, size):
            yield frozenset(combo)


def expand_subsets(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Iterator[SubsetTerm]:
    """Yield a :class:`SubsetTerm` for every edge subset of ``m``.

    The contraction ``M / A`` is the dual of ``M* \\ A``; its components are
    those of ``M* \\ A`` with vertices and faces exchanged.
    """
    check_cap(m, cap, force)
    mstar = dual(m)
    all_edges = frozenset(m.edges)
    for subset in edge_subsets(m):
        res = delete(m, all_edges - subset).component_parameters()
        con = [p.dual() for p in delete(mstar, subset).component_parameters()]
        yield SubsetTerm(subset, tuple(res), tuple(con))


def _accumulate(m, weight, cap, force) -> Polynomial:
    counts: Counter = Counter()
    for term in expand_subsets(m, cap, force):
        counts[weight(term)] += 1
    return Polynomial(dict(counts))


def _genus_powers(powers, prefix_fn, parts):
    for p in parts:
        name = prefix_fn(p.g)
        powers[name] = powers.get(name, 0) + 1


def surface_tutte(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """Surface Tutte polynomial in ``x, y, x0.., y0..``.

    Each subset ``A`` contributes ``x^{n*(M/A)} y^{n(M\\A^c)}`` times ``x_g``
    for every component of ``M/A`` of genus ``g`` and ``y_g`` for every
    component of ``M\\A^c`` of genus ``g``.
    """
    def weight(t: SubsetTerm):
        powers = {"x": t.con.n_star, "y": t.res.n}
        _genus_powers(powers, xg, t.contraction)
        _genus_powers(powers, yg, t.restriction)
        return make_monomial(powers)

    return _accumulate(m, weight, cap, force)


def surface_tutte_tilde(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """Renormalized surface Tutte polynomial (exponents ``r(M/A)`` and ``r*(M\\A^c)``)."""
    def weight(t: SubsetTerm):
        powers = {"x": t.con.r, "y": t.res.r_star}
        _genus_powers(powers, xg, t.contraction)
        _genus_powers(powers, yg, t.restriction)
        return make_monomial(powers)

    return _accumulate(m, weight, cap, force)


def quad_q(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """``Q(M; x, y, a, b)``: the surface Tutte polynomial with ``x_g = a^g``, ``y_g = b^g``."""
    def weight(t: SubsetTerm):
        return make_monomial({"x": t.con.n_star, "y": t.res.n, "a": t.con.g, "b": t.res.g})

    return _accumulate(m, weight, cap, force)


def quad_q_tilde(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    def weight(t: SubsetTerm):
        return make_monomial({"x": t.con.r, "y": t.res.r_star, "a": t.con.g, "b": t.res.g})

    return _accumulate(m, weight, cap, force)


# -- classical polynomials ----------------------------------------------------

def _weighted_sum(m, exponents, cap, force) -> Polynomial:
    """Sum over subsets of ``(x-1)^i y^j ...`` style terms.

    ``exponents(term)`` returns a tuple used as a key; equal keys are grouped
    and the factor polynomial is built once per distinct key.
    """
    counts: Counter = Counter()
    for term in expand_subsets(m, cap, force):
        counts[exponents(term)] += 1
    return counts


def _underlying_graph_ranks(m: Map):
    """Rank function of the underlying graph, via union-find on vertex indices."""
    ends = {e: m.endpoints(e) for e in m.edges}
    nv = m.num_vertices

    def rank(subset) -> int:
        parent = list(range(nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for e in subset:
            u, w = ends[e]
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
                r += 1
        return r

    return rank


def krushkal(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """``K(M; x, y, a, b) = sum (x-1)^{k(M\\A^c)-k(M)} y^{n(M\\A^c)} a^{g(M/A)} b^{g(M\\A^c)}``."""
    k = m.parameters().k
    counts = _weighted_sum(m, lambda t: (t.res.k - k, t.res.n, t.con.g, t.res.g), cap, force)
    xm1 = X - 1
    return poly_sum(c * xm1 ** i * Polynomial.from_powers({"y": j, "a": ga, "b": gb})
                    for (i, j, ga, gb), c in counts.items())


def bollobas_riordan(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """``R(M; x, y, z) = sum (x-1)^{k(M\\A^c)-k(M)} y^{n(M\\A^c)} z^{2g(M\\A^c)}``."""
    k = m.parameters().k
    counts = _weighted_sum(m, lambda t: (t.res.k - k, t.res.n, 2 * t.res.g), cap, force)
    xm1 = X - 1
    return poly_sum(c * xm1 ** i * Polynomial.from_powers({"y": j, "z": h})
                    for (i, j, h), c in counts.items())


def las_vergnas(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """``L(M; x, y, z)`` with ``(y-1)`` exponent ``n(M\\A^c) - g(M) - g(M\\A^c) + g(M/A)``
    and ``z`` exponent ``g(M) - g(M\\A^c) + g(M/A)``."""
    pm = m.parameters()

    def exps(t):
        j = t.res.n - pm.g - t.res.g + t.con.g
        h = pm.g - t.res.g + t.con.g
        if j < 0 or h < 0:
            raise InternalError(f"negative exponent in Las Vergnas expansion for A={sorted(t.subset)}")
        return (t.res.k - pm.k, j, h)

    counts = _weighted_sum(m, exps, cap, force)
    xm1, ym1 = X - 1, Y - 1
    return poly_sum(c * xm1 ** i * ym1 ** j * Polynomial.from_powers({"z": h})
                    for (i, j, h), c in counts.items())


def tutte_graph(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> Polynomial:
    """Tutte polynomial ``T(x, y)`` of the underlying graph from its rank-nullity expansion."""
    check_cap(m, cap, force)
    rank = _underlying_graph_ranks(m)
    r_full = rank(m.edges)
    counts: Counter = Counter()
    for subset in edge_subsets(m):
        r_a = rank(subset)
        counts[(r_full - r_a, len(subset) - r_a)] += 1
    xm1, ym1 = X - 1, Y - 1
    return poly_sum(c * xm1 ** i * ym1 ** j for (i, j), c in counts.items())


def classical_specialization(m: Map, kind: str, cap: int = DEFAULT_CAP,
                             force: bool = False) -> Polynomial:
    kind = kind.replace("-", "_")
    funcs = {"krushkal": krushkal, "bollobas_riordan": bollobas_riordan,
             "las_vergnas": las_vergnas, "tutte_graph": tutte_graph, "tutte": tutte_graph}
    if kind not in funcs:
        raise ValueError(f"unknown specialization {kind!r}; expected one of {SPECIALIZATION_KINDS}")
    return funcs[kind](m, cap, force)


# -- specialization identities --------------------------------------------------

def _genus_bindings(gmax: int, xfun, yfun) -> dict:
    out = {}
    for g in range(gmax + 1):
        out[xg(g)] = xfun(g)
        out[yg(g)] = yfun(g)
    return out


def krushkal_bindings(gmax: int) -> dict:
    """``x=1, x_g=a^g, y=y, y_g=(x-1) b^g``; result equals ``(x-1)^k K``."""
    b = {"x": 1, "y": Y}
    b.update(_genus_bindings(gmax, lambda g: Polynomial.var("a", g) if g else ONE,
                             lambda g: (X - 1) * (Polynomial.var("b", g) if g else ONE)))
    return b


def bollobas_riordan_bindings(gmax: int) -> dict:
    """``x=1=x_g, y=y, y_g=(x-1) z^{2g}``; result equals ``(x-1)^k R``."""
    b = {"x": 1, "y": Y}
    b.update(_genus_bindings(gmax, lambda g: 1,
                             lambda g: (X - 1) * (Polynomial.var("z", 2 * g) if g else ONE)))
    return b


def tutte_graph_bindings(gmax: int) -> dict:
    """``x=1=x_g, y=y-1, y_g=x-1``; result equals ``(x-1)^k T``."""
    b = {"x": 1, "y": Y - 1}
    b.update(_genus_bindings(gmax, lambda g: 1, lambda g: X - 1))
    return b


def las_vergnas_point_bindings(gmax: int, X0, Y0, Z0) -> dict:
    """Numeric bindings at ``(X0, Y0, Z0)``; involve ``(Y0-1)^{-g} Z0^{-g}``."""
    X0, Y0, Z0 = Fraction(X0), Fraction(Y0), Fraction(Z0)
    b = {"x": 1, "y": Y0 - 1}
    b.update(_genus_bindings(gmax, lambda g: (Y0 - 1) ** g * Z0 ** g,
                             lambda g: (X0 - 1) * (Y0 - 1) ** (-g) * Z0 ** (-g)))
    return b


def _eval_point(p: Polynomial, point: dict) -> Fraction:
    return p.evaluate({v: point.get(v, 0) for v in p.variables()})


@dataclass
class IdentityReport:
    name: str
    ok: bool
    detail: str = ""


def specialization_reports(m: Map, sample_points: Sequence[dict],
                           cap: int = DEFAULT_CAP, force: bool = False,
                           tutte_oracle=None) -> list[IdentityReport]:
    """Check every specialization identity of the surface Tutte polynomial.

    Each sample point maps ``x``, ``y``, ``a``, ``b``, ``z`` to rationals.
    The Krushkal, Bollobas-Riordan and graph Tutte identities are checked both
    symbolically and at every point; Las Vergnas only at points (its
    substitution is not polynomial).  For plane maps the plane reduction
    ``T_surf = (x0 y0)^k T(y0 x + 1, x0 y + 1)`` is checked too, with
    ``tutte_oracle(m)`` supplying ``T`` when given.
    """
    pm = m.parameters()
    k, gm = pm.k, pm.g
    T = surface_tutte(m, cap, force)
    reports = []
    xm1k = (X - 1) ** k

    checks = [
        ("krushkal", krushkal(m, cap, force), krushkal_bindings(gm)),
        ("bollobas_riordan", bollobas_riordan(m, cap, force), bollobas_riordan_bindings(gm)),
        ("tutte_graph", tutte_graph(m, cap, force), tutte_graph_bindings(gm)),
    ]
    for name, target, bindings in checks:
        lhs = T.substitute(bindings)
        rhs = xm1k * target
        ok = lhs == rhs
        detail = "" if ok else f"symbolic mismatch: {lhs - rhs}"
        for pt in sample_points:
            lv = _eval_point(lhs, pt)
            rv = Fraction(pt["x"] - 1) ** k * _eval_point(target, pt)
            if lv != rv:
                ok = False
                detail += f" point {pt}: {lv} != {rv}"
        reports.append(IdentityReport(name, ok, detail.strip()))

    L = las_vergnas(m, cap, force)
    ok, detail = True, ""
    for pt in sample_points:
        X0, Y0, Z0 = Fraction(pt["x"]), Fraction(pt["y"]), Fraction(pt["z"])
        if Y0 == 1 or Z0 == 0:
            continue
        lv = T.evaluate({v: b for v, b in las_vergnas_point_bindings(gm, X0, Y0, Z0).items()
                         if v in T.variables()})
        rv = (X0 - 1) ** k * (Y0 - 1) ** gm * Z0 ** (-gm) * _eval_point(L, pt)
        if lv != rv:
            ok = False
            detail += f" point {pt}: {lv} != {rv}"
    reports.append(IdentityReport("las_vergnas", ok, detail.strip()))

    if gm == 0:
        Tg = tutte_oracle(m) if tutte_oracle is not None else tutte_graph(m, cap, force)
        x0y0 = Polynomial.from_powers({"x0": 1, "y0": 1})
        rhs = x0y0 ** k * Tg.substitute({
            "x": Polynomial.from_powers({"y0": 1, "x": 1}) + 1,
            "y": Polynomial.from_powers({"x0": 1, "y": 1}) + 1,
        } if Tg.variables() else {})
        ok = T == rhs
        reports.append(IdentityReport("plane_reduction", ok, "" if ok else f"{T} != {rhs}"))
    return reports


def random_sample_points(rng: random.Random, count: int) -> list[dict]:
    """Rational points with ``y != 1`` and ``z != 0``."""
    pts = []
    for _ in range(count):
        pt = {}
        for v in "xyabz":
            while True:
                val = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                if (v == "y" and val == 1) or (v == "z" and val == 0):
                    continue
                break
            pt[v] = val
        pts.append(pt)
    return pts


def verify_specialization_identities(m: Map, sample_points: Sequence[dict],
                                     cap: int = DEFAULT_CAP, force: bool = False,
                                     tutte_oracle=None) -> bool:
    return all(r.ok for r in specialization_reports(m, sample_points, cap, force, tutte_oracle))


# -- quasi-trees and substructure counts ----------------------------------------

def count_quasi_trees_by_genus(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> tuple[int, ...]:
    """Direct enumeration: entry ``h`` counts subsets ``A`` with ``M \\ A^c`` a quasi-tree of genus ``h``."""
    g = m.parameters().g
    counts = [0] * (g + 1)
    for t in expand_subsets(m, cap, force):
        r = t.res
        if r.k == 1 and r.f == 1:
            counts[r.g] += 1
    return tuple(counts)


def quasi_tree_genus_profile(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> tuple[int, ...]:
    """Number of spanning quasi-trees of each genus ``h = 0..g(M)``.

    Read off the renormalized polynomial at ``x = y = 0``, ``x_{g-h} = 1``,
    ``y_h = 1`` (all other indexed variables 0) and confirmed by direct
    enumeration.
    """
    pm = m.parameters()
    if pm.k != 1:
        raise MapError("quasi-tree genus profile requires a connected map")
    g = pm.g
    tilde = surface_tutte_tilde(m, cap, force)
    profile = []
    for h in range(g + 1):
        point = {v: 0 for v in tilde.variables()}
        if xg(g - h) in point:
            point[xg(g - h)] = 1
        if yg(h) in point:
            point[yg(h)] = 1
        value = tilde.evaluate(point)
        if value.denominator != 1:
            raise InternalError(f"non-integral quasi-tree count {value}")
        profile.append(int(value))
    direct = count_quasi_trees_by_genus(m, cap, force)
    if tuple(profile) != direct:
        raise InternalError(f"quasi-tree profile mismatch: evaluation {profile}, enumeration {list(direct)}")
    return tuple(profile)


@dataclass(frozen=True)
class SubstructureCounts:
    plane_quasi_forest_like: int
    plane_bouquet_like: int
    quasi_forest_subsets: int
    bouquet_minor_subsets: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def count_substructures_direct(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> SubstructureCounts:
    """Enumerate subsets whose minors consist of (plane) quasi-trees or bouquets."""
    pqf = pb = qf = bq = 0
    for t in expand_subsets(m, cap, force):
        if all(p.f == 1 and p.g == 0 for p in t.restriction):
            pqf += 1
        if all(p.v == 1 and p.g == 0 for p in t.contraction):
            pb += 1
        if all(p.f == 1 for p in t.restriction):
            qf += 1
        if all(p.v == 1 for p in t.contraction):
            bq += 1
    return SubstructureCounts(pqf, pb, qf, bq)


def _at(p: Polynomial, **vals) -> int:
    value = p.evaluate({v: vals[v] for v in p.variables()})
    if value.denominator != 1:
        raise InternalError(f"non-integral count {value}")
    return int(value)


def substructure_counts(m: Map, cap: int = DEFAULT_CAP, force: bool = False) -> SubstructureCounts:
    """``Q(1,0,1,1)``, ``Q(0,1,1,1)``, ``Q~(1,0,1,1)``, ``Q~(0,1,1,1)``, checked by enumeration."""
    q = quad_q(m, cap, force)
    qt = quad_q_tilde(m, cap, force)
    counts = SubstructureCounts(
        plane_quasi_forest_like=_at(q, x=1, y=0, a=1, b=1),
        plane_bouquet_like=_at(q, x=0, y=1, a=1, b=1),
        quasi_forest_subsets=_at(qt, x=1, y=0, a=1, b=1),
        bouquet_minor_subsets=_at(qt, x=0, y=1, a=1, b=1),
    )
    direct = count_substructures_direct(m, cap, force)
    if counts != direct:
        raise InternalError(f"substructure count mismatch: evaluation {counts}, enumeration {direct}")
    return counts


POLYNOMIAL_KINDS = {
    "surface-tutte": surface_tutte,
    "surface-tutte-tilde": surface_tutte_tilde,
    "q": quad_q,
    "q-tilde": quad_q_tilde,
    "krushkal": krushkal,
    "bollobas-riordan": bollobas_riordan,
    "las-vergnas": las_vergnas,
    "tutte": tutte_graph,
}
