"""Finite groups as multiplication tables with their irreducible-representation dimensions.

Elements are the integers ``0..order-1`` and ``0`` is always the identity.
Only the multiset of irreducible-representation dimensions enters the
counting formulas, so it is stored data, checked against the table by
:func:`validate_group` (square sum, class count, divisibility).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Sequence

from .errors import GroupError

MAX_ASSOCIATIVITY_CHECK = 32


class FiniteGroup:
    """Group given by a multiplication table ``table[i][j] = i * j``."""

    __slots__ = ("name", "table", "inverse", "irrep_dims", "labels")

    def __init__(self, table: Sequence[Sequence[int]], irrep_dims: Sequence[int],
                 name: str = "G", labels: Sequence[str] | None = None, check: bool = True):
        self.name = name
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.irrep_dims = tuple(sorted(int(d) for d in irrep_dims))
        self.labels = tuple(labels) if labels is not None else None
        inv = []
        for i in range(len(self.table)):
            row = self.table[i]
            inv.append(row.index(0) if 0 in row else -1)
        self.inverse = tuple(inv)
        if check:
            report = validate_group(self)
            if not report:
                raise GroupError(f"invalid group {name}: " + "; ".join(report.problems))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def commutator(self, a: int, b: int) -> int:
        """``a b a^-1 b^-1``."""
        t = self.table
        return t[t[t[a][b]][self.inverse[a]]][self.inverse[b]]

    def conjugacy_classes(self) -> list[list[int]]:
        seen = set()
        classes = []
        t, inv = self.table, self.inverse
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({t[t[g][a]][inv[g]] for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def commutator_subgroup(self) -> frozenset[int]:
        """Subgroup generated by all commutators."""
        gens = {self.commutator(a, b) for a in range(self.order) for b in range(self.order)}
        sub = {0}
        frontier = list(sub)
        while frontier:
            new = []
            for s in frontier:
                for g in gens:
                    p = self.table[s][g]
                    if p not in sub:
                        sub.add(p)
                        new.append(p)
            frontier = new
        return frozenset(sub)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order}, dims={list(self.irrep_dims)})"


@dataclass
class GroupValidation:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate_group(g: FiniteGroup) -> GroupValidation:
    """Check the group axioms and the consistency of ``irrep_dims`` with the table.

    Associativity is checked exhaustively up to order 32.
    """
    problems = []
    n = len(g.table)
    if n == 0:
        return GroupValidation(False, ["empty table"])
    if any(len(row) != n for row in g.table):
        return GroupValidation(False, ["table is not square"])
    if any(not 0 <= x < n for row in g.table for x in row):
        return GroupValidation(False, ["table entry out of range"])
    t = g.table
    for a in range(n):
        if t[0][a] != a or t[a][0] != a:
            problems.append(f"0 is not a two-sided identity (fails at element {a})")
            break
    for a in range(n):
        b = g.inverse[a]
        if b < 0 or t[b][a] != 0:
            problems.append(f"element {a} has no two-sided inverse")
            break
    if not problems and n <= MAX_ASSOCIATIVITY_CHECK:
        bad = _non_associative_triple(t)
        if bad is not None:
            problems.append("not associative: ({0}*{1})*{2} != {0}*({1}*{2})".format(*bad))
    if problems:
        return GroupValidation(False, problems)

    dims = g.irrep_dims
    if not dims or any(d <= 0 for d in dims):
        problems.append("irreducible dimensions must be positive integers")
    else:
        sq = sum(d * d for d in dims)
        if sq != n:
            problems.append(f"sum of squared irreducible dimensions is {sq}, not the order {n}")
        k = len(g.conjugacy_classes())
        if len(dims) != k:
            problems.append(f"{len(dims)} irreducible dimensions but {k} conjugacy classes")
        for d in dims:
            if n % d:
                problems.append(f"dimension {d} does not divide the order {n}")
                break
    return GroupValidation(not problems, problems)


def _non_associative_triple(t):
    n = len(t)
    for a in range(n):
        ta = t[a]
        for b in range(n):
            tab = t[ta[b]]
            tb = t[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    return (a, b, c)
    return None


def conjugacy_class_count(g: FiniteGroup) -> int:
    return len(g.conjugacy_classes())


# -- constructors -----------------------------------------------------------------

def _from_elements(elements, mul, dims, name, labels=None) -> FiniteGroup:
    """Tabulate ``mul`` on ``elements`` (the identity must come first)."""
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, dims, name, labels)


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], [1] * n, f"Z{n}")


def dihedral_irrep_dims(n: int) -> list[int]:
    """Dimensions for the dihedral group of order ``2n``."""
    if n % 2:
        return [1, 1] + [2] * ((n - 1) // 2)
    return [1, 1, 1, 1] + [2] * (n // 2 - 1)


def make_dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order ``2n``: symmetries of an ``n``-gon.

    Element ``(i, j)`` stands for ``r^i s^j``.
    """
    if order < 2 or order % 2:
        raise GroupError(f"dihedral group order must be even and at least 2, got {order}")
    n = order // 2
    dims = dihedral_irrep_dims(n)
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mul(p, q):
        (i1, j1), (i2, j2) = p, q
        # r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1 + j2)
        return ((i1 + (i2 if j1 == 0 else -i2)) % n, (j1 + j2) % 2)

    labels = [("r^%d" % i if i else "1") if j == 0 else ("r^%ds" % i if i else "s")
              for i, j in elements]
    return _from_elements(elements, mul, dims, f"D{order}", labels)


_QUAT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def make_quaternion8() -> FiniteGroup:
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(p, q):
        sign, unit = _QUAT[(p[1], q[1])]
        return (p[0] * q[0] * sign, unit)

    labels = [("" if s == 1 else "-") + u for s, u in elements]
    return _from_elements(elements, mul, [1, 1, 1, 1, 2], "Q8", labels)


_SYMMETRIC_DIMS = {1: [1], 2: [1, 1], 3: [1, 1, 2], 4: [1, 1, 2, 3, 3]}


def make_symmetric(n: int) -> FiniteGroup:
    if n not in _SYMMETRIC_DIMS:
        raise GroupError(f"symmetric groups are supported for n <= 4, got {n}")
    elements = list(itertools.permutations(range(n)))  # identity first

    def mul(p, q):
        # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(n))

    return _from_elements(elements, mul, _SYMMETRIC_DIMS[n], f"S{n}")


def make_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product; element ``(a, b)`` has index ``a * |H| + b``."""
    m = h.order
    table = [[g.table[i // m][j // m] * m + h.table[i % m][j % m]
              for j in range(g.order * m)] for i in range(g.order * m)]
    dims = [a * b for a in g.irrep_dims for b in h.irrep_dims]
    return FiniteGroup(table, dims, f"{g.name}x{h.name}")


# -- text formats -------------------------------------------------------------------

def parse_group_table(text: str, name: str = "G") -> FiniteGroup:
    """Read ``order N``, ``N`` table rows, then ``dims d1 d2 ...``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not re.fullmatch(r"order\s+\d+", lines[0]):
        raise GroupError("group file must start with 'order N'")
    n = int(lines[0].split()[1])
    if len(lines) != n + 2:
        raise GroupError(f"expected {n} table rows followed by a 'dims' line")
    try:
        rows = [[int(x) for x in ln.split()] for ln in lines[1:n + 1]]
    except ValueError as exc:
        raise GroupError(f"bad table entry: {exc}") from None
    dims_line = lines[n + 1].split()
    if dims_line[0] != "dims":
        raise GroupError("last line must be 'dims d1 d2 ...'")
    dims = [int(x) for x in dims_line[1:]]
    return FiniteGroup(rows, dims, name)


def format_group_table(g: FiniteGroup) -> str:
    out = [f"order {g.order}"]
    out += [" ".join(map(str, row)) for row in g.table]
    out.append("dims " + " ".join(map(str, g.irrep_dims)))
    return "\n".join(out) + "\n"


def group_from_selector(selector: str) -> FiniteGroup:
    """Resolve ``z<n>``, ``d<2n>``, ``q8``, ``s3``, ``s4``, ``z<a>xz<b>`` or ``file:<path>``."""
    sel = selector.strip()
    if sel.startswith("file:"):
        path = sel[5:]
        try:
            with open(path, encoding="utf-8") as fh:
                return parse_group_table(fh.read(), name=path)
        except OSError as exc:
            raise GroupError(f"cannot read group file {path}: {exc.strerror}") from None
    s = sel.lower()
    if s == "q8":
        return make_quaternion8()
    m = re.fullmatch(r"s([1-4])", s)
    if m:
        return make_symmetric(int(m.group(1)))
    m = re.fullmatch(r"d(\d+)", s)
    if m:
        return make_dihedral(int(m.group(1)))
    parts = s.split("x")
    if all(re.fullmatch(r"z\d+", p) for p in parts):
        groups = [make_cyclic(int(p[1:])) for p in parts]
        out = groups[0]
        for gr in groups[1:]:
            out = make_product(out, gr)
        return out
    raise GroupError(f"unknown group selector {selector!r}")


def builtin_groups(max_order: int = 24) -> list[FiniteGroup]:
    """The supported families up to ``max_order``."""
    out = []
    for n in range(1, max_order + 1):
        out.append(make_cyclic(n))
    for a in range(2, max_order + 1):
        for b in range(a, max_order // a + 1):
            if gcd(a, b) > 1:
                out.append(make_product(make_cyclic(a), make_cyclic(b)))
    for order in range(6, max_order + 1, 2):
        out.append(make_dihedral(order))
    if max_order >= 8:
        out.append(make_quaternion8())
    for n in (3, 4):
        if prod(range(1, n + 1)) <= max_order:
            out.append(make_symmetric(n))
    return out
