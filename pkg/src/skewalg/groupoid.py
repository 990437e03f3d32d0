"""Finite groupoids: partial composition tables with identities and inversion.

A groupoid here is a small category whose morphisms are all invertible,
flattened to integer-indexed tables. Composition is a partial binary table
with -1 marking undefined pairs; endpoints are stored, never recomputed.
Construction only validates shapes and index ranges so that deliberately
broken tables can still be built and then interrogated by check_groupoid.
"""

from __future__ import annotations

import numpy as np

from .errors import MalformedSystemError, UndefinedCompositionError
from .report import AxiomReport
from .tables import GroupTable

__all__ = [
    "FiniteGroupoid",
    "check_groupoid",
    "discrete_groupoid",
    "group_groupoid",
    "pair_groupoid",
]


class FiniteGroupoid:
    """Morphisms 0..m-1 over objects 0..n-1 with partial composition."""

    def __init__(self, object_count, dom, cod, comp, inv):
        self.object_count = int(object_count)
        self.dom = np.asarray(dom, dtype=np.int64)
        self.cod = np.asarray(cod, dtype=np.int64)
        self.comp = np.asarray(comp, dtype=np.int64)
        self.inv = np.asarray(inv, dtype=np.int64)
        m = self.dom.shape[0]
        if self.cod.shape != (m,) or self.inv.shape != (m,):
            raise MalformedSystemError("dom, cod, inv must have equal length")
        if self.comp.shape != (m, m):
            raise MalformedSystemError(
                f"composition table must be {m}x{m}, got {self.comp.shape}"
            )
        if self.object_count < 0:
            raise MalformedSystemError("negative object count")
        for name, arr, hi in (
            ("dom", self.dom, self.object_count),
            ("cod", self.cod, self.object_count),
            ("inv", self.inv, m),
        ):
            if arr.size and (arr.min() < 0 or arr.max() >= hi):
                raise MalformedSystemError(f"{name} entries out of range")
        if self.comp.size and (self.comp.min() < -1 or self.comp.max() >= m):
            raise MalformedSystemError("composition entries out of range")
        self.dom.setflags(write=False)
        self.cod.setflags(write=False)
        self.comp.setflags(write=False)
        self.inv.setflags(write=False)
        self.identity_of = self._find_identities()

    @property
    def morphism_count(self) -> int:
        return self.dom.shape[0]

    def _find_identities(self) -> np.ndarray:
        """identity_of[b] = the unit morphism at object b, or -1 if absent.

        Derived tolerantly: a broken table simply yields -1 entries, which
        check_groupoid then reports.
        """
        n, m = self.object_count, self.morphism_count
        out = np.full(n, -1, dtype=np.int64)
        for e in range(m):
            b = int(self.dom[e])
            if int(self.cod[e]) != b or int(self.comp[e, e]) != e:
                continue
            ok = True
            for f in range(m):
                if int(self.dom[f]) == b and int(self.comp[e, f]) != f:
                    ok = False
                    break
                if int(self.cod[f]) == b and int(self.comp[f, e]) != f:
                    ok = False
                    break
            if ok:
                out[b] = e
        out.setflags(write=False)
        return out

    def compose(self, f: int, h: int) -> int:
        """f then h; defined only when cod(f) = dom(h)."""
        v = int(self.comp[f, h])
        if v < 0:
            raise UndefinedCompositionError(
                f"cod({f}) = {int(self.cod[f])} != dom({h}) = {int(self.dom[h])}"
            )
        return v

    def invert(self, f: int) -> int:
        return int(self.inv[f])

    def d_morphism(self, g: int) -> int:
        """The identity-shaped composite g o g^{-1} (at dom g)."""
        return int(self.comp[g, self.inv[g]])

    def r_morphism(self, g: int) -> int:
        """g^{-1} o g (at cod g)."""
        return int(self.comp[self.inv[g], g])

    def morphisms(self) -> list[tuple[int, int]]:
        """(dom, cod) pairs in index order, for serialization."""
        return [(int(d), int(c)) for d, c in zip(self.dom, self.cod)]

    def __eq__(self, other):
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (
            self.object_count == other.object_count
            and np.array_equal(self.dom, other.dom)
            and np.array_equal(self.cod, other.cod)
            and np.array_equal(self.comp, other.comp)
            and np.array_equal(self.inv, other.inv)
        )

    def __repr__(self):
        return (
            f"FiniteGroupoid(objects={self.object_count}, "
            f"morphisms={self.morphism_count})"
        )


def check_groupoid(g: FiniteGroupoid) -> AxiomReport:
    """Verify the four groupoid laws, one named flag each."""
    report = AxiomReport("groupoid laws")
    m = g.morphism_count

    ok, witness = True, None
    for f in range(m):
        for h in range(m):
            defined = int(g.comp[f, h]) >= 0
            should = int(g.cod[f]) == int(g.dom[h])
            if defined != should:
                ok, witness = False, (f, h)
                break
            if defined:
                v = int(g.comp[f, h])
                if int(g.dom[v]) != int(g.dom[f]) or int(g.cod[v]) != int(g.cod[h]):
                    ok, witness = False, (f, h)
                    break
        if not ok:
            break
    report.record("composition_pattern", ok, witness)

    ok, witness = True, None
    for f in range(m):
        for h in range(m):
            fh = int(g.comp[f, h])
            if fh < 0:
                continue
            for k in range(m):
                hk = int(g.comp[h, k])
                if hk < 0:
                    continue
                left = int(g.comp[fh, k])
                right = int(g.comp[f, hk])
                if left >= 0 and right >= 0 and left != right:
                    ok, witness = False, (f, h, k)
                    break
            if not ok:
                break
        if not ok:
            break
    report.record("associativity", ok, witness)

    ok, witness = True, None
    for b in range(g.object_count):
        if int(g.identity_of[b]) < 0:
            ok, witness = False, (b,)
            break
    if ok:
        for f in range(m):
            e_d = int(g.identity_of[g.dom[f]])
            e_c = int(g.identity_of[g.cod[f]])
            if int(g.comp[e_d, f]) != f or int(g.comp[f, e_c]) != f:
                ok, witness = False, (f,)
                break
    report.record("identities", ok, witness)

    ok, witness = True, None
    for f in range(m):
        fi = int(g.inv[f])
        if int(g.dom[fi]) != int(g.cod[f]) or int(g.cod[fi]) != int(g.dom[f]):
            ok, witness = False, (f,)
            break
        e_d = int(g.identity_of[g.dom[f]]) if g.object_count else -1
        e_c = int(g.identity_of[g.cod[f]]) if g.object_count else -1
        if int(g.comp[f, fi]) != e_d or int(g.comp[fi, f]) != e_c:
            ok, witness = False, (f,)
            break
    report.record("inverse_laws", ok, witness)

    # consequences of the four laws, recorded per instance but not required
    ok, witness = True, None
    for f in range(m):
        if int(g.inv[g.inv[f]]) != f:
            ok, witness = False, (f,)
            break
    report.record("involution", ok, witness, required=False)

    ok, witness = True, None
    for f in range(m):
        for h in range(m):
            fh = int(g.comp[f, h])
            if fh < 0:
                continue
            if int(g.inv[fh]) != int(g.comp[g.inv[h], g.inv[f]]):
                ok, witness = False, (f, h)
                break
        if not ok:
            break
    report.record("anti_involution", ok, witness, required=False)

    ok, witness = True, None
    idset = {int(e) for e in g.identity_of if int(e) >= 0}
    for f in range(m):
        if (int(g.comp[f, f]) == f) != (f in idset):
            ok, witness = False, (f,)
            break
    report.record("idempotents_are_identities", ok, witness, required=False)

    return report


def discrete_groupoid(n: int) -> FiniteGroupoid:
    """Only identity morphisms, one per object."""
    comp = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(comp, np.arange(n))
    idx = np.arange(n)
    return FiniteGroupoid(n, idx, idx, comp, idx)


def group_groupoid(group: GroupTable) -> FiniteGroupoid:
    """A group seen as a one-object groupoid."""
    m = group.order
    zeros = np.zeros(m, dtype=np.int64)
    return FiniteGroupoid(1, zeros, zeros, group.table.array, group.inverse)


def pair_groupoid(n: int) -> FiniteGroupoid:
    """Morphisms are ordered pairs (i, j): exactly one from i to j."""
    idx = lambda i, j: i * n + j
    m = n * n
    dom = np.array([i for i in range(n) for _ in range(n)], dtype=np.int64)
    cod = np.array([j for _ in range(n) for j in range(n)], dtype=np.int64)
    comp = np.full((m, m), -1, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                comp[idx(i, j), idx(j, k)] = idx(i, k)
    inv = np.array([idx(j, i) for i in range(n) for j in range(n)], dtype=np.int64)
    return FiniteGroupoid(n, dom, cod, comp, inv)
