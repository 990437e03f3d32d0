"""Rebuilding the groupoid from a passing (2,2,1)-algebra, both round trips.

Each algebra element s becomes the morphism (s∨s*, s, s*∨s) between
idempotent objects.  Composition is the meet product on matching faces
(checked against the join product, which must agree there), inversion is
star, and the four operator tables come from the extension formula
(a, a∨s, ...) together with its order and lateral duals.  roundtrip_groupoid
and roundtrip_algebra certify that this construction and build_algebra
invert each other, elementwise in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import BiBandAlgebra, check_axioms
from .errors import (
    AxiomViolationError,
    CompositionAmbiguityError,
    SkeletonNotClosedError,
)
from .groupoid import FiniteGroupoid
from .isomorphism import Isomorphism
from .system import RestrictionSystem, build_algebra
from .tables import SkewLatticeTable

__all__ = ["ReconstructedGroupoid", "reconstruct", "roundtrip_groupoid", "roundtrip_algebra"]


@dataclass(frozen=True)
class ReconstructedGroupoid:
    """A restriction system recovered from an algebra.

    Morphism i is the algebra element i; objects carry both their index in
    the recovered skew lattice and their identity as an algebra element.
    triples[s] = (d, s, r) with d, r the algebra elements s∨s* and s*∨s.
    """

    system: RestrictionSystem
    objects: tuple[int, ...]
    object_index: dict[int, int]
    triples: tuple[tuple[int, int, int], ...]


def reconstruct(S: BiBandAlgebra, check: bool = True) -> ReconstructedGroupoid:
    """The groupoid whose morphisms are the triples (s∨s*, s, s*∨s)."""
    if check:
        report = check_axioms(S)
        if not report.ok:
            bad = report.first_failure()
            raise AxiomViolationError(bad.name, bad.witness)

    n = S.order
    jt, mt, st = S.join.array, S.meet.array, S.star
    idx = np.arange(n)
    d_el = jt[idx, st]
    r_el = jt[st, idx]

    objects: list[int] = []
    object_index: dict[int, int] = {}
    for el in d_el:
        el = int(el)
        if el not in object_index:
            object_index[el] = len(objects)
            objects.append(el)
    # r_el ranges over the same set: r(s) = d(s*)
    for el in r_el:
        if int(el) not in object_index:
            raise SkeletonNotClosedError(f"codomain element {int(el)} is not an object")

    obj = np.asarray(objects)
    nb = len(objects)
    obj_meet = np.empty((nb, nb), dtype=np.int64)
    obj_join = np.empty((nb, nb), dtype=np.int64)
    for i in range(nb):
        for j in range(nb):
            me, jo = int(mt[obj[i], obj[j]]), int(jt[obj[i], obj[j]])
            if me not in object_index or jo not in object_index:
                raise SkeletonNotClosedError(
                    f"objects not closed under the operations at {(i, j)}"
                )
            obj_meet[i, j] = object_index[me]
            obj_join[i, j] = object_index[jo]
    lattice = SkewLatticeTable(obj_meet, obj_join)

    dom = np.asarray([object_index[int(e)] for e in d_el])
    cod = np.asarray([object_index[int(e)] for e in r_el])

    composable = r_el[:, None] == d_el[None, :]
    ambiguous = composable & (mt != jt)
    if ambiguous.any():
        s, t = (int(v) for v in np.argwhere(ambiguous)[0])
        raise CompositionAmbiguityError(
            f"products disagree on composable pair ({s}, {t}): "
            f"{int(mt[s, t])} by meet, {int(jt[s, t])} by join"
        )
    comp = np.where(composable, mt, -1)
    inv = st.copy()

    # operator tables, morphisms keyed by their middle element
    ge_l = jt[obj[:, None], d_el[None, :]] == obj[:, None]
    le_l = mt[obj[:, None], d_el[None, :]] == obj[:, None]
    ge_r = jt[r_el[:, None], obj[None, :]] == obj[None, :]
    le_r = mt[r_el[:, None], obj[None, :]] == obj[None, :]
    extL = np.where(ge_l, jt[obj[:, None], idx[None, :]], -1)
    restL = np.where(le_l, mt[obj[:, None], idx[None, :]], -1)
    extR = np.where(ge_r, jt[idx[:, None], obj[None, :]], -1)
    restR = np.where(le_r, mt[idx[:, None], obj[None, :]], -1)

    groupoid = FiniteGroupoid(nb, dom, cod, comp, inv)
    system = RestrictionSystem(groupoid, lattice, restL, restR, extL, extR)
    if check:
        report = system.full_report()
        if not report.ok:
            bad = report.first_failure()
            raise AxiomViolationError(bad.name, bad.witness)

    triples = tuple(
        (int(d_el[s]), int(s), int(r_el[s])) for s in range(n)
    )
    return ReconstructedGroupoid(system, tuple(objects), object_index, triples)


def _first_diff(a: np.ndarray, b: np.ndarray):
    bad = np.argwhere(a != b)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def roundtrip_groupoid(sys: RestrictionSystem) -> Isomorphism:
    """Certify g ↦ (𝐝g, g, 𝐫g) as an isomorphism onto the groupoid rebuilt
    from the system's own algebra; morphism indices are preserved, so the
    certificate is the identity mapping once every table matches."""
    report = sys.full_report()
    if not report.ok:
        bad = report.first_failure()
        raise AxiomViolationError(bad.name, bad.witness)
    S = build_algebra(sys, check=False)
    rec = reconstruct(S, check=False)
    new = rec.system
    m = sys.morphism_count

    # identity morphisms are the objects on the other side
    objmap = np.asarray([rec.object_index[int(e)] for e in sys.groupoid.identity_of])
    pairs = [
        ("object_meet", new.objects.meet.array[objmap[:, None], objmap[None, :]],
         objmap[sys.objects.meet.array]),
        ("object_join", new.objects.join.array[objmap[:, None], objmap[None, :]],
         objmap[sys.objects.join.array]),
        ("dom", new.groupoid.dom, objmap[sys.groupoid.dom]),
        ("cod", new.groupoid.cod, objmap[sys.groupoid.cod]),
        ("comp", new.groupoid.comp, sys.groupoid.comp),
        ("inv", new.groupoid.inv, sys.groupoid.inv),
        ("restL", new.restL[objmap, :], sys.restL),
        ("extL", new.extL[objmap, :], sys.extL),
        ("restR", new.restR[:, objmap], sys.restR),
        ("extR", new.extR[:, objmap], sys.extR),
    ]
    if len(np.unique(objmap)) != sys.object_count or new.object_count != sys.object_count:
        raise AxiomViolationError("roundtrip_object_bijection", (sys.object_count,))
    for name, lhs, rhs in pairs:
        spot = _first_diff(lhs, rhs)
        if spot is not None:
            raise AxiomViolationError(f"roundtrip_{name}", spot)
    return Isomorphism(m, m, tuple(range(m)))


def roundtrip_algebra(S: BiBandAlgebra) -> Isomorphism:
    """Certify that rebuilding the groupoid and taking its algebra returns
    S itself: morphisms are keyed by element, so the mapping is identity."""
    report = check_axioms(S)
    if not report.ok:
        bad = report.first_failure()
        raise AxiomViolationError(bad.name, bad.witness)
    rec = reconstruct(S, check=False)
    T = build_algebra(rec.system, check=False)
    for name, lhs, rhs in [
        ("join", T.join.array, S.join.array),
        ("meet", T.meet.array, S.meet.array),
        ("star", T.star, S.star),
    ]:
        spot = _first_diff(lhs, rhs)
        if spot is not None:
            raise AxiomViolationError(f"roundtrip_{name}", spot)
    return Isomorphism(S.order, S.order, tuple(range(S.order)))
