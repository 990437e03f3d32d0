import numpy as np
import pytest

from skewalg import (
    AxiomViolationError,
    BiBandAlgebra,
    CompositionAmbiguityError,
    SkeletonNotClosedError,
    build_algebra,
    check_axioms,
    enumerate_skew_lattices,
    find_isomorphism,
    reconstruct,
    roundtrip_algebra,
    roundtrip_groupoid,
    semidirect_algebra,
    semidirect_groupoid,
    verify_derived_identities,
)
from skewalg.models import GROUP_CATALOG, GroupAction


def swap_action():
    rect = enumerate_skew_lattices(2)[2]
    return GroupAction(GROUP_CATALOG["C2"], rect, [[0, 1], [1, 0]])


def test_reconstructed_morphisms_are_the_elements():
    S = semidirect_algebra(swap_action())
    rec = reconstruct(S)
    assert rec.system.morphism_count == S.order
    jt, st = S.join.array, S.star
    for s in range(S.order):
        d, mid, r = rec.triples[s]
        assert mid == s
        assert d == int(jt[s, st[s]])
        assert r == int(jt[st[s], s])


def test_reconstructed_objects_are_the_idempotents():
    S = semidirect_algebra(swap_action())
    rec = reconstruct(S)
    mt = S.meet.array
    assert all(int(mt[b, b]) == b for b in rec.objects)
    assert set(rec.object_index) == set(rec.objects)


def test_reconstructed_system_passes_derived_identities(suite):
    for inst in suite[:30]:
        rec = reconstruct(inst.algebra)
        assert verify_derived_identities(rec.system).ok


def test_reconstruct_matches_direct_groupoid_construction(suite):
    # (s∨s*, s, s*∨s) triples against the (b, g, b^g) construction
    for inst in suite:
        if inst.algebra.order > 12:
            continue
        rec = reconstruct(inst.algebra)
        assert find_isomorphism(rec.system, inst.system) is not None, inst.name


def test_roundtrip_groupoid_is_identity_on_suite(suite):
    for inst in suite:
        iso = roundtrip_groupoid(inst.system)
        assert iso.mapping == tuple(range(inst.system.morphism_count)), inst.name


def test_roundtrip_algebra_is_identity_on_suite(suite):
    for inst in suite:
        iso = roundtrip_algebra(inst.algebra)
        assert iso.mapping == tuple(range(inst.algebra.order)), inst.name


def test_roundtrip_survives_build_algebra_composition():
    sysm = semidirect_groupoid(swap_action())
    S = build_algebra(sysm)
    rec = reconstruct(S)
    T = build_algebra(rec.system)
    assert T == S


def test_reconstruct_guard_rejects_failing_algebra():
    S = semidirect_algebra(swap_action())
    st = S.star.copy()
    st[2], st[3] = st[3], st[2]
    broken = BiBandAlgebra(S.join.array, S.meet.array, st)
    assert not check_axioms(broken).ok
    with pytest.raises(AxiomViolationError):
        reconstruct(broken)


def test_disagreeing_products_raise_ambiguity():
    S = semidirect_algebra(swap_action())
    jt = S.join.array.copy()
    idx = np.arange(S.order)
    d_el = jt[idx, S.star]
    r_el = jt[S.star, idx]
    st = S.star
    # a composable pair away from the s∨s* positions, so the endpoint data
    # is untouched and only the product value moves
    s, t = next(
        (s, t)
        for s in range(S.order)
        for t in range(S.order)
        if r_el[s] == d_el[t] and t != int(st[s]) and s != int(st[t])
    )
    jt[s, t] = (jt[s, t] + 1) % S.order
    broken = BiBandAlgebra(jt, S.meet.array, S.star)
    with pytest.raises(CompositionAmbiguityError):
        reconstruct(broken, check=False)


def test_non_idempotent_object_products_raise_skeleton_error():
    # idempotents 0 and 1 meet at the non-idempotent 2
    meet = [[0, 2, 2], [2, 1, 2], [2, 2, 0]]
    join = [[0, 2, 2], [2, 1, 2], [2, 2, 0]]
    broken = BiBandAlgebra(join, meet, [0, 1, 2])
    with pytest.raises(SkeletonNotClosedError):
        reconstruct(broken, check=False)
