import pytest

from conftest import get_algebra
from tautilt import modules, mutation, pairs
from tautilt.errors import NotBasic, NotTauRigid, SupportViolation
from tautilt.modules import direct_sum, g_vector, hom_dim, standard_module, tau
from tautilt.pairs import (
    check_pair,
    classify_pair,
    dagger,
    e_invariant,
    hom_tau_dim,
    leq,
    module_label,
    regular_pair,
    tau_hom_vanishes,
    torsionfree_companion,
    zero_pair,
)


def P(A, v):
    return standard_module(A, "projective", v)


def S(A, v):
    return standard_module(A, "simple", v)


# ----- hom-with-tau without computing tau ------------------------------------


@pytest.mark.parametrize("name", ["a2", "cyc2", "lin3"])
def test_hom_tau_dim_matches_explicit_tau(name):
    A = get_algebra(name)
    mods = [P(A, v) for v in A.vertex_names] + [S(A, v) for v in A.vertex_names]
    for n in mods:
        for m in mods:
            assert hom_tau_dim(n, m) == hom_dim(n, tau(m))


def test_tau_hom_vanishes(lin3):
    assert tau_hom_vanishes(S(lin3, "1"), S(lin3, "1"))
    assert not tau_hom_vanishes(S(lin3, "2"), S(lin3, "1"))


# ----- pair validation -------------------------------------------------------


def test_check_pair_canonicalizes(cyc2):
    total, _, _ = direct_sum(cyc2, [P(cyc2, "1"), P(cyc2, "2")])
    pair = check_pair(cyc2, [total], ())
    assert pair.count == 2
    assert pair.key() == regular_pair(cyc2).key()


def test_check_pair_rejects_duplicates(a2):
    with pytest.raises(NotBasic):
        check_pair(a2, [P(a2, "1"), P(a2, "1")], ())


def test_check_pair_rejects_support_overlap(a2):
    with pytest.raises(SupportViolation):
        check_pair(a2, [S(a2, "1")], ("1",))


def test_check_pair_rejects_non_tau_rigid(loc, a2):
    with pytest.raises(NotTauRigid):
        check_pair(loc, [S(loc, "1")], ())
    with pytest.raises(NotTauRigid):
        check_pair(a2, [S(a2, "1"), S(a2, "2")], ())


def test_regular_and_zero_pairs(lin3):
    reg = regular_pair(lin3)
    assert reg.count == 3 and not reg.support
    z = zero_pair(lin3)
    assert z.count == 3 and not z.summands
    assert sorted(z.support_names()) == ["1", "2", "3"]
    assert z.label() == "e1 + e2 + e3"


# ----- classification --------------------------------------------------------


def test_classify_regular_pair(lin3):
    flags = classify_pair(regular_pair(lin3))
    assert flags["supportTauTilting"]
    assert flags["tauTilting"]
    assert flags["tilting"]
    assert flags["faithful"]


def test_classify_tau_tilting_not_tilting(lin3):
    pair = check_pair(
        lin3, [S(lin3, "1"), P(lin3, "1"), P(lin3, "3")], ()
    )
    flags = classify_pair(pair)
    assert flags["supportTauTilting"]
    assert flags["tauTilting"]
    assert flags["sincere"]
    assert not flags["tilting"]
    assert not flags["faithful"]


def test_classify_incomplete_pair(lin3):
    pair = check_pair(lin3, [S(lin3, "1")], ())
    flags = classify_pair(pair)
    assert not flags["supportTauTilting"]
    assert not flags["tauTilting"]


def test_almost_complete(cyc2):
    pair = check_pair(cyc2, [P(cyc2, "1")], ())
    assert classify_pair(pair)["almostComplete"]


# ----- order -----------------------------------------------------------------


def test_leq_extremes(cyc2):
    graph = mutation.enumerate_pairs(cyc2)
    reg = regular_pair(cyc2)
    zero = zero_pair(cyc2)
    for p in graph.vertices.values():
        assert leq(p, reg)
        assert leq(zero, p)
    assert not leq(reg, zero)


def test_leq_incomparable(cyc2):
    a = check_pair(cyc2, [P(cyc2, "1"), S(cyc2, "1")], ())
    b = check_pair(cyc2, [P(cyc2, "2"), S(cyc2, "2")], ())
    assert not leq(a, b) and not leq(b, a)


# ----- E-invariant -----------------------------------------------------------


def test_e_invariant_self_is_zero(lin3):
    p = check_pair(lin3, [S(lin3, "1")], ())
    assert e_invariant(p, p) == (0, 0, 0)


def test_e_invariant_counts_support(lin3):
    # E'(A,B) picks up dims of B's module at A's support vertices
    a = check_pair(lin3, [], ("1", "2", "3"))
    b = regular_pair(lin3)
    eab, eba, e = e_invariant(a, b)
    assert eab == sum(sum(m.dims) for m in b.summands)
    assert eba == 0
    assert e == eab


# ----- dagger and companions -------------------------------------------------


def test_dagger_extremes(cyc2):
    dag, pmap = dagger(regular_pair(cyc2))
    assert dag.algebra is cyc2.opposite()
    assert dag.key() == zero_pair(cyc2.opposite()).key()
    dag2, _ = dagger(zero_pair(cyc2))
    assert dag2.key() == regular_pair(cyc2.opposite()).key()
    assert set(pmap) == set(regular_pair(cyc2).positions())


def test_dagger_is_an_involution_on_keys(cyc2):
    graph = mutation.enumerate_pairs(cyc2)
    for p in graph.vertices.values():
        dag, _ = dagger(p)
        # canonicalize the dagger output before taking it back
        canon = check_pair(
            dag.algebra, list(dag.summands), tuple(dag.support)
        )
        back, _ = dagger(canon)
        back = check_pair(
            back.algebra, list(back.summands), tuple(back.support)
        )
        assert back.key() == p.key()


def test_torsionfree_companion_of_regular(lin3):
    first, second = torsionfree_companion(regular_pair(lin3))
    assert first.total_dim == 0
    injs = [standard_module(lin3, "injective", v) for v in lin3.vertex_names]
    total, _, _ = direct_sum(lin3, injs)
    assert modules.is_isomorphic(second, total)


# ----- labels ----------------------------------------------------------------


def test_module_labels(cyc2, lin3):
    assert module_label(P(cyc2, "1")) == "1/2"
    assert module_label(P(cyc2, "2")) == "2/1"
    assert module_label(S(cyc2, "1")) == "1"
    assert module_label(P(lin3, "2")) == "2/3"
    assert regular_pair(cyc2).label() in ("1/2 + 2/1", "2/1 + 1/2")


def test_g_vectors_and_key(lin3):
    reg = regular_pair(lin3)
    assert sorted(reg.g_vectors()) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    z = zero_pair(lin3)
    assert sorted(z.g_vectors()) == [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]
