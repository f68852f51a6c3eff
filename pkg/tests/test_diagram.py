import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flowknots.diagram import (FIXTURES, Crossing, DiagramError, EmbeddingStage, Wedge, WedgeDiagram,
                               abelianized_inclusion, builtin_fixture, canonical_stage, duality_check,
                               inclusion_morphism, relations, sturmian_stage, wirtinger)
from flowknots.fpgroup import (AbelianDescriptor, DirectSystem, GroupPresentation, GroupWord, abelianize,
                               count_homs, is_free_automorphism, simplified_map, stable_image_rank,
                               tietze_reduce)
from flowknots.symbolic import Substitution, sturmian_substitution, transition_matrix


def outer(stage):
    return GroupPresentation.free(len(stage.traces))


def inclusion(name):
    st_ = builtin_fixture(name)
    return st_, inclusion_morphism(st_, outer(st_))


def test_dyadic_unknotted_relation_trivial():
    p = wirtinger(builtin_fixture("dyadic_unknotted").diagram)
    assert p.rank == 1 and p.is_free


def test_dyadic_unknotted_inclusion():
    _, f = inclusion("dyadic_unknotted")
    assert f.images == (GroupWord([1, 1]),)


def test_dyadic_trefoil_presentation():
    p = wirtinger(builtin_fixture("dyadic_trefoil").diagram)
    expected = GroupPresentation.parse("abc", ["ab=ca=bc"])
    # same relators up to cyclic rotation and inversion
    norm = lambda q: sorted({r.cyclic_canonical() for r in q.relators}, key=lambda w: w.letters)
    got = norm(p)
    # the third crossing relation is a consequence; the first two are exactly ab=ca, ca=bc
    assert set(norm(expected)) <= set(got)
    assert count_homs(p, "s3") == count_homs(expected, "s3") == 12


def test_fibonacci_unknotted_inclusion_and_automorphism():
    _, f = inclusion("fibonacci_unknotted")
    g = simplified_map(f)
    assert g.target.is_free and g.target.rank == 2
    assert [w.format("ab") for w in g.images] == ["aab", "ab"]
    assert is_free_automorphism(g)


def test_fibonacci_trefoil_variant():
    st_, f = inclusion("fibonacci_trefoil")
    d = st_.diagram
    assert d.names == ("w", "x", "y", "z", "b")
    p = wirtinger(d)
    # same group as the relation list yw = xy = zx = yz plus the wedge zb = wb
    expected = GroupPresentation.parse(d.names, ["yw=xy=zx=yz", "zb=wb"])
    assert count_homs(tietze_reduce(p).presentation, "s3") == count_homs(tietze_reduce(expected).presentation, "s3")
    assert [w.format(d.names) for w in f.images] == ["ywb", "zb"]
    q = tietze_reduce(p).presentation
    assert not q.is_free
    assert abelianize(q) == AbelianDescriptor(2)
    assert count_homs(q, "s3") == 72 != 36  # not free, so not an isomorphism of F2


def test_thue_morse_relations():
    st_ = builtin_fixture("thue_morse_simplified")
    p = wirtinger(st_.diagram)
    a, b, b1, b2 = (GroupWord.gen(i) for i in range(4))
    # substitute b'' = b in the relators: what is left is ba = ab'
    to_b = [a, b, b1, b]
    left = {r.substitute(to_b).cyclic_canonical() for r in p.relators}
    left.discard(GroupWord())
    assert left == {(b * a * (a * b1).inverse()).cyclic_canonical()}
    # b'' = b itself follows from the wedge relation
    r = tietze_reduce(p)
    assert r.forward[3] == r.forward[1]


def test_thue_morse_image_rank_one():
    st_, f = inclusion("thue_morse_simplified")
    g = simplified_map(f)
    assert g.images[0] == g.images[1]
    assert stable_image_rank(DirectSystem((f.source, f.target), (f,)), 1) == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_duality_all_fixtures(name):
    assert duality_check(builtin_fixture(name))


@pytest.mark.parametrize("n", range(1, 6))
def test_duality_sturmian(n):
    st_ = sturmian_stage(n)
    assert duality_check(st_, sturmian_substitution(n))
    assert np.array_equal(abelianized_inclusion(st_), transition_matrix(sturmian_substitution(n)).T)


def test_duality_identity_stage():
    assert duality_check(canonical_stage(Substitution.identity(3)))


def test_duality_rank_mismatch():
    with pytest.raises(DiagramError):
        duality_check(builtin_fixture("dyadic_trefoil"), sturmian_substitution(1))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_free_rank_equals_loop_count(name):
    d = builtin_fixture(name).diagram
    assert abelianize(wirtinger(d)).free_rank == d.num_loops


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_crossings_abelianize_to_equal_meridians(name):
    d = builtin_fixture(name).diagram
    for kind, lhs, rhs in relations(d):
        if kind != "crossing":
            continue
        v = (lhs * rhs.inverse()).exponent_sum(d.arcs)
        nonzero = {i: x for i, x in enumerate(v) if x}
        assert sorted(nonzero.values()) in ([], [-1, 1])


@pytest.mark.parametrize("name", sorted(FIXTURES))
@settings(max_examples=8)
@given(st.randoms())
def test_arc_relabelling_invariance(name, rnd):
    stage = builtin_fixture(name)
    d = stage.diagram
    perm = list(range(d.arcs))
    rnd.shuffle(perm)
    m = lambda a: perm[a]
    names = [None] * d.arcs
    for a in range(d.arcs):
        names[perm[a]] = d.names[a]
    d2 = WedgeDiagram(
        d.arcs, tuple(Crossing(m(c.over), m(c.under_in), m(c.under_out), c.sign) for c in d.crossings),
        None if d.wedge is None else Wedge(tuple(map(m, d.wedge.incoming)), tuple(map(m, d.wedge.outgoing))),
        tuple(tuple(map(m, l)) for l in d.loops), tuple(names))
    p, p2 = wirtinger(d), wirtinger(d2)
    assert abelianize(p) == abelianize(p2)
    assert count_homs(tietze_reduce(p).presentation, "s3") == count_homs(tietze_reduce(p2).presentation, "s3")


def test_validation_errors():
    with pytest.raises(DiagramError):  # arc 1 never ends
        WedgeDiagram(2, (), Wedge((0,), (0,)), ((0, 1),))
    with pytest.raises(DiagramError):  # wedge size differs from loop count
        WedgeDiagram(2, (), Wedge((0, 1), (0, 1)), ((0, 1),))
    with pytest.raises(DiagramError):  # no wedge but two loops
        WedgeDiagram(2, (Crossing(0, 0, 0), Crossing(1, 1, 1)), None, ((0,), (1,)))
    d = builtin_fixture("dyadic_unknotted").diagram
    with pytest.raises(DiagramError):
        EmbeddingStage(d, (((5, 1),),))


def test_unknown_fixture():
    with pytest.raises(KeyError):
        builtin_fixture("figure_eight")


def test_missing_trace():
    st_ = builtin_fixture("fibonacci_unknotted")
    with pytest.raises(DiagramError):
        inclusion_morphism(st_, GroupPresentation.free(3))
