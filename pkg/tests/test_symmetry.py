import numpy as np
import pytest
from hypothesis import given, strategies as st

from simplexgraph import symmetry as sym
from simplexgraph.field import gf
from simplexgraph.symmetry import MonomialMap

F4 = gf(4)
perms = st.permutations(range(5)).map(tuple)
maps = st.builds(
    MonomialMap,
    perms,
    st.tuples(*(st.integers(1, 3) for _ in range(5))),
    st.integers(0, 1),
)
vecs = st.tuples(*(st.integers(0, 3) for _ in range(5)))


@given(perms, perms)
def test_perm_helpers(a, b):
    assert sym.perm_compose(a, sym.perm_inverse(a)) == tuple(range(5))
    assert sym.perm_from_cycles(5, sym.perm_cycles(a)) == a
    assert sym.perm_is_even(sym.perm_compose(a, b)) == (sym.perm_is_even(a) == sym.perm_is_even(b))


@given(maps, maps, vecs)
def test_compose_and_inverse(m1, m2, v):
    assert m1.compose(F4, m2).apply(F4, v) == m1.apply(F4, m2.apply(F4, v))
    assert m1.inverse(F4).apply(F4, m1.apply(F4, v)) == v


@given(maps, vecs, vecs, st.integers(0, 3))
def test_semilinearity(m, x, y, c):
    fr = lambda a: F4.frobenius(a, m.frob)  # noqa: E731
    xy = tuple(F4.add(a, F4.mul(c, b)) for a, b in zip(x, y))
    lhs = m.apply(F4, xy)
    rhs = tuple(F4.add(a, F4.mul(fr(c), b)) for a, b in zip(m.apply(F4, x), m.apply(F4, y)))
    assert lhs == rhs


def test_constructor_conventions():
    # permute first, then scale: e_3 -> e_4 unscaled, e_1 -> a^2 e_1
    m = MonomialMap.diag_perm((3, 1, 1, 1, 1), sym.perm_from_cycles(5, [(3, 4, 5)]))
    assert m.apply(F4, (0, 0, 1, 0, 0)) == (0, 0, 0, 1, 0)
    assert m.apply(F4, (1, 0, 0, 0, 0)) == (3, 0, 0, 0, 0)
    w = MonomialMap.from_coordinates((0, 1, 2, 4, 3), (1, 1, 1, 1, 1), frob=1)
    assert w.apply(F4, (1, 2, 3, 2, 3)) == (1, 3, 2, 2, 3)
    assert "frob=1" in w.text(F4)


def test_group_orders():
    assert len(sym.enumerate_monomial_group(F4, 5)) == sym.monomial_group_order(F4, 5) == 58320
    assert len(sym.projective_monomial_group(F4, 5)) == 19440


@pytest.fixture(scope="module")
def full(u4):
    return sym.full_projective_group(u4)


@pytest.fixture(scope="module")
def gl(u4, base, full):
    return sym.stabilizer_of_line(u4, base, full)


def test_action_well_defined(u4, g4, full):
    edges = np.array(list(g4.edges()))
    assert sym.action_is_well_defined(u4, full, edges)
    assert len(sym.orbits(full)) == 1


def test_stabilizer_without_group_matches(u4, base, gl):
    direct = sym.stabilizer_of_line(u4, base)
    assert {m for m in direct.elements} == {m for m in gl.elements}


def test_gl_structure(u4, base, gl, ctx):
    assert len(gl) == 120
    pa = sym.point_action_on_line(u4, gl, base)
    assert len(set(pa)) == 120
    assert all(sym.perm_is_even(p) == m.is_linear for p, m in zip(pa, gl.elements))
    assert sorted(map(len, sym.orbits(gl))) == [1, 6, 10, 15, 20, 20, 30, 60]
    assert sym.check_sharply_3_transitive(gl, ctx.six)
    assert sym.triple_stabilizer_size(gl, ctx.six) == 1
    assert sum(gl.is_identity(e) for e in range(len(gl))) == 1


def test_stabilizer_orders(u4, gl, ctx):
    l136, l245 = ctx.line("L_136"), ctx.line("L_245")
    assert len(sym.stabilizer_of_line(u4, l136, gl)) == 6
    assert len(sym.setwise_stabilizer(gl, [l136, l245])) == 12


def test_non_sharp_action_detected(gl, ctx):
    # the stabiliser of L_136 is too small to be 3-transitive on the six
    sub = gl.subgroup(gl.line_table[:, ctx.line("L_136")] == ctx.line("L_136"))
    assert not sym.check_sharply_3_transitive(sub, ctx.six)
