import pytest
from hypothesis import given, strategies as st

from simplexgraph.field import (
    FieldError,
    build_field,
    distinct_sum_property,
    gf,
    prime_power,
    zero_sum_multisets,
)

ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25)


@pytest.mark.parametrize("q", ORDERS)
def test_tables_form_a_field(q):
    f = gf(q)
    els = list(f.elements)
    for a in els:
        assert f.add(a, 0) == a
        assert f.add(a, f.neg(a)) == 0
        assert f.mul(a, 1) == a
    for a in f.nonzero:
        assert f.mul(a, f.inv(a)) == 1
    assert f.order_of(f.primitive) == q - 1
    assert sorted(f.alpha_power(e) for e in range(q - 1)) == list(f.nonzero)


field_and_elems = st.sampled_from(ORDERS).flatmap(
    lambda q: st.tuples(st.just(gf(q)), *(st.integers(0, q - 1) for _ in range(3)))
)


@given(field_and_elems)
def test_ring_laws(data):
    f, a, b, c = data
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.sub(f.add(a, b), b) == a


@given(field_and_elems)
def test_frobenius_is_an_automorphism(data):
    f, a, b, _ = data
    for j in range(f.m):
        assert f.frobenius(f.add(a, b), j) == f.add(f.frobenius(a, j), f.frobenius(b, j))
        assert f.frobenius(f.mul(a, b), j) == f.mul(f.frobenius(a, j), f.frobenius(b, j))
        assert f.frobenius(a, j) == f.power(a, f.p**j)


def test_gf4_symbols():
    f = gf(4)
    a, b = f.parse_elem("a"), f.parse_elem("b")
    assert f.mul(a, a) == b
    assert f.add(a, 1) == b
    assert f.frobenius(a, 1) == b
    assert f.format_vector(f.parse_vector("01ab1")) == "01ab1"


def test_invalid_inputs():
    with pytest.raises(FieldError):
        prime_power(6)
    with pytest.raises(FieldError):
        build_field(2, 5)  # 32 > 25
    with pytest.raises((FieldError, ZeroDivisionError)):
        gf(4).inv(0)
    with pytest.raises(FieldError):
        gf(4).frobenius(1, 2)
    with pytest.raises(FieldError):
        gf(4).parse_elem("z")


def test_distinct_sum_property_only_for_3_and_4():
    assert distinct_sum_property(gf(3))
    assert distinct_sum_property(gf(4))
    assert not distinct_sum_property(gf(5))
    # 1+1+4+4 = 10 = 0 in GF(5)
    assert (1, 1, 4, 4) in zero_sum_multisets(gf(5))
