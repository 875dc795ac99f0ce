import pytest
from hypothesis import given, strategies as st

from cocharlab.products import ProperProduct, multidegree_variables, parse_product


def test_render_and_parse():
    p = parse_product("z*[y1,y2]")
    assert str(p) == "z1*[y1,y2]"
    assert p.multidegree(3) == (2, 1, 0)
    assert parse_product("x4_2*r1").factors == (((4, 2),), ((3, 1),))


def test_validation():
    with pytest.raises(ValueError):
        ProperProduct((((0, 1),),))
    with pytest.raises(ValueError):
        parse_product("[z1,z1]")
    with pytest.raises(ValueError):
        parse_product("[y1]")
    with pytest.raises(ValueError):
        parse_product("[y1,[y2,y3]]")


def test_relabel():
    p = parse_product("[z1,y1]*z2")
    assert str(p.relabel({(1, 1): (1, 2), (1, 2): (1, 1)})) == "[z2,y1]*z1"


@given(st.lists(st.integers(0, 3), min_size=1, max_size=5))
def test_roundtrip(l):
    vars_ = multidegree_variables(l)
    if not vars_:
        return
    factor = tuple(vars_) if len(vars_) > 1 else None
    if factor is None:
        if vars_[0][0] == 0:
            return
        p = ProperProduct(((vars_[0],),))
    else:
        p = ProperProduct((factor,))
    assert parse_product(str(p)) == p
