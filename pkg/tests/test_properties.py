import math

from hypothesis import given, settings, strategies as st

from kacscope.affine import build_spec
from kacscope.kac import apply_perm, canonical, is_admissible, order_of, zero_set
from kacscope.thomae import f_value

SPECS = ["A4", "B5", "C4", "D6", "2A7", "2A8", "2D5", "F4", "E6"]

diagrams = st.sampled_from(SPECS).map(build_spec)


@st.composite
def diagram_and_vector(draw):
    d = draw(diagrams)
    s = draw(
        st.lists(st.integers(0, 4), min_size=len(d.nodes), max_size=len(d.nodes))
    )
    return d, tuple(s)


def _admissible_reference(s):
    if not s or any(v < 0 for v in s) or all(v == 0 for v in s):
        return False
    return math.gcd(*s) == 1


@given(st.lists(st.integers(-2, 6), max_size=8).map(tuple))
def test_admissibility_definition(s):
    assert is_admissible(s) == _admissible_reference(s)


@settings(max_examples=200)
@given(diagram_and_vector())
def test_symmetry_invariance(dv):
    d, s = dv
    if not is_admissible(s):
        return
    for perm in d.omega:
        t = apply_perm(perm, s)
        assert order_of(d, t) == order_of(d, s)
        assert f_value(d, zero_set(d, t)) == f_value(d, zero_set(d, s))
        assert canonical(d, t) == canonical(d, s)


@settings(max_examples=200)
@given(diagram_and_vector())
def test_canonical_idempotent(dv):
    d, s = dv
    if not is_admissible(s):
        return
    rep = canonical(d, s)
    assert canonical(d, rep) == rep
    assert order_of(d, rep) == order_of(d, s)
