"""Matrix term orders: comparisons, classification flags, and
multiplicativity of leading exponents on the admissible regions."""

from hypothesis import given, settings

from grobfan.rational import QQ
from grobfan.rings import RingSignature, Element
from grobfan.orders import (MatrixOrder, degrevlex, groebner_order,
                            local_order, leading_data)

from hypothesis import strategies as st

from conftest import elements, weights


def wglob_weights_1():
    """(u, v) with u + v >= 0."""
    return st.tuples(st.integers(-5, 5), st.integers(0, 8)).map(
        lambda t: (QQ(t[0]), QQ(t[1] - t[0])))


def wloc_weights_1():
    """(u, v) with u <= 0 <= u + v."""
    return st.tuples(st.integers(-5, 0), st.integers(0, 8)).map(
        lambda t: (QQ(t[0]), QQ(t[1] - t[0])))


def test_degrevlex_oracle():
    o = degrevlex(3)
    # higher total degree wins
    assert o.greater((1, 1, 1), (2, 0, 0))
    # on equal degree the last nonzero of a-b negative means greater
    assert o.greater((1, 1, 0), (1, 0, 1))
    assert o.greater((2, 0, 0), (0, 2, 0))


def test_comparison_is_total_and_antisymmetric():
    o = MatrixOrder(2, [(1, 1)])
    pts = [(i, j) for i in range(3) for j in range(3)]
    for a in pts:
        for b in pts:
            ca, cb = o.compare(a, b), o.compare(b, a)
            assert ca == -cb
            assert (ca == 0) == (a == b)


def test_flags_well_order():
    sig = RingSignature(2, "poly", "alpha")
    o = groebner_order(sig, (QQ(1), QQ(2)))
    f = o.flags(sig)
    assert f["isWellOrder"] and not f["isLocal"]


def test_flags_local_order():
    sig = RingSignature(2, "poly")
    o = local_order(sig, (QQ(-1), QQ(-1)))
    f = o.flags(sig)
    assert f["isLocal"] and not f["isWellOrder"]


def test_flags_admissible_differential():
    sig = RingSignature(2, "weyl", "h01")
    o = local_order(sig, (QQ(-1), QQ(-1), QQ(1), QQ(1)))
    f = o.flags(sig)
    assert f["isAdmissible"]
    # x_i below 1, x_i d_i above 1
    zero = (0,) * sig.nslots
    for i in range(sig.n):
        xi = tuple(1 if j == i else 0 for j in range(sig.nslots))
        xidi = tuple(1 if j in (i, sig.n + i) else 0
                     for j in range(sig.nslots))
        assert o.compare(xi, zero) < 0
        assert o.compare(xidi, zero) > 0


def test_block_flag_on_total_degree_first():
    sig = RingSignature(1, "weyl", "double")
    o = groebner_order(sig, (QQ(0), QQ(0)))
    assert o.flags(sig)["isBlockOnHPrime"]


def test_commutator_stays_below_classical_lead_h01():
    # under the admissible local order, x*d must beat the commutator h
    sig = RingSignature(1, "weyl", "h01")
    o = local_order(sig, (QQ(-1), QQ(1)))
    x, d = Element.variable(sig, 0), Element.variable(sig, 1)
    e, _ = leading_data(d * x, o)
    assert e == (1, 1, 0)


def test_commutator_stays_below_classical_lead_h11():
    sig = RingSignature(1, "weyl", "h11")
    o = groebner_order(sig, (QQ(1), QQ(1)))
    x, d = Element.variable(sig, 0), Element.variable(sig, 1)
    e, _ = leading_data(d * x, o)
    assert e == (1, 1, 0)


def test_commutator_stays_below_classical_lead_double():
    sig = RingSignature(1, "weyl", "double")
    o = groebner_order(sig, (QQ(-1), QQ(1)))
    x, d = Element.variable(sig, 0), Element.variable(sig, 1)
    e, _ = leading_data(d * x, o)
    assert e == (1, 1, 0, 0)


@settings(max_examples=80, deadline=None)
@given(elements(RingSignature(1, "weyl", "h11"), max_terms=3, max_deg=2),
       elements(RingSignature(1, "weyl", "h11"), max_terms=3, max_deg=2),
       wglob_weights_1())
def test_leading_exponents_multiplicative_h11(f, g, w):
    # on the region u+v >= 0 the h11 orders are multiplicative
    o = groebner_order(f.sig, w)
    ef, _ = leading_data(f, o)
    eg, _ = leading_data(g, o)
    efg, _ = leading_data(f * g, o)
    assert efg == tuple(a + b for a, b in zip(ef, eg))


@settings(max_examples=80, deadline=None)
@given(elements(RingSignature(1, "weyl", "double"), max_terms=3, max_deg=2),
       elements(RingSignature(1, "weyl", "double"), max_terms=3, max_deg=2),
       wloc_weights_1())
def test_leading_exponents_multiplicative_double(f, g, w):
    # on the region u <= 0 <= u+v the doubly homogenized block order is
    # multiplicative
    o = groebner_order(f.sig, w)
    ef, _ = leading_data(f, o)
    eg, _ = leading_data(g, o)
    efg, _ = leading_data(f * g, o)
    assert efg == tuple(a + b for a, b in zip(ef, eg))


@settings(max_examples=80, deadline=None)
@given(elements(RingSignature(2, "poly", "alpha"), max_terms=3, max_deg=3),
       elements(RingSignature(2, "poly", "alpha"), max_terms=3, max_deg=3),
       weights(2))
def test_leading_exponents_multiplicative_commutative(f, g, w):
    o = groebner_order(f.sig, w)
    ef, _ = leading_data(f, o)
    eg, _ = leading_data(g, o)
    efg, _ = leading_data(f * g, o)
    assert efg == tuple(a + b for a, b in zip(ef, eg))


def test_refine_by_weight_prepends():
    o = degrevlex(2)
    r = o.refine_by_weight((QQ(1), QQ(0)))
    assert r.greater((1, 0), (0, 5))
