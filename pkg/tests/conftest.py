"""Shared builders for the test suite."""

from hypothesis import strategies as st

from grobfan.rational import QQ
from grobfan.rings import RingSignature, Element


def make_sig(n, kind, homog="none", alpha=None):
    return RingSignature(n, kind, homog, alpha=alpha)


def element_from(sig, terms):
    """terms: iterable of (exponent tuple, coefficient)."""
    out = Element.zero(sig)
    for e, c in terms:
        out = out + Element.monomial(sig, e, QQ(c))
    return out


def coeffs():
    return st.fractions(min_value=-9, max_value=9).filter(lambda c: c != 0)


def exponents(nslots, max_deg=3):
    return st.tuples(*([st.integers(min_value=0, max_value=max_deg)]
                       * nslots))


def elements(sig, max_terms=4, max_deg=3):
    """Random nonzero elements of the given ring."""
    return st.lists(
        st.tuples(exponents(sig.nslots, max_deg), coeffs()),
        min_size=1, max_size=max_terms,
    ).map(lambda ts: element_from(sig, ts)).filter(lambda p: not p.is_zero())


def weights(dim, lo=-6, hi=6):
    return st.tuples(*([st.integers(min_value=lo, max_value=hi)] * dim)) \
        .map(lambda w: tuple(QQ(x) for x in w))
