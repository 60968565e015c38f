from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from superradon.algebra import GrassmannElement, SuperPolynomial

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def grassmann_elements(draw, ngen, parity=None):
    terms = {}
    for mask in draw(st.lists(st.integers(0, (1 << ngen) - 1), max_size=6)):
        if parity is not None and mask.bit_count() % 2 != parity:
            continue
        terms[mask] = draw(rationals)
    return GrassmannElement(ngen, terms)


@st.composite
def superpolynomials(draw, dims, max_degree=3, max_terms=4):
    P = SuperPolynomial.zero(dims)
    for _ in range(draw(st.integers(1, max_terms))):
        alpha = tuple(draw(st.integers(0, max_degree)) for _ in range(dims.m))
        mask = draw(st.integers(0, (1 << dims.nferm) - 1))
        P = P + SuperPolynomial.monomial(dims, alpha, mask, draw(rationals))
    return P
