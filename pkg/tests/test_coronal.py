from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigspec.coronal import (regular_balanced_coronal, signed_coronal,
                             star_coronal_closed_form)
from sigspec.exact import Matrix, Poly, charpoly, poly_gcd
from sigspec.graphs import (MarkedSignedGraph, adjacency_matrix,
                            canonical_marking, complete, cycle, matrices,
                            mu_signed_graph, star)
from sigspec.sampling import random_marked_graph


def rngs():
    import random
    return st.integers(min_value=0, max_value=10 ** 6).map(random.Random)


def test_k2_all_ones_triple():
    triple = signed_coronal(Matrix([[0, 1], [1, 0]]), [1, 1])
    assert triple.num == Poly.constant(2)
    assert triple.den == Poly.linear(-1)      # x - 1
    assert triple.shared == Poly.linear(1)    # x + 1
    assert triple.charpoly == Poly([-1, 0, 1])


def test_star_closed_form_examples():
    f = star_coronal_closed_form(2, 1)
    assert f.num == Poly([4, 3])
    assert f.den == Poly([-2, 0, 1])
    f = star_coronal_closed_form(2, -1)
    assert f.num == Poly([-4, 3])
    # one leaf with a plus center collapses to 2/(x-1)
    f = star_coronal_closed_form(1, 1)
    assert f.num == Poly.constant(2)
    assert f.den == Poly.linear(-1)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("center_sign", ["+", "-"])
def test_star_coronal_matches_closed_form(n, center_sign):
    signs = center_sign + "+" * (n - 1)
    g = star(n + 1, signs)
    mg = MarkedSignedGraph.with_canonical_marking(g)
    center_mark = mg.marking[0]
    # the canonical center mark is the product of all star edge signs
    assert center_mark == (1 if signs.count("-") % 2 == 0 else -1)
    # raw signature route: the center mark shows up in the numerator
    raw = signed_coronal(adjacency_matrix(mg.graph), list(mg.marking))
    assert raw.rational_fn == star_coronal_closed_form(n, center_mark)
    # mu-graph route: marks cancel, the form always looks all-positive
    via_mu = signed_coronal(adjacency_matrix(mu_signed_graph(mg)),
                            list(mg.marking))
    assert via_mu.rational_fn == star_coronal_closed_form(n, 1)


def test_regular_balanced_coronal():
    assert regular_balanced_coronal(2, 5).num == Poly.constant(5)
    assert regular_balanced_coronal(2, 5).den == Poly.linear(-2)
    with pytest.raises(ValueError):
        regular_balanced_coronal(5, 5)


@pytest.mark.parametrize("builder,n,r", [(cycle, 5, 2), (complete, 4, 3)])
def test_regular_graph_coronal_matches_closed_form(builder, n, r):
    mg = MarkedSignedGraph.with_canonical_marking(builder(n))
    triple = signed_coronal(adjacency_matrix(mg.graph), [1] * n)
    assert triple.rational_fn == regular_balanced_coronal(r, n)


@given(rng=rngs(), x0=st.integers(min_value=7, max_value=20))
@settings(max_examples=50, deadline=None)
def test_coronal_point_value_matches_resolvent_solve(rng, x0):
    # oracle: mu^T (x0 I - N)^(-1) mu via exact Gaussian elimination
    mg = random_marked_graph(rng, max_n=6)
    n_matrix = adjacency_matrix(mu_signed_graph(mg))
    mu = list(mg.marking)
    triple = signed_coronal(n_matrix, mu)
    n = mg.graph.n
    shifted = Matrix.identity(n) * Fraction(x0) - n_matrix
    sol = shifted.solve(mu)
    direct = sum(Fraction(m) * s for m, s in zip(mu, sol))
    assert triple.eval(x0) == direct


@given(rng=rngs())
@settings(max_examples=50, deadline=None)
def test_coronal_triple_bookkeeping(rng):
    mg = random_marked_graph(rng, max_n=6)
    n_matrix = adjacency_matrix(mu_signed_graph(mg))
    triple = signed_coronal(n_matrix, list(mg.marking))
    assert triple.den * triple.shared == charpoly(n_matrix)
    assert triple.num.degree == triple.den.degree - 1
    assert poly_gcd(triple.num, triple.den) == Poly.constant(1)
    assert triple.den.is_monic and triple.shared.is_monic
    # numerator leading coefficient counts the vertices
    assert triple.num.leading == mg.graph.n


def test_signature_changes_raw_coronal_but_not_mu_route():
    plus = MarkedSignedGraph.with_canonical_marking(complete(4))
    minus = MarkedSignedGraph.with_canonical_marking(complete(4, "-"))
    raw_plus = signed_coronal(adjacency_matrix(plus.graph), [1] * 4)
    raw_minus = signed_coronal(adjacency_matrix(minus.graph), [1] * 4)
    assert raw_plus.rational_fn != raw_minus.rational_fn
    via_mu_plus = signed_coronal(adjacency_matrix(mu_signed_graph(plus)),
                                 list(plus.marking))
    via_mu_minus = signed_coronal(adjacency_matrix(mu_signed_graph(minus)),
                                  list(minus.marking))
    assert via_mu_plus.rational_fn == via_mu_minus.rational_fn


def test_mu_route_always_equals_all_ones_coronal_of_underlying():
    # D_mu mu = all-ones vector, so the marks cancel inside the form
    g = cycle(5, "+-+--")
    mg = MarkedSignedGraph(g, canonical_marking(g))
    lhs = signed_coronal(adjacency_matrix(mu_signed_graph(mg)), list(mg.marking))
    rhs = signed_coronal(adjacency_matrix(g.underlying_positive()), [1] * 5)
    assert lhs.rational_fn == rhs.rational_fn


def test_signed_coronal_validates_marks():
    with pytest.raises(ValueError):
        signed_coronal(Matrix([[0, 1], [1, 0]]), [1, 2])
    with pytest.raises(ValueError):
        signed_coronal(Matrix([[0, 1], [1, 0]]), [1])


def test_laplacian_coronal_of_regular_graph():
    mg = MarkedSignedGraph.with_canonical_marking(cycle(4))
    triple = signed_coronal(matrices(mg).L, [1] * 4)
    # all-ones is a 0-eigenvector of L, so the coronal is n/x
    assert triple.num == Poly.constant(4)
    assert triple.den == Poly.x()
