import io

import pytest
from hypothesis import given, settings

from coveralg.lattice import enumerate_ideals
from coveralg.oracle import basic_hilbert_bruteforce
from coveralg.poset import all_natural_posets, antichain, chain
from coveralg.toric import (
    export,
    format_binomial,
    groebner_G,
    groebner_G0,
    is_complete_intersection_initial,
    is_homogeneous,
    standard_monomial_count,
    vanishes_under_substitution,
)
from strategies import natural_posets


def lines(p, which):
    return [format_binomial(b) for b in (groebner_G(p) if which == "G" else groebner_G0(p))]


class TestGroebnerG:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_chain(self, n):
        expected = []
        for j in range(1, n + 1):
            before = ".".join(map(str, range(1, j))) or "0"
            after = ".".join(map(str, range(1, j + 1)))
            expected.append(f"x{j}*u_{before} - y{j}*u_{after}")
        assert lines(chain(n), "G") == expected

    def test_chain1(self):
        assert lines(chain(1), "G") == ["x1*u_0 - y1*u_1"]

    def test_antichain2(self):
        assert "u_1*u_2 - u_1.2*u_0" in lines(antichain(2), "G")


class TestGroebnerG0:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_chain_empty(self, n):
        assert groebner_G0(chain(n)) == []

    def test_antichain2(self):
        assert lines(antichain(2), "G0") == ["u_1*u_2 - u_1.2*u_0"]

    def test_p3(self, p3):
        assert lines(p3, "G0") == ["u_1.2*u_1.3 - u_1.2.3*u_1"]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_count_is_incomparable_pairs(self, n):
        for p in all_natural_posets(n):
            ids = enumerate_ideals(p).ideals
            pairs = sum(
                1 for i, a in enumerate(ids) for b in ids[i + 1:] if a & b not in (a, b)
            )
            assert len(groebner_G0(p)) == pairs
            assert (pairs == 0) == (p == chain(n))


class TestCompleteIntersection:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_chain(self, n):
        assert is_complete_intersection_initial(groebner_G(chain(n)))

    def test_antichain2(self):
        assert not is_complete_intersection_initial(groebner_G(antichain(2)))


@settings(max_examples=40)
@given(natural_posets(max_n=5))
def test_binomials_vanish_and_are_homogeneous(p):
    for b in groebner_G(p) + groebner_G0(p):
        assert is_homogeneous(b)
        assert vanishes_under_substitution(p, b)


@pytest.mark.parametrize("n", range(1, 5))
def test_standard_monomials_are_multichains(n):
    for p in all_natural_posets(n)[:15]:
        L = enumerate_ideals(p)
        G0 = groebner_G0(p)
        for k in range(4):
            assert standard_monomial_count(L, G0, k) == basic_hilbert_bruteforce(p, k)


class TestExport:
    def test_chain1(self):
        text = export(chain(1), groebner_G(chain(1)), "G")
        assert text.splitlines() == ["# G n=1 ideals=2 binomials=1", "x1*u_0 - y1*u_1"]

    def test_header_only(self):
        assert export(chain(3), groebner_G0(chain(3)), "G0") == "# G0 n=3 ideals=4 binomials=0\n"

    def test_p3_and_sink(self, p3):
        buf = io.StringIO()
        text = export(p3, groebner_G0(p3), "G0", buf)
        assert buf.getvalue() == text
        assert text.splitlines()[1] == "u_1.2*u_1.3 - u_1.2.3*u_1"

    def test_deterministic(self, p3):
        assert export(p3, groebner_G(p3), "G") == export(p3, groebner_G(p3), "G")
