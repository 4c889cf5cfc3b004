import pytest

from crystal_kit.core import CartanData, Element, IntegralityError, classify_f, in_V, z_vector
from crystal_kit.fixtures import golden_fixture
from crystal_kit.g2 import (
    G2Crystal,
    g2_e,
    g2_eps,
    g2_f,
    g2_phi,
    g2_weight,
    similarity_check,
    verify_similarity,
)
from crystal_kit.hat_d4 import hat_f
from crystal_kit.perfectness import level_of

BOX = golden_fixture(2).by_label()
PHI = BOX["phi"]


def test_f_examples():
    assert g2_f(0, PHI, 1) == BOX["1"]
    assert g2_f(0, BOX["9"], 1) == BOX["3"]
    assert g2_f(2, BOX["2"], 1) == BOX["3"]
    assert g2_f(0, BOX["12"], 1) == PHI


def test_e_examples():
    assert g2_e(0, BOX["3"], 1) == BOX["9"]
    assert g2_e(1, BOX["2"], 1) == BOX["1"]
    assert g2_e(2, PHI, 1) is None


def test_special_f0_branches():
    # (F4) with z4 = 2/3 (box 9) and z4 = 1/3 (box 10), and the (E3) mirrors
    assert z_vector(BOX["9"]).z4 == 2 and classify_f(z_vector(BOX["9"])) == 4
    assert z_vector(BOX["10"]).z4 == 1 and classify_f(z_vector(BOX["10"])) == 4
    # the generic (F4) step would send box 10 to (0,1,0,-4/3,2/3,0)
    assert g2_f(0, BOX["10"], 1) == BOX["4"]
    assert g2_e(0, BOX["4"], 1) == BOX["10"]
    assert g2_f(0, BOX["48"], 2) == BOX["42"]
    assert g2_e(0, BOX["31"], 2) == BOX["37"]


def test_hat_path_through_special_branch():
    b = BOX["9"]
    path = [b, hat_f(0, b, 3), hat_f(0, hat_f(0, b, 3), 3)]
    assert [classify_f(z_vector(x)) for x in path] == [4, 4, 3]


def test_statistic_examples():
    assert g2_phi(0, PHI, 1) == 1
    assert g2_eps(0, PHI, 1) == 1
    assert (g2_phi(2, BOX["2"], 1), g2_eps(2, BOX["2"], 1)) == (3, 0)
    assert (g2_eps(0, BOX["12"], 1), g2_phi(0, BOX["12"], 1)) == (0, 2)


def test_weight_examples():
    assert g2_weight(PHI, 1) == (0, 0, 0)
    assert g2_weight(BOX["1"], 1) == (-2, 1, 0)


@pytest.mark.parametrize("l", [1, 2])
def test_weights_are_level_zero(l):
    for b in G2Crystal(l).elements():
        assert level_of(g2_weight(b, l)) == 0


def test_fractional_statistic_is_an_error():
    # not in V_1: x1 = 1/3
    with pytest.raises(IntegralityError):
        g2_phi(1, Element(1, 0, 0, 0, 0, 0), 1)


def test_similarity_examples():
    for b in G2Crystal(1).elements():
        assert similarity_check(2, b, 1)
    assert similarity_check(0, BOX["9"], 1)


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_similarity_sweep(l):
    assert verify_similarity(l).passed


def _string(op, i, b, l):
    n = 0
    while (b := op(i, b, l)) is not None:
        n += 1
    return n


@pytest.mark.parametrize("l", [1, 2, 3])
def test_axioms_and_closure(l):
    A = CartanData.G2_1
    for b in G2Crystal(l).elements():
        for i in range(3):
            fb, eb = g2_f(i, b, l), g2_e(i, b, l)
            for x in (fb, eb):
                assert x is None or in_V(x, l)
            assert g2_eps(i, b, l) == _string(g2_e, i, b, l)
            assert g2_phi(i, b, l) == _string(g2_f, i, b, l)
            if eb is not None:
                assert g2_f(i, eb, l) == b
            if fb is None:
                continue
            assert g2_e(i, fb, l) == b
            assert g2_eps(i, fb, l) == g2_eps(i, b, l) + 1
            assert g2_phi(i, fb, l) == g2_phi(i, b, l) - 1
            before, after = g2_weight(b, l), g2_weight(fb, l)
            assert all(before[j] - after[j] == A[j][i] for j in range(3))
