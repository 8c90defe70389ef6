from fractions import Fraction as Fr

import pytest

from wakimoto import rootdata
from wakimoto.errors import DimensionError, InvalidForm, InvalidRank
from wakimoto.rootdata import (Root, Weight, all_weyl_elements,
                               build_root_system, dot_action, form, pairing,
                               perm_compose, perm_from_word, rho,
                               simple_reflection, theta, weight_inner,
                               weyl_act, weyl_act_root)


def test_basic_counts():
    for n in (2, 3, 4, 5):
        rs = build_root_system(n)
        assert rs.rank == n - 1
        assert len(rs.positive_roots) == n * (n - 1) // 2
        assert rs.h == rs.h_dual == n


def test_positive_root_order_sl3():
    rs = build_root_system(3)
    assert [a.coeffs for a in rs.positive_roots] == [(0, 1), (1, 0), (1, 1)]
    assert rs.simple_indices == [1, 0]


def test_theta_is_highest():
    for n in (2, 3, 4):
        rs = build_root_system(n)
        th = theta(rs)
        assert th.coeffs == (1,) * rs.rank
        assert all(th.height >= a.height for a in rs.positive_roots)


def test_invalid_rank():
    with pytest.raises(InvalidRank):
        build_root_system(1)


def test_pairing_fundamental():
    rs = build_root_system(3)
    # <omega_i, alpha_j^vee> = delta_ij
    for i in range(rs.rank):
        w = Weight(tuple(1 if t == i else 0 for t in range(rs.rank)))
        for j, a in enumerate(rs.simple_roots):
            assert pairing(rs, w, a) == (1 if i == j else 0)


def test_pairing_rank_mismatch():
    rs = build_root_system(3)
    with pytest.raises(DimensionError):
        pairing(rs, Weight((1,)), rs.simple_roots[0])


def test_rho_theta_pairing():
    for n in (2, 3, 4, 5):
        rs = build_root_system(n)
        assert pairing(rs, rho(rs), theta(rs)) == n - 1


def test_weight_inner_norms():
    for n in (2, 3, 4):
        rs = build_root_system(n)
        for a in rs.positive_roots:
            w = rs.root_to_weight(a)
            assert weight_inner(rs, w, w) == 2


def test_form_sl2_anchors():
    rs = build_root_system(2)
    assert form(rs, "kappa0").h(0, 0) == 2
    assert form(rs, "kappa_g").h(0, 0) == 8
    assert form(rs, "kappa_c").h(0, 0) == -4
    assert form(rs, "kappa_c_b").h(0, 0) == -4
    assert form(rs, "k*kappa0", Fr(1, 2)).h(0, 0) == 1


def test_form_gram_matches_cartan():
    rs = build_root_system(3)
    f = form(rs, "kappa0")
    assert f.gram_h == [[Fr(2), Fr(-1)], [Fr(-1), Fr(2)]]
    # gram_hstar is the inverse Cartan matrix
    assert f.gram_hstar == [[Fr(2, 3), Fr(1, 3)], [Fr(1, 3), Fr(2, 3)]]


def test_form_unknown_label():
    rs = build_root_system(2)
    with pytest.raises(InvalidForm):
        form(rs, "nope")
    with pytest.raises(InvalidForm):
        form(rs, "k*kappa0")


def test_kappa_c_b_vs_sum_over_roots():
    # kappa_c^b(h,h') = -sum_{gamma>0} gamma(h)gamma(h')
    for n in (2, 3, 4):
        rs = build_root_system(n)
        f = form(rs, "kappa_c_b")
        for i in range(rs.rank):
            for j in range(rs.rank):
                s = sum(rs.root_to_weight(g).coords[i]
                        * rs.root_to_weight(g).coords[j]
                        for g in rs.positive_roots)
                assert f.h(i, j) == -s


def test_weyl_group_size():
    import math
    for n in (2, 3, 4):
        rs = build_root_system(n)
        assert len(all_weyl_elements(rs)) == math.factorial(n)


def test_simple_reflection_on_simple_root():
    rs = build_root_system(3)
    for i in range(rs.rank):
        s = simple_reflection(rs, i)
        img = weyl_act_root(rs, s, rs.simple_roots[i])
        assert img.coeffs == tuple(-c for c in rs.simple_roots[i].coeffs)


def test_braid_relation_sl3():
    rs = build_root_system(3)
    s0, s1 = simple_reflection(rs, 0), simple_reflection(rs, 1)
    lhs = perm_compose(s0, perm_compose(s1, s0))
    rhs = perm_compose(s1, perm_compose(s0, s1))
    assert lhs == rhs


def test_weyl_act_preserves_inner():
    rs = build_root_system(3)
    lam = Weight((Fr(1, 2), Fr(3)))
    mu = Weight((Fr(-2), Fr(1, 5)))
    for w in all_weyl_elements(rs):
        assert weight_inner(rs, weyl_act(rs, w, lam), weyl_act(rs, w, mu)) \
            == weight_inner(rs, lam, mu)


def test_dot_action_word_and_perm_agree():
    rs = build_root_system(3)
    lam = Weight((Fr(2, 3), Fr(-1)))
    word = [0, 1, 0]
    perm = perm_from_word(rs, word)
    assert dot_action(rs, word, lam) == dot_action(rs, perm, lam)


def test_dot_action_fixed_point():
    # -rho is the fixed point of the dot action
    rs = build_root_system(3)
    mr = Weight((-1, -1))
    for w in all_weyl_elements(rs):
        assert dot_action(rs, w, mr) == mr


def test_eps_round_trip():
    rs = build_root_system(4)
    lam = Weight((Fr(1, 3), Fr(-2), Fr(7, 5)))
    assert rs.eps_to_weight(rs.weight_to_eps(lam)) == lam
    assert sum(rs.weight_to_eps(lam)) == 0


def test_root_pair():
    rs = build_root_system(4)
    for a in rs.positive_roots:
        i, j = rs.root_pair(a)
        assert a.coeffs == tuple(1 if i <= t < j else 0 for t in range(rs.rank))


def test_frac_str():
    assert rootdata.frac_str(Fr(-1, 2)) == "-1/2"
    assert rootdata.frac_str(Fr(4, 2)) == "2"


def test_root_label():
    rs = build_root_system(3)
    assert rootdata.root_label(rs.positive_roots[2]) == "a1+a2"
    assert rootdata.root_label(Root((1, 0))) == "a1"


def test_is_dominant_for():
    rs = build_root_system(3)
    assert rootdata.is_dominant_for(rs, {1, 2}, Weight((0, 3)))
    assert not rootdata.is_dominant_for(rs, {1}, Weight((Fr(-1, 2), 0)))
