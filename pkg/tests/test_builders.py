import numpy as np
import pytest

from pfstab.algebra import PfOperator
from pfstab.builders import (
    QuditCheckMatrix,
    ToricSpec,
    build_clock_chain,
    build_toric,
    code_8_1_3_d3,
    double_code_d6,
    double_to_css,
    embed_qudit_code,
    five_qutrit_code,
)
from pfstab.code import (
    InvalidCodeError,
    analyze,
    codespace_dim,
    distance,
    group_order,
    is_logical,
    l_con,
    logical_basis,
    validate,
)

from oracles import brute_qudit_distance


# -- clock chains -----------------------------------------------------------


@pytest.mark.parametrize("modulus,n", [(2, 2), (2, 3), (3, 2), (3, 4), (5, 2)])
def test_clock_chain_parameters(modulus, n):
    code = build_clock_chain(modulus, n)
    assert validate(code).all_ok
    assert codespace_dim(code) == modulus  # k = 1
    assert distance(code).value == 1
    assert l_con(code).value == 2 * n


def test_clock_chain_generator_support_and_phase():
    code = build_clock_chain(2, 2)
    (g,) = code.generators
    assert g.support() == (2, 3)
    assert g.mu == 1  # the i prefactor of the Majorana pair term
    code3 = build_clock_chain(3, 4)
    assert [g.support() for g in code3.generators] == [(2, 3), (4, 5), (6, 7)]
    assert [g.mu for g in code3.generators] == [0, 0, 0]


def test_clock_chain_end_to_end_logicals():
    code = build_clock_chain(3, 4)
    bare_end = PfOperator.gamma(3, 8, 1)
    assert is_logical(code, bare_end)
    joined = PfOperator.from_factors(3, 8, [(1, -1), (8, 1)])
    assert joined.charge() == 0
    assert is_logical(code, joined)
    assert joined.diameter() == 8


def test_clock_chain_rejects_single_site():
    with pytest.raises(ValueError):
        build_clock_chain(3, 1)


# -- qudit check matrices ----------------------------------------------------


def test_five_qudit_code_is_valid_and_distance_three():
    q = five_qutrit_code()
    assert q.commutes()
    assert q.codespace_dim() == 3
    assert q.distance() == 3
    assert q.distance() == brute_qudit_distance(3, 5, np.array([list(r) for r in q.rows]))


def test_qudit_check_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        QuditCheckMatrix(3, 2, ((1, 0, 0),))


def test_noncommuting_qudit_rows_detected():
    # X on qudit 1 and Z on qudit 1 do not commute.
    q = QuditCheckMatrix(3, 1, ((1, 0), (0, 1)))
    assert not q.commutes()


# -- qudit -> parafermion embedding ------------------------------------------


def test_embed_single_free_qudit():
    q = QuditCheckMatrix(3, 1, ())
    code = embed_qudit_code(q)
    assert code.num_modes == 4
    assert len(code.generators) == 1
    assert group_order(code) == 3
    assert codespace_dim(code) == 3
    z_like = PfOperator.from_factors(3, 4, [(1, -1), (2, 1)])
    x_like = PfOperator.from_factors(3, 4, [(1, -1), (3, 1)])
    assert z_like.commutation_exponent(x_like) == 1  # embedded Weyl pair
    assert z_like.power(3).is_identity() and x_like.power(3).is_identity()
    assert z_like.charge() == 0 and x_like.charge() == 0
    assert is_logical(code, z_like) and is_logical(code, x_like)


def test_embedded_weyl_pairs_commute_across_sites():
    q = QuditCheckMatrix(3, 2, ())
    code = embed_qudit_code(q)
    z1 = PfOperator.from_factors(3, 8, [(1, -1), (2, 1)])
    x2 = PfOperator.from_factors(3, 8, [(5, -1), (7, 1)])
    assert z1.commutation_exponent(x2) == 0
    z2 = PfOperator.from_factors(3, 8, [(5, -1), (6, 1)])
    assert z2.commutation_exponent(x2) == 1
    for g in code.generators:
        assert g.charge() == 0


def test_embed_five_qubit_code_doubles_distance():
    q = five_qutrit_code(2)
    assert q.distance() == 3
    code = embed_qudit_code(q)
    assert code.num_modes == 20
    assert validate(code).all_ok
    assert codespace_dim(code) == 2  # k = 1
    assert distance(code).value == 6


def test_embed_rejects_noncommuting_input():
    q = QuditCheckMatrix(3, 1, ((1, 0), (0, 1)))
    with pytest.raises(InvalidCodeError):
        embed_qudit_code(q)


# -- CSS doubling -------------------------------------------------------------


def test_double_to_css_known_code():
    css = double_to_css(code_8_1_3_d3())
    assert css.num_qudits == 8
    assert css.commutes()
    assert css.codespace_dim() == 9  # k' = 2k = 2
    assert css.distance(max_weight=4) == 2  # regression value; d' is construction-dependent


def test_double_to_css_empty_stabilizer():
    from pfstab.code import PfCode

    empty = PfCode(3, 4, ())
    css = double_to_css(empty)
    assert css.codespace_dim() == 3**4  # k' = 2n


def test_double_to_css_chain_regression():
    css = double_to_css(build_clock_chain(3, 4))
    assert css.num_qudits == 8
    assert css.codespace_dim() == 9
    assert css.distance(max_weight=3) == 1


def test_css_rows_satisfy_commutation_identity():
    css = double_to_css(code_8_1_3_d3())
    rows = np.array([list(r) for r in css.rows], dtype=np.int64)
    nq = css.num_qudits
    u, v = rows[:, :nq], rows[:, nq:]
    assert not ((u @ v.T - v @ u.T) % 3).any()


# -- D = 6 doubling ------------------------------------------------------------


def test_double_d6_generator_set():
    code6 = double_code_d6(code_8_1_3_d3())
    assert code6.modulus == 6
    assert len(code6.generators) == 7
    alphas = [g.alpha for g in code6.generators]
    assert (3, 3, 0, 0, 0, 0, 0, 0) in alphas
    assert (4, 2, 0, 4, 0, 2, 0, 0) in alphas
    assert validate(code6).all_ok


def test_double_d6_encodes_a_qutrit():
    code6 = double_code_d6(code_8_1_3_d3())
    assert group_order(code6) * codespace_dim(code6) == 6**4
    assert codespace_dim(code6) == 3


def test_double_d6_squared_logicals_have_order_three():
    code6 = double_code_d6(code_8_1_3_d3())
    lx = PfOperator(6, 8, 0, tuple((2 * a) % 6 for a in (2, 1, 1, 0, 0, 0, 1, 0)))
    lz = PfOperator(6, 8, 0, tuple((2 * a) % 6 for a in (0, 2, 2, 0, 0, 1, 0, 0)))
    assert is_logical(code6, lx) and is_logical(code6, lz)
    c = lx.commutation_exponent(lz)
    order = 1
    acc = c
    while acc % 6:
        acc = (acc + c) % 6
        order += 1
    assert order == 3


def test_double_d6_rejects_wrong_modulus():
    with pytest.raises(ValueError):
        double_code_d6(build_clock_chain(2, 2))


# -- toric construction ---------------------------------------------------------


def test_toric_square_lattice_parameters():
    toric = build_toric(ToricSpec(2, 1, 2, 2))
    code = toric.code
    assert code.modulus == 4
    assert code.num_modes == 32
    assert validate(code).all_ok
    assert codespace_dim(code) == 16  # k = 2
    assert group_order(code) == 4**14


def test_toric_all_logical_charges_zero_on_square_lattice():
    toric = build_toric(ToricSpec(2, 1, 2, 2))
    charges = {op.charge() for op in logical_basis(toric.code)}
    assert charges == {0}
    for op in toric.logicals.values():
        assert op.charge() == 0


def test_toric_rectangular_lattice_has_parity_violating_logical():
    toric = build_toric(ToricSpec(2, 1, 2, 3))
    assert codespace_dim(toric.code) == 16
    charges = {op.charge() for op in logical_basis(toric.code)}
    assert 2 in charges
    assert toric.logicals["horizontal_z"].charge() == (2 * 2) % 4  # a * p^l
    assert toric.logicals["vertical_z"].charge() == (3 * 2) % 4  # b * p^l


def test_toric_designated_loops_are_logical():
    toric = build_toric(ToricSpec(2, 1, 2, 2))
    for name, op in toric.logicals.items():
        assert is_logical(toric.code, op), name
    hz = toric.logicals["horizontal_z"]
    xv = toric.logicals["vertical_x"]
    assert hz.commutation_exponent(xv) != 0  # conjugate pair
    assert hz.commutation_exponent(toric.logicals["horizontal_x"]) == 0


def test_toric_star_plaquette_overlap_commutation():
    toric = build_toric(ToricSpec(2, 1, 2, 2))
    gens = toric.code.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert gens[i].commutation_exponent(gens[j]) == 0


def test_toric_site_stabilizers_preserve_parity():
    toric = build_toric(ToricSpec(2, 1, 3, 2))
    for g in toric.code.generators:
        assert g.charge() == 0


def test_toric_spec_validation():
    with pytest.raises(ValueError):
        ToricSpec(4, 1, 2, 2)
    with pytest.raises(ValueError):
        ToricSpec(2, 0, 2, 2)
    with pytest.raises(ValueError):
        ToricSpec(2, 1, 1, 2)


def test_toric_layout_present():
    toric = build_toric(ToricSpec(2, 1, 2, 2))
    layout = toric.code.mode_layout
    assert layout is not None and len(layout) == 32
    assert all(len(coord) == 2 for coord in layout.values())
