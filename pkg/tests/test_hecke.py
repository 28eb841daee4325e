import pytest

from heckeo.hecke import HeckeAlgebra, invert_unitriangular
from heckeo.laurent import LaurentPoly, v, v_pow
from heckeo.weyl import CartanDatum, MixedGroups, build_group

ONE = LaurentPoly.one()


def algebra(label):
    return HeckeAlgebra(build_group(CartanDatum.parse(label)))


@pytest.fixture(scope="module")
def a1():
    return algebra("A1")


@pytest.fixture(scope="module")
def a2():
    return algebra("A2")


@pytest.fixture(scope="module")
def b2():
    return algebra("B2")


# -- multiplication ---------------------------------------------------------

def test_unit_and_basis_products(a2):
    g = a2.group
    for x in g.elements():
        h = a2.std(x)
        assert a2.mul(a2.unit(), h) == h
        assert a2.mul(h, a2.unit()) == h
    s1, s2 = a2.gen(1), a2.gen(2)
    assert a2.mul(s1, s2) == a2.std(g.multiply(g.simple(1), g.simple(2)))


def test_quadratic_relation(a1):
    s = a1.gen(1)
    expect = a1.unit() + s * LaurentPoly({-1: 1, 1: -1})
    assert a1.mul(s, s) == expect
    # (H_s + v)(H_s - v^-1) = 0
    lhs = a1.mul(s + a1.unit() * v, s - a1.unit() * v_pow(-1))
    assert lhs.is_zero()


def test_braid_relations_exhaustive(b2):
    g = b2.group
    for x in g.elements():
        for y in g.elements():
            if g.length(g.multiply(x, y)) == g.length(x) + g.length(y):
                assert b2.mul(b2.std(x), b2.std(y)) == b2.std(g.multiply(x, y))


def test_mixed_groups_rejected():
    x, y = algebra("A1"), algebra("A1")
    with pytest.raises(MixedGroups):
        x.mul(x.unit(), y.unit())
    with pytest.raises(MixedGroups):
        x.std(y.group.identity)


# -- bar involution -----------------------------------------------------------

def test_bar_on_generator(a1):
    # d(H_s) = H_s + v - v^-1, from inverting H_s in the quadratic relation
    s = a1.gen(1)
    expect = s + a1.unit() * LaurentPoly({1: 1, -1: -1})
    assert a1.bar(s) == expect
    # and H_s * d(H_s) picks out the unit: H_{s^-1}^-1 really is an inverse
    assert a1.mul(a1.std(a1.group.simple(1)), expect) == a1.unit()


def test_bar_involution_exhaustive(a2):
    g = a2.group
    for x in g.elements():
        h = a2.std(x)
        assert a2.bar(a2.bar(h)) == h


def test_b_and_iota_examples(a2):
    g = a2.group
    assert a2.b_twist(a2.unit() * v) == a2.unit() * (-v_pow(-1))
    s1s2 = g.multiply(g.simple(1), g.simple(2))
    s2s1 = g.multiply(g.simple(2), g.simple(1))
    assert a2.iota(a2.std(s1s2)) == a2.std(s2s1)
    h = a2.std(s1s2) * v + a2.gen(1) * 3
    assert a2.b_twist(a2.b_twist(h)) == h


# -- KL elements ----------------------------------------------------------------

def test_kl_basics(a1):
    g = a1.group
    assert a1.kl_element(g.identity, "C") == a1.unit()
    c_s = a1.kl_element(g.simple(1), "C")
    assert c_s == a1.gen(1) + a1.unit() * v
    # self-duality via the independent bar oracle
    assert a1.bar(c_s) == c_s
    assert a1.kl_element(g.simple(1), "Cprime") == a1.gen(1) - a1.unit() * v_pow(-1)


def test_kl_a2_product_formula(a2):
    g = a2.group
    s1s2 = g.multiply(g.simple(1), g.simple(2))
    c = a2.kl_element(s1s2, "C")
    expect = (
        a2.std(s1s2)
        + a2.gen(1) * v
        + a2.gen(2) * v
        + a2.unit() * v_pow(2)
    )
    assert c == expect
    assert a2.bar(c) == c
    # longest element: all coefficients v^(l(w0)-l(y))
    cw0 = a2.kl_element(g.w0, "C")
    for y, p in cw0.coeffs().items():
        assert p == v_pow(3 - g.length(y))


def test_kl_variant_validation(a1):
    with pytest.raises(ValueError):
        a1.kl_element(a1.group.identity, "Q")


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_kl_oracle_agreement(label):
    alg = algebra(label)
    for x in alg.group.elements():
        assert alg.kl_element(x, "C") == alg.kl_element_by_bar_solver(x)


# -- pairing and dual bases ---------------------------------------------------

def test_pairing_orthonormal(a2):
    g = a2.group
    for x in g.elements():
        for y in g.elements():
            expect = ONE if x == y else LaurentPoly.zero()
            assert a2.pairing(a2.std(x), a2.std(y)) == expect


def test_pairing_examples(a1):
    g = a1.group
    c_s = a1.kl_element(g.simple(1), "C")
    assert a1.pairing(c_s, a1.unit()) == v
    assert a1.pairing(a1.zero(), c_s) == LaurentPoly.zero()


def test_dual_basis_a1(a1):
    g = a1.group
    duals = a1.dual_basis("dual_to_bC")
    assert duals[g.simple(1)] == a1.gen(1)
    assert duals[g.identity] == a1.unit() + a1.gen(1) * v_pow(-1)


def test_dual_basis_defining_property(b2):
    g = b2.group
    for variant, kl_variant in (("dual_to_bC", "Cprime"), ("dual_to_C", "C")):
        duals = b2.dual_basis(variant)
        for x in g.elements():
            assert duals[x].coeff(x) == ONE  # unitriangularity
            for y in g.elements():
                expect = ONE if x == y else LaurentPoly.zero()
                assert b2.pairing(duals[x], b2.kl_element(y, kl_variant)) == expect


def test_dual_basis_unit_coefficient(a2):
    duals = a2.dual_basis("dual_to_bC")
    assert duals[a2.group.identity].coeff(a2.group.identity) == ONE


# -- the H_w0 C_x identity ------------------------------------------------------

def test_hw0_identity_a1_by_hand(a1):
    g = a1.group
    s = g.simple(1)
    duals = a1.dual_basis("dual_to_bC")
    assert a1.mul(a1.std(s), a1.kl_element(g.identity, "C")) == duals[s]
    lhs = a1.mul(a1.std(s), a1.kl_element(s, "C"))
    assert lhs == a1.unit() + a1.gen(1) * v_pow(-1)
    assert lhs == duals[g.identity]


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_hw0_identity_reports_pass(label):
    rep = algebra(label).verify_hw0_identity()
    assert rep.passed, rep.failures()


# -- involution interplay --------------------------------------------------------

def test_involutions_commute(a2):
    g = a2.group
    for x in g.elements():
        h = a2.std(x) * (v + 2)
        assert a2.bar(a2.b_twist(h)) == a2.b_twist(a2.bar(h))
        assert a2.bar(a2.iota(h)) == a2.iota(a2.bar(h))
        assert a2.b_twist(a2.iota(h)) == a2.iota(a2.b_twist(h))


def test_suite_passes(a2):
    rep = a2.suite()
    assert rep.passed, [c.name for c in rep.failures()]


# -- unitriangular inversion -----------------------------------------------------

def test_invert_unitriangular_roundtrip():
    cols = [
        {0: ONE},
        {0: v + 1, 1: ONE},
        {0: v_pow(2), 1: -v, 2: ONE},
    ]
    inv = invert_unitriangular(cols, 3)
    # multiply back: inverse rows times original columns
    for i in range(3):
        for j in range(3):
            s = LaurentPoly.zero()
            for k, p in inv[i].items():
                q = cols[j].get(k)
                if q is not None:
                    s = s + p * q
            assert s == (ONE if i == j else LaurentPoly.zero())


def test_invert_unitriangular_rejects_bad_matrix():
    with pytest.raises(ValueError):
        invert_unitriangular([{0: v}], 1)
    with pytest.raises(ValueError):
        invert_unitriangular([{0: ONE, 1: ONE}, {1: ONE}], 2)


def test_bar_table_is_inverse_of_standard_basis(a2, b2):
    # d(H_x) = H_{x^-1}^-1, so H_{x^-1} * d(H_x) must be the unit
    for alg in (a2, b2):
        g = alg.group
        for x in g.elements():
            prod = alg.mul(alg.std(g.inverse(x)), alg.bar(alg.std(x)))
            assert prod == alg.unit(), g.name(x)


def test_dihedral_kl_coefficients_are_monomials():
    # in the dihedral types every KL coefficient is a single power of v
    for label in ("B2", "G2"):
        alg = algebra(label)
        g = alg.group
        for x in g.elements():
            for y, p in alg.kl_element(x, "C").coeffs().items():
                assert p == v_pow(g.length(x) - g.length(y)), (label, y, x)


def test_a3_nontrivial_kl_values_match_literature():
    # the symmetric group on four letters has exactly four Bruhat pairs with
    # a KL polynomial 1 + q on each side of the longest-element symmetry;
    # in the v-normalization that reads v^(l(x)-l(y)) + v^(l(x)-l(y)-2)
    alg = algebra("A3")
    g = alg.group
    nontrivial = {}
    for x in g.elements():
        for y, p in alg.kl_element(x, "C").coeffs().items():
            if len(list(p.items())) > 1:
                nontrivial[(g.name(y), g.name(x))] = p
    assert nontrivial == {
        ("e", "2.1.3.2"): v_pow(2) + v_pow(4),
        ("2", "2.1.3.2"): v_pow(1) + v_pow(3),
        ("e", "1.2.3.2.1"): v_pow(3) + v_pow(5),
        ("1", "1.2.3.2.1"): v_pow(2) + v_pow(4),
        ("3", "1.2.3.2.1"): v_pow(2) + v_pow(4),
        ("1.3", "1.2.3.2.1"): v_pow(1) + v_pow(3),
    }
