from fractions import Fraction

import pytest

from heckeo.block import (
    BlockConstructionError,
    Module,
    build_rank_one,
    dual_module,
    hom_dim,
    rank_one_algebra,
)
from heckeo.block.algebra import (
    cokernel,
    direct_sum,
    hom_basis,
    identity_map,
    kernel,
    socle_dims,
    top_dims,
    zero_map,
)
from heckeo.block.catalog import CATALOG_NAMES
from heckeo.block.checks import (
    suite,
    verify_adjunctions,
    verify_catalog,
    verify_equivalence,
    verify_k0_crosscheck,
    verify_tilting,
)
from heckeo.block.functors import right_transpose, transpose
from heckeo.block import linalg


@pytest.fixture(scope="module")
def ctx():
    return build_rank_one()


# -- algebra and module basics ---------------------------------------------------

def test_algebra_multiplication_table():
    alg = rank_one_algebra()
    assert alg.mult("a", "b") is None          # the relation
    assert alg.mult("b", "a") == "ba"
    assert alg.mult("ba", "ba") is None
    assert alg.mult("1_s", "a") == "a"
    assert alg.mult("a", "1_e") == "a"
    assert alg.mult("a", "1_s") is None
    assert alg.mult("1_e", "b") == "b"


def test_module_relation_enforced():
    alg = rank_one_algebra()
    with pytest.raises(BlockConstructionError):
        Module(alg, {"e": 1, "s": 1}, {"a": [[1]], "b": [[1]]})


def test_catalog_composition_series(ctx):
    cat = ctx.catalog
    assert cat.modules["Delta_s"].total_dim == 2
    assert cat.composition_multiplicities(cat.modules["Delta_s"]) == {"L_e": 1, "L_s": 1}
    assert cat.modules["P_e"].total_dim == 3
    assert cat.composition_multiplicities(cat.modules["P_e"]) == {"L_e": 2, "L_s": 1}
    # the antidominant standard module is simple
    assert cat.is_isomorphic(cat.modules["Delta_e"], cat.modules["L_e"])


def test_duality_on_catalog(ctx):
    cat = ctx.catalog
    for name in ("L_e", "L_s", "P_e", "D_s", "D_e"):
        assert cat.is_isomorphic(dual_module(cat.modules[name]), cat.modules[name])
    assert cat.is_isomorphic(dual_module(cat.modules["Delta_s"]), cat.modules["nabla_s"])
    assert cat.is_isomorphic(dual_module(cat.modules["nabla_s"]), cat.modules["Delta_s"])


def test_hom_dims_match_loewy_structure(ctx):
    cat = ctx.catalog
    m = cat.modules
    assert hom_dim(m["Delta_s"], m["nabla_s"]) == 1
    assert hom_dim(m["nabla_s"], m["Delta_s"]) == 1
    assert hom_dim(m["L_e"], m["P_e"]) == 1
    assert hom_dim(m["P_e"], m["L_s"]) == 0
    assert hom_dim(m["P_e"], m["L_e"]) == 1


def test_kernel_cokernel_roundtrip(ctx):
    cat = ctx.catalog
    cover = None
    # the projective cover P_e -> Delta_e has kernel Delta_s
    for f in hom_basis(cat.modules["P_e"], cat.modules["Delta_e"]):
        if f.is_surjective():
            cover = f
    assert cover is not None
    ker, incl = kernel(cover)
    assert cat.is_isomorphic(ker, cat.modules["Delta_s"])
    assert (cover @ incl).is_zero()
    coker, proj = cokernel(incl)
    assert cat.is_isomorphic(coker, cat.modules["Delta_e"])


def test_decompose_direct_sums(ctx):
    cat = ctx.catalog
    total, injs, projs = direct_sum([cat.modules["Delta_s"], cat.modules["L_e"]])
    assert cat.decompose(total) == {"Delta_s": 1, "L_e": 1}
    assert (projs[0] @ injs[0]) == identity_map(cat.modules["Delta_s"])
    assert (projs[1] @ injs[0]).is_zero()


def test_ext_computations(ctx):
    cat = ctx.catalog
    m = cat.modules
    assert cat.ext(m["Delta_e"], m["L_s"], 3) == [0, 1, 0, 0]
    assert cat.ext(m["Delta_s"], m["L_s"], 3) == [1, 0, 0, 0]
    # projectives have no higher Ext
    assert cat.ext(m["P_e"], m["L_e"], 2) == [1, 0, 0]
    # self-extensions of the simples detect the quiver arrows
    assert cat.ext(m["L_e"], m["L_e"], 2)[0] == 1
    assert cat.ext(m["L_e"], m["L_s"], 1) == [0, 1]
    assert cat.ext(m["L_s"], m["L_e"], 1) == [0, 1]


# -- translation functors ----------------------------------------------------------

def test_translation_images(ctx):
    cat = ctx.catalog
    assert ctx.translation(cat.modules["L_s"], "to_wall").total_dim == 0
    assert ctx.translation(cat.modules["P_e"], "to_wall").total_dim == 2
    off = ctx.translation(Module(ctx.wall, {"w": 1}), "off_wall")
    assert cat.is_isomorphic(off, cat.modules["P_e"])
    with pytest.raises(ValueError):
        ctx.translation(cat.modules["L_e"], "sideways")
    assert ctx.theta.on_module(cat.modules["L_s"]).is_zero()


def test_functor_words_compose(ctx):
    assert ctx.theta.word == ("pi_pull", "pi_star")
    t2 = ctx.theta.compose(ctx.theta)
    m = ctx.catalog.modules["L_e"]
    assert t2.on_module(m).dimension_vector() == (4, 2)
    with pytest.raises(BlockConstructionError):
        ctx.pi_star.compose(ctx.pi_star)


def test_identity_complex_is_a_unit(ctx):
    from heckeo.block.functors import compose_functor_complexes

    ts = ctx.theta_complex("star")
    for composed in (
        compose_functor_complexes(ctx.identity_complex(), ts),
        compose_functor_complexes(ts, ctx.identity_complex()),
    ):
        assert composed.degrees() == ts.degrees()
        for n in ts.degrees():
            assert composed.words(n) == ts.words(n)
        for m in _sample_mods(ctx):
            for key, nat in ts.diffs[0].items():
                assert composed.diffs[0][key].at(m) == nat.at(m)
    with pytest.raises(ValueError):
        ctx.theta_complex("dagger")


def _sample_mods(ctx):
    return [ctx.catalog.modules[n] for n in ("P_e", "Delta_s", "L_s")] + [ctx.regular]


# -- adjunctions ------------------------------------------------------------------

def test_adjunction_units_frozen(ctx):
    cat = ctx.catalog
    # counit on Delta_e is the projective cover map (surjective)
    eps_de = ctx.eps.at(cat.modules["Delta_e"])
    assert eps_de.is_surjective()
    # unit is injective on the standard modules
    assert ctx.etap.at(cat.modules["Delta_s"]).is_injective()
    assert ctx.etap.at(cat.modules["Delta_e"]).is_injective()
    # triangle composite on P_s is the identity
    ps = cat.modules["P_s"]
    v = ctx.pi_star.on_module(ps)
    tri = ctx.pi_star.on_map(ctx.eps.at(ps)) @ ctx.eta.at(v)
    assert tri == identity_map(v)


def test_transpose_laws_report(ctx):
    rep = verify_adjunctions(ctx)
    assert rep.passed, [(c.name, c.detail) for c in rep.failures()]


def test_right_transpose_roundtrip(ctx):
    phis = ctx.wall_hom_basis()
    mods = [ctx.catalog.modules[n] for n in ("P_e", "Delta_s", "L_e")]
    for psi in phis:
        back = transpose(right_transpose(psi, ctx.adj2, ctx.adj2), ctx.adj2, ctx.adj2)
        assert back.equal_on(psi, mods)


# -- complexes ----------------------------------------------------------------------

def test_theta_star_on_standards(ctx):
    cat = ctx.catalog
    applied = ctx.theta_star().apply(cat.modules["Delta_e"]).complex
    assert applied.check_dsq()
    dims = applied.homology_dims()
    assert set(dims) == {0}
    assert cat.is_isomorphic(applied.homology(0).module, cat.modules["Delta_s"])


def test_theta_shriek_shifts_dominant_simple(ctx):
    cat = ctx.catalog
    applied = ctx.theta_shriek().apply(cat.modules["L_s"]).complex
    assert applied.homology_dims() == {-1: {"e": 0, "s": 1}}


def test_apply_to_chain_complex(ctx):
    # applying to a two-term complex must agree degreewise with d^2 = 0
    cat = ctx.catalog
    from heckeo.block.functors import ChainComplex

    incl = None
    for f in hom_basis(cat.modules["Delta_s"], cat.modules["P_e"]):
        if f.is_injective():
            incl = f
    cc = ChainComplex(ctx.algebra, {0: cat.modules["Delta_s"], 1: cat.modules["P_e"]}, {0: incl})
    out = ctx.theta_star().apply(cc).complex
    assert out.check_dsq()
    assert sorted(out.entries) == [0, 1, 2]


def test_ev_coev_reports(ctx):
    rep = verify_equivalence(ctx)
    assert rep.passed, [(c.name, c.detail) for c in rep.failures()]


def test_tilting_reports(ctx):
    rep = verify_tilting(ctx)
    assert rep.passed, [(c.name, c.detail) for c in rep.failures()]


def test_k0_crosscheck_reports(ctx):
    rep = verify_k0_crosscheck(ctx)
    assert rep.passed, [(c.name, c.detail) for c in rep.failures()]


def test_full_block_suite(ctx):
    rep = suite(ctx, "all")
    assert rep.passed
    assert len(rep.checks) >= 15
    rep2 = verify_catalog(ctx)
    assert rep2.passed


def test_suite_selector_validates(ctx):
    with pytest.raises(ValueError):
        suite(ctx, "bogus")


# -- exact linear algebra ------------------------------------------------------------

def test_linalg_basics():
    a = linalg.mat([[1, 2], [3, 4]])
    assert linalg.rank(a) == 2
    inv = linalg.inverse(a)
    assert linalg.mat_eq(linalg.mmul(a, inv), linalg.eye(2))
    n = linalg.nullspace_basis(linalg.mat([[1, 1]]))
    assert (n.nrows, n.ncols) == (2, 1)
    assert n[0][0] + n[1][0] == 0
    with pytest.raises(ValueError):
        linalg.inverse(linalg.mat([[1, 2], [2, 4]]))


def test_linalg_degenerate_shapes():
    z = linalg.zeros(0, 3)
    assert (z.nrows, z.ncols) == (0, 3)
    prod = linalg.mmul(linalg.zeros(2, 0), linalg.zeros(0, 5))
    assert (prod.nrows, prod.ncols) == (2, 5)
    assert linalg.is_zero_mat(prod)
    assert linalg.rank(z) == 0
    k = linalg.kron(linalg.zeros(1, 0), linalg.eye(3))
    assert (k.nrows, k.ncols) == (3, 0)


def test_solve_exactness():
    a = linalg.mat([[2, 0], [0, 3]])
    b = linalg.mat([[1], [1]])
    x = linalg.solve(a, b)
    assert x[0][0] == Fraction(1, 2) and x[1][0] == Fraction(1, 3)
    assert linalg.solve(linalg.mat([[1], [1]]), linalg.mat([[1], [2]])) is None
