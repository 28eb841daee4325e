"""Named verification suites for the rank-one block.

Four suites: catalog (construction facts), adjunctions (triangle identities,
unit/counit behaviour, transpose laws), equivalence (the two-term complexes
are mutually inverse on the derived category), tilting (the longest-element
equivalence switches tiltings with projectives).  A fifth check battery ties
the ungraded numbers computed here to the v=1 specialization of the
Grothendieck-group model for the rank-one Weyl group.
"""

from __future__ import annotations

from ..report import VerificationReport
from .algebra import dual_module, hom_dim, identity_map, socle_dims, top_dims
from .catalog import CATALOG_NAMES
from .functors import RankOneBlock, right_transpose, transpose

# homology of the two equivalences on every catalog entry, as iso classes
EXPECTED_HOMOLOGY = {
    ("star", "Delta_e"): {0: {"Delta_s": 1}},
    ("star", "Delta_s"): {0: {"Delta_s": 1}, 1: {"L_s": 1}},
    ("star", "nabla_e"): {0: {"Delta_s": 1}},
    ("star", "nabla_s"): {0: {"L_e": 1}},
    ("star", "L_e"): {0: {"Delta_s": 1}},
    ("star", "L_s"): {1: {"L_s": 1}},
    ("star", "P_e"): {0: {"P_e": 1}},
    ("star", "P_s"): {0: {"Delta_s": 1}, 1: {"L_s": 1}},
    ("star", "D_e"): {0: {"Delta_s": 1}},
    ("star", "D_s"): {0: {"P_e": 1}},
    ("shriek", "Delta_e"): {0: {"nabla_s": 1}},
    ("shriek", "Delta_s"): {0: {"L_e": 1}},
    ("shriek", "nabla_e"): {0: {"nabla_s": 1}},
    ("shriek", "nabla_s"): {-1: {"L_s": 1}, 0: {"nabla_s": 1}},
    ("shriek", "L_e"): {0: {"nabla_s": 1}},
    ("shriek", "L_s"): {-1: {"L_s": 1}},
    ("shriek", "P_e"): {0: {"P_e": 1}},
    ("shriek", "P_s"): {0: {"L_e": 1}},
    ("shriek", "D_e"): {0: {"nabla_s": 1}},
    ("shriek", "D_s"): {0: {"P_e": 1}},
}

DELTA_FLAGGED = ("Delta_e", "Delta_s", "P_e", "P_s")
NABLA_FLAGGED = ("nabla_e", "nabla_s", "D_e", "D_s")


def _test_modules(ctx: RankOneBlock):
    mods = [ctx.catalog.modules[n] for n in ("L_e", "L_s", "Delta_s", "nabla_s", "P_e")]
    return mods + [ctx.regular, ctx.theta.on_module(ctx.regular)]


def _test_walls(ctx: RankOneBlock):
    from .algebra import Module

    return [Module(ctx.wall, {"w": d}) for d in (1, 2, 3)]


def verify_catalog(ctx: RankOneBlock) -> VerificationReport:
    cat = ctx.catalog
    rep = VerificationReport("block")
    mods = cat.modules

    rep.run(
        "block.catalog_dimensions",
        lambda: (
            mods["P_e"].dimension_vector() == (2, 1)
            and mods["P_s"].dimension_vector() == (1, 1)
            and mods["Delta_s"].dimension_vector() == (1, 1)
            and all(mods[n].dimension_vector() == (1, 0) for n in ("Delta_e", "nabla_e", "L_e", "D_e")),
            "P_e: 3, P_s: 2, Delta_s: 2, antidominants: 1",
        ),
    )
    rep.run(
        "block.catalog_identifications",
        lambda: (
            cat.is_isomorphic(mods["Delta_s"], mods["P_s"])
            and cat.is_isomorphic(mods["D_s"], mods["P_e"])
            and all(cat.is_isomorphic(mods[n], mods["L_e"]) for n in ("Delta_e", "nabla_e", "D_e"))
            and cat.is_isomorphic(dual_module(mods["Delta_s"]), mods["nabla_s"]),
            "Delta_s = P_s, D_s = P_e, Delta_e = nabla_e = D_e = L_e",
        ),
    )
    rep.run(
        "block.catalog_loewy_layers",
        lambda: (
            top_dims(mods["P_e"]) == {"e": 1, "s": 0}
            and socle_dims(mods["P_e"]) == {"e": 1, "s": 0}
            and top_dims(mods["Delta_s"]) == {"e": 0, "s": 1}
            and socle_dims(mods["Delta_s"]) == {"e": 1, "s": 0}
            and top_dims(mods["nabla_s"]) == {"e": 1, "s": 0}
            and socle_dims(mods["nabla_s"]) == {"e": 0, "s": 1},
            "P_e: L_e/L_s/L_e; Delta_s: L_s over L_e; nabla_s: L_e over L_s",
        ),
    )
    rep.run(
        "block.catalog_end_rings",
        lambda: (
            hom_dim(mods["P_e"], mods["P_e"]) == 2
            and hom_dim(mods["P_s"], mods["P_s"]) == 1,
            "dim End(P_e) = 2 (local), dim End(P_s) = 1",
        ),
    )
    rep.run(
        "block.catalog_bgg_reciprocity_v1",
        lambda: (
            all(
                cat.verma_flag_multiplicities(mods[f"P_{x}"])[f"Delta_{y}"]
                == cat.composition_multiplicities(mods[f"Delta_{y}"])[f"L_{x}"]
                for x in ("e", "s")
                for y in ("e", "s")
            ),
            "(P_x : Delta_y) = [Delta_y : L_x]",
        ),
    )
    rep.run(
        "block.theta_on_catalog",
        lambda: (
            ctx.theta.on_module(mods["L_s"]).is_zero()
            and cat.decompose(ctx.theta.on_module(mods["L_e"])) == {"P_e": 1}
            and cat.decompose(ctx.theta.on_module(mods["Delta_s"])) == {"P_e": 1}
            and cat.verma_flag_multiplicities(ctx.theta.on_module(mods["Delta_s"]))
            == {"Delta_e": 1, "Delta_s": 1},
            "theta kills L_s, sends L_e and Delta_s to P_e; Verma factors each once",
        ),
    )
    rep.run(
        "block.ext_bott_rank_one",
        lambda: (
            cat.ext(mods["Delta_e"], mods["L_s"], 3) == [0, 1, 0, 0]
            and cat.ext(mods["Delta_s"], mods["L_s"], 3) == [1, 0, 0, 0],
            "Ext^i(Delta_x, L_w0) is one-dimensional exactly at i = l(x w0)",
        ),
    )
    return rep


def verify_adjunctions(ctx: RankOneBlock) -> VerificationReport:
    rep = VerificationReport("block")
    mods = _test_modules(ctx)
    walls = _test_walls(ctx)
    cat = ctx.catalog

    rep.run(
        "block.triangle_identities",
        lambda: (
            ctx._triangles_hold_adj1(ctx.eps, ctx.eta, mods, walls)
            and ctx._triangles_hold_adj2(ctx.etap, ctx.epsp, mods, walls),
            "both adjunctions, on catalog modules, the regular module and walls",
        ),
    )

    def keylem():
        for m in mods:
            if ctx.pi_star.on_module(m).total_dim and ctx.eps.at(m).is_zero():
                return False, "counit vanishes on a module with nonzero restriction"
            if ctx.pi_star.on_module(m).total_dim and ctx.etap.at(m).is_zero():
                return False, "unit vanishes on a module with nonzero restriction"
        for v_mod in walls:
            if ctx.pi_pull.on_module(v_mod).total_dim and ctx.eta.at(v_mod).is_zero():
                return False, "wall unit vanishes on a nonzero space"
            if ctx.pi_pull.on_module(v_mod).total_dim and ctx.epsp.at(v_mod).is_zero():
                return False, "wall counit vanishes on a nonzero space"
        return True, "unit/counit components are nonzero whenever forced"

    rep.run("block.keylem_nonvanishing", keylem)

    def adjinjective():
        for name in ("Delta_e", "Delta_s"):
            if not ctx.etap.at(cat.modules[name]).is_injective():
                return False, f"unit not injective on {name}"
        for name in ("nabla_e", "nabla_s"):
            if not ctx.eps.at(cat.modules[name]).is_surjective():
                return False, f"counit not surjective on {name}"
        return True, "unit injective on standards, counit surjective on costandards"

    rep.run("block.unit_counit_on_flagged", adjinjective)

    def transposes():
        phis = ctx.wall_hom_basis()
        idp = identity_nat_for(ctx)
        objs = walls
        # identity and zero
        t_id = transpose(identity_nat_pi_star(ctx), ctx.adj1, ctx.adj1)
        if not t_id.equal_on(idp, objs):
            return False, "transpose of the identity is not the identity"
        zero = identity_nat_pi_star(ctx) + (-identity_nat_pi_star(ctx))
        if not transpose(zero, ctx.adj1, ctx.adj1).is_zero_on(objs):
            return False, "transpose of zero is not zero"
        # additivity
        lhs = transpose(phis[0] + phis[1], ctx.adj1, ctx.adj1)
        rhs = transpose(phis[0], ctx.adj1, ctx.adj1) + transpose(phis[1], ctx.adj1, ctx.adj1)
        if not lhs.equal_on(rhs, objs):
            return False, "transpose is not additive"
        # contravariance for composition
        for f in phis:
            for g in phis:
                lhs = transpose(f.then(g), ctx.adj1, ctx.adj1)
                rhs = transpose(g, ctx.adj1, ctx.adj1).then(transpose(f, ctx.adj1, ctx.adj1))
                if not lhs.equal_on(rhs, objs):
                    return False, "transpose does not reverse composition"
        # the two commuting squares
        for phi in phis:
            tphi = transpose(phi, ctx.adj1, ctx.adj1)
            for m in mods:
                sq1_l = ctx.eps.at(m) @ tphi.at(ctx.pi_star.on_module(m))
                sq1_r = ctx.eps.at(m) @ ctx.pi_pull.on_map(phi.at(m))
                if sq1_l != sq1_r:
                    return False, "first transpose square fails"
            for v_mod in walls:
                sq2_l = phi.at(ctx.pi_pull.on_module(v_mod)) @ ctx.eta.at(v_mod)
                sq2_r = ctx.pi_star.on_map(tphi.at(v_mod)) @ ctx.eta.at(v_mod)
                if sq2_l != sq2_r:
                    return False, "second transpose square fails"
        # right transpose inverts the transpose
        for psi in phis:
            back = transpose(right_transpose(psi, ctx.adj2, ctx.adj2), ctx.adj2, ctx.adj2)
            if not back.equal_on(psi, mods):
                return False, "right transpose does not invert the transpose"
        return True, "identity, zero, additivity, composition, squares, inversion"

    rep.run("block.transpose_laws", transposes)
    return rep


def identity_nat_pi_star(ctx: RankOneBlock):
    from .functors import Nat

    return Nat(ctx.pi_star, ctx.pi_star, lambda m: identity_map(ctx.pi_star.on_module(m)))


def identity_nat_for(ctx: RankOneBlock):
    from .functors import Nat

    return Nat(ctx.pi_pull, ctx.pi_pull, lambda v: identity_map(ctx.pi_pull.on_module(v)))


def verify_equivalence(ctx: RankOneBlock) -> VerificationReport:
    rep = VerificationReport("block")
    cat = ctx.catalog
    ts, tsh = ctx.theta_star(), ctx.theta_shriek()

    def dsq():
        for fc in (ts, tsh, ts.compose(tsh), tsh.compose(ts), ts.compose(ts)):
            for name in CATALOG_NAMES:
                if not fc.apply(cat.modules[name]).complex.check_dsq():
                    return False, f"d^2 != 0 on {name}"
        return True, "both complexes and their composites, on the whole catalog"

    rep.run("block.differentials_square_to_zero", dsq)

    def homology_table():
        for (variant, name), expected in EXPECTED_HOMOLOGY.items():
            fc = ts if variant == "star" else tsh
            applied = fc.apply(cat.modules[name]).complex
            got = {}
            for n, dims in applied.homology_dims().items():
                got[n] = cat.decompose(applied.homology(n).module)
            if got != expected:
                return False, f"Theta^{variant}({name}): {got} != {expected}"
        return True, f"{len(EXPECTED_HOMOLOGY)} homology computations"

    rep.run("block.theta_homology_table", homology_table)

    def concentration():
        for name in DELTA_FLAGGED:
            dims = tsh.apply(cat.modules[name]).complex.homology_dims()
            if set(dims) - {0}:
                return False, f"Theta! not concentrated on {name}"
        for name in NABLA_FLAGGED:
            dims = ts.apply(cat.modules[name]).complex.homology_dims()
            if set(dims) - {0}:
                return False, f"Theta* not concentrated on {name}"
        return True, "Theta! on standard-flagged, Theta* on costandard-flagged"

    rep.run("block.concentration_on_flagged", concentration)

    def composite_shape():
        comp = ts.compose(tsh)
        deg0 = comp.words(0)
        ok = sorted(deg0) == sorted(
            [("pi_pull", "pi_star", "pi_pull", "pi_star"), ()]
        )
        return ok, "degree 0 of Theta*Theta! is Id + theta^2"

    rep.run("block.composite_degree_zero_shape", composite_shape)

    def associativity():
        lhs = ts.compose(tsh).compose(ts)
        rhs = ts.compose(tsh.compose(ts))
        mods = _test_modules(ctx)
        if lhs.degrees() != rhs.degrees():
            return False, "degree ranges differ"
        for n in lhs.degrees():
            if lhs.words(n) != rhs.words(n):
                return False, f"entries differ in degree {n}"
            la, ra = lhs.diffs.get(n, {}), rhs.diffs.get(n, {})
            if set(la) != set(ra):
                return False, f"differential support differs in degree {n}"
            for key in la:
                for m in mods:
                    if la[key].at(m) != ra[key].at(m):
                        return False, f"differential entries differ at {key} in degree {n}"
        return True, "(Theta* Theta!) Theta* = Theta* (Theta! Theta*), entrywise"

    rep.run("block.composition_associative", associativity)

    def quasi_isos():
        for name in CATALOG_NAMES:
            m = cat.modules[name]
            ev = ctx.build_ev(m)
            if not ev.is_chain_map():
                return False, f"ev is not a chain map on {name}"
            if not ev.is_quasi_iso():
                return False, f"ev not a quasi-isomorphism on {name}"
            coev = ctx.build_coev(m)
            if not coev.is_chain_map():
                return False, f"coev is not a chain map on {name}"
            if not coev.is_quasi_iso():
                return False, f"coev not a quasi-isomorphism on {name}"
        return True, f"ev and coev on all {len(CATALOG_NAMES)} catalog entries"

    rep.run("block.derived_equivalence_ev_coev", quasi_isos)
    return rep


def verify_tilting(ctx: RankOneBlock) -> VerificationReport:
    rep = VerificationReport("block")
    cat = ctx.catalog
    ts = ctx.theta_star()

    def switch():
        for x, want in (("D_e", "P_s"), ("D_s", "P_e")):
            applied = ts.apply(cat.modules[x]).complex
            dims = applied.homology_dims()
            if set(dims) != {0}:
                return False, f"Theta*({x}) not concentrated in degree 0"
            h = applied.homology(0).module
            if not cat.is_isomorphic(h, cat.modules[want]):
                return False, f"Theta*({x}) is not {want}"
        return True, "Theta*(D_e) = P_s and Theta*(D_s) = P_e"

    rep.run("block.tilting_projective_switch", switch)

    def end_dims():
        pairs = (("P_e", "D_s"), ("P_s", "D_e"))
        for p, d in pairs:
            dp = hom_dim(cat.modules[p], cat.modules[p])
            dd = hom_dim(cat.modules[d], cat.modules[d])
            if dp != dd:
                return False, f"dim End({p}) = {dp} != {dd} = dim End({d})"
        total_p = sum(hom_dim(cat.modules[f"P_{x}"], cat.modules[f"P_{x}"]) for x in "es")
        total_d = sum(hom_dim(cat.modules[f"D_{x}"], cat.modules[f"D_{x}"]) for x in "es")
        return total_p == total_d, f"sum of End dimensions = {total_p}"

    rep.run("block.ringel_end_dimensions", end_dims)
    return rep


def verify_k0_crosscheck(ctx: RankOneBlock) -> VerificationReport:
    """The ungraded numbers here must match the v=1 shadow of the rank-one
    Grothendieck-group model."""
    from ..k0 import BasisKind, K0Block
    from ..weyl import CartanDatum, build_group

    rep = VerificationReport("block")
    cat = ctx.catalog
    blk = K0Block(build_group(CartanDatum("A", 1)))
    g = blk.group
    e, s = g.identity, g.simple(1)
    kinds = {"Delta": BasisKind.Verma, "nabla": BasisKind.DualVerma,
             "L": BasisKind.Simple, "P": BasisKind.Projective, "D": BasisKind.Tilting}
    elts = {"e": e, "s": s}

    def classes():
        for name in CATALOG_NAMES:
            family, which = name.split("_")
            cls = blk.class_of(elts[which], kinds[family])
            flags = cat.verma_flag_multiplicities(cat.modules[name])
            got = {x: n for x, n in ((x, p.eval_at_one()) for x, p in cls.coords().items()) if n}
            want = {k: v for k, v in {e: flags["Delta_e"], s: flags["Delta_s"]}.items() if v}
            if got != want:
                return False, f"{name}: {got} != {want}"
            sims = blk.coords_in_basis(cls, BasisKind.Simple)
            mults = cat.composition_multiplicities(cat.modules[name])
            got_l = {x: n for x, n in ((x, p.eval_at_one()) for x, p in sims.items()) if n}
            want_l = {k: v for k, v in {e: mults["L_e"], s: mults["L_s"]}.items() if v}
            if got_l != want_l:
                return False, f"{name} in simples: {got_l} != {want_l}"
        return True, f"all {len(CATALOG_NAMES)} catalog classes at v=1"

    rep.run("block.k0_classes_match_v1", classes)

    def theta_images():
        for name in CATALOG_NAMES:
            family, which = name.split("_")
            cls = blk.wall_crossing(1, blk.class_of(elts[which], kinds[family]))
            module_image = ctx.theta.on_module(cat.modules[name])
            flags = cat.verma_flag_multiplicities(module_image)
            got = {x: n for x, n in ((x, p.eval_at_one()) for x, p in cls.coords().items()) if n}
            want = {k: v for k, v in {e: flags["Delta_e"], s: flags["Delta_s"]}.items() if v}
            if got != want:
                return False, f"theta({name}): {got} != {want}"
        return True, "wall crossing at v=1 equals the theta images"

    rep.run("block.k0_theta_images_match_v1", theta_images)

    def switch():
        for which, want in (("e", "s"), ("s", "e")):
            lhs = blk.hecke_act(blk.hecke.std(g.w0), blk.class_of(elts[which], BasisKind.Tilting))
            rhs = blk.class_of(elts[want], BasisKind.Projective)
            if lhs != rhs:
                return False, "K0 switch identity fails"
            applied = ctx.theta_star().apply(cat.modules[f"D_{which}"]).complex
            h = applied.homology(0).module
            if not cat.is_isomorphic(h, cat.modules[f"P_{want}"]):
                return False, "categorical switch does not match"
        return True, "H_w0 [T_x] = [P_w0x] matches Theta*(D_x) = P_w0x"

    rep.run("block.k0_tilting_switch_crosscheck", switch)
    return rep


# op-surface aliases
def verify_derived_equivalence(ctx: RankOneBlock) -> VerificationReport:
    return verify_equivalence(ctx)


def verify_tilting_switch(ctx: RankOneBlock) -> VerificationReport:
    return verify_tilting(ctx)


def suite(ctx: RankOneBlock, which: str = "all") -> VerificationReport:
    rep = VerificationReport(f"block-{which}")
    parts = {
        "catalog": (verify_catalog,),
        "adjunctions": (verify_adjunctions,),
        "equivalence": (verify_equivalence,),
        "tilting": (verify_tilting,),
        "all": (
            verify_catalog,
            verify_adjunctions,
            verify_equivalence,
            verify_tilting,
            verify_k0_crosscheck,
        ),
    }
    if which not in parts:
        raise ValueError(f"unknown block suite: {which!r}")
    for fn in parts[which]:
        rep.extend(fn(ctx))
    return rep
