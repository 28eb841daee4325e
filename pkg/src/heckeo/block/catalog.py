"""The catalog of named modules in the rank-one block, with the construction
battery that pins the algebra presentation.

Catalog entries (iso classes in parentheses):

    L_e, L_s          the two simples
    Delta_e (= L_e)   standard modules;  Delta_s has head L_s, socle L_e
    nabla_e, nabla_s  costandard modules, the duals of the standards
    P_e, P_s (= Delta_s)  indecomposable projectives, dims 3 and 2
    D_e (= L_e), D_s (= P_e)  indecomposable tiltings

Nothing about this dictionary is taken on faith: `build_catalog` recomputes
dimensions, Loewy layers, endomorphism rings, self-duality of tiltings and
ungraded BGG reciprocity, and raises BlockConstructionError on any mismatch.

Module isomorphy is decided by Krull-Schmidt bookkeeping: the matrix
G[i][j] = dim Hom(I_i, I_j) over the five indecomposables is invertible, so
hom counts against them determine the multiset of summands of any module.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import (
    BlockConstructionError,
    Module,
    PathAlgebra,
    direct_sum,
    dual_module,
    ext_dims,
    hom_dim,
    projective,
    rank_one_algebra,
    socle_dims,
    top_dims,
    wall_algebra,
)

CATALOG_NAMES = (
    "Delta_e", "Delta_s", "nabla_e", "nabla_s",
    "L_e", "L_s", "P_e", "P_s", "D_e", "D_s",
)

INDECOMPOSABLES = ("L_e", "L_s", "Delta_s", "nabla_s", "P_e")


class Catalog:
    """The built rank-one block: algebra, wall, named modules, iso tester."""

    def __init__(self):
        self.algebra = rank_one_algebra()
        self.wall = wall_algebra()
        alg = self.algebra

        p_e, self.pe_paths = projective(alg, "e")
        p_s, self.ps_paths = projective(alg, "s")
        self.projectives = {"e": (p_e, self.pe_paths), "s": (p_s, self.ps_paths)}

        l_e = Module(alg, {"e": 1})
        l_s = Module(alg, {"s": 1})
        delta_s = Module(alg, {"e": 1, "s": 1}, {"a": [[0]], "b": [[1]]})
        nabla_s = dual_module(delta_s)

        self.modules: dict[str, Module] = {
            "L_e": l_e,
            "L_s": l_s,
            "Delta_e": Module(alg, {"e": 1}),
            "Delta_s": delta_s,
            "nabla_e": Module(alg, {"e": 1}),
            "nabla_s": nabla_s,
            "P_e": p_e,
            "P_s": p_s,
            "D_e": Module(alg, {"e": 1}),
            "D_s": p_e,
        }

        self._indec = [l_e, l_s, delta_s, nabla_s, p_e]
        gram = linalg.from_rows(
            [[Fraction(hom_dim(x, y)) for y in self._indec] for x in self._indec],
            len(self._indec),
        )
        inv = linalg.solve(gram, linalg.eye(len(self._indec)))
        if inv is None or linalg.rank(gram) != len(self._indec):
            raise BlockConstructionError("hom-count Gram matrix is singular")
        self._gram_inv = inv
        self._battery()

    # -- decomposition and isomorphy ---------------------------------------

    def decompose(self, m: Module) -> dict[str, int]:
        """Multiplicities of the five indecomposables in m."""
        counts = linalg.col_vec([Fraction(hom_dim(i, m)) for i in self._indec])
        mults = linalg.mmul(self._gram_inv, counts)
        out = {}
        for name, row in zip(INDECOMPOSABLES, mults.rows):
            x = row[0]
            if x.denominator != 1 or x < 0:
                raise BlockConstructionError(f"non-integral decomposition of {m}")
            if x:
                out[name] = int(x)
        # dimension cross-check
        for v in self.algebra.vertices:
            total = sum(
                cnt * self.modules_by_indec(name).dims[v] for name, cnt in out.items()
            )
            if total != m.dims[v]:
                raise BlockConstructionError("decomposition does not add up")
        return out

    def modules_by_indec(self, name: str) -> Module:
        return {
            "L_e": self.modules["L_e"],
            "L_s": self.modules["L_s"],
            "Delta_s": self.modules["Delta_s"],
            "nabla_s": self.modules["nabla_s"],
            "P_e": self.modules["P_e"],
        }[name]

    def iso_class(self, m: Module) -> dict[str, int]:
        return self.decompose(m)

    def is_isomorphic(self, m: Module, n: Module) -> bool:
        return self.decompose(m) == self.decompose(n)

    def composition_multiplicities(self, m: Module) -> dict[str, int]:
        return {"L_e": m.dims["e"], "L_s": m.dims["s"]}

    def verma_flag_multiplicities(self, m: Module) -> dict[str, int]:
        """Multiplicities of [Delta_e], [Delta_s] in the class of m."""
        return {"Delta_e": m.dims["e"] - m.dims["s"], "Delta_s": m.dims["s"]}

    def ext(self, m: Module, n: Module, imax: int) -> list[int]:
        return ext_dims(m, n, imax, self.projectives)

    # -- construction battery ---------------------------------------------

    def _battery(self) -> None:
        alg = self.algebra
        mods = self.modules

        def need(cond: bool, what: str) -> None:
            if not cond:
                raise BlockConstructionError(f"construction self-check failed: {what}")

        # algebra sanity: associativity and the defining relation
        for p in alg.basis:
            for q in alg.basis:
                for r in alg.basis:
                    pq = alg.mult(p, q)
                    qr = alg.mult(q, r)
                    left = alg.mult(pq, r) if pq else None
                    right = alg.mult(p, qr) if qr else None
                    need(left == right, f"associativity at ({p},{q},{r})")
        need(alg.mult("a", "b") is None, "relation ab = 0")
        need(alg.mult("b", "a") == "ba", "ba survives")

        # projective dimensions and endomorphism rings
        need(mods["P_e"].dimension_vector() == (2, 1), "P_e is 3-dimensional")
        need(mods["P_s"].dimension_vector() == (1, 1), "P_s is 2-dimensional")
        need(hom_dim(mods["P_e"], mods["P_e"]) == 2, "End(P_e) is 2-dimensional")
        need(hom_dim(mods["P_s"], mods["P_s"]) == 1, "End(P_s) is 1-dimensional")

        # Loewy structure: P_e has layers L_e / L_s / L_e, P_s = Delta_s
        need(top_dims(mods["P_e"]) == {"e": 1, "s": 0}, "top P_e = L_e")
        need(socle_dims(mods["P_e"]) == {"e": 1, "s": 0}, "socle P_e = L_e")
        need(top_dims(mods["Delta_s"]) == {"e": 0, "s": 1}, "head Delta_s = L_s")
        need(socle_dims(mods["Delta_s"]) == {"e": 1, "s": 0}, "socle Delta_s = L_e")
        need(self.is_isomorphic(mods["P_s"], mods["Delta_s"]), "Delta_s = P_s")

        # duality: simples fixed, standard <-> costandard, tilting self-dual
        for x in ("L_e", "L_s"):
            need(self.is_isomorphic(dual_module(mods[x]), mods[x]), f"{x} self-dual")
        need(self.is_isomorphic(dual_module(mods["Delta_s"]), mods["nabla_s"]),
             "dual of Delta_s is nabla_s")
        need(self.is_isomorphic(dual_module(mods["D_s"]), mods["D_s"]), "D_s self-dual")
        need(top_dims(mods["nabla_s"]) == {"e": 1, "s": 0}, "head nabla_s = L_e")
        need(socle_dims(mods["nabla_s"]) == {"e": 0, "s": 1}, "socle nabla_s = L_s")

        # antidominant degeneracies
        for x in ("Delta_e", "nabla_e", "D_e"):
            need(self.is_isomorphic(mods[x], mods["L_e"]), f"{x} = L_e")

        # composition series facts used downstream
        need(self.composition_multiplicities(mods["Delta_s"]) == {"L_e": 1, "L_s": 1},
             "Delta_s factors")
        need(self.composition_multiplicities(mods["P_e"]) == {"L_e": 2, "L_s": 1},
             "P_e factors")
        need(self.verma_flag_multiplicities(mods["P_e"]) == {"Delta_e": 1, "Delta_s": 1},
             "P_e Verma flag")

        # ungraded BGG reciprocity (P_x : Delta_y) = [Delta_y : L_x]
        for x in ("e", "s"):
            p = mods[f"P_{x}"]
            flags = self.verma_flag_multiplicities(p)
            for y in ("e", "s"):
                mult = self.composition_multiplicities(mods[f"Delta_{y}"])[f"L_{x}"]
                need(flags[f"Delta_{y}"] == mult, f"BGG reciprocity at ({x},{y})")

        # the five indecomposables really are pairwise non-isomorphic
        for i, a in enumerate(INDECOMPOSABLES):
            for j, b in enumerate(INDECOMPOSABLES):
                same = self.decompose(self.modules_by_indec(a)) == self.decompose(
                    self.modules_by_indec(b)
                )
                need(same == (i == j), "indecomposable separation")

        # direct sums decompose correctly
        total, _, _ = direct_sum([mods["P_e"], mods["L_s"], mods["L_s"]])
        need(self.decompose(total) == {"P_e": 1, "L_s": 2}, "Krull-Schmidt bookkeeping")


def build_catalog() -> Catalog:
    return Catalog()
