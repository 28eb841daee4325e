"""The Hecke algebra of a finite Weyl group over Z[v, v^-1].

Elements are stored in the standard basis {H_x} with the relations

    H_x H_y = H_{xy}                       when l(xy) = l(x) + l(y),
    (H_s + v)(H_s - v^-1) = 0              for simple reflections s.

The module provides the bar involution d (v -> v^-1, H_x -> H_{x^-1}^-1),
the sign twist b (v -> -v^-1, H_x -> H_x), the anti-automorphism iota
(v -> v, H_x -> H_{x^-1}), the self-dual elements C_x and C'_x = b(C_x),
the bilinear form <H_x, H_y> = delta_{x,y}, and the bases dual to {C'_x}
and {C_x} under that form.

C_x is computed two independent ways: the product recursion (C_s * C_{sx}
minus integer multiples of lower C_y), and a solver that enforces
self-duality coefficient by coefficient down the length order.  The two
must agree exactly; `verify_kl_oracle` checks that.
"""

from __future__ import annotations

from .laurent import RULE_V_TO_NEG_VINV, LaurentPoly, v
from .report import VerificationReport
from .weyl import MixedGroups, WeylElt, WeylGroup

_V_INV_MINUS_V = LaurentPoly({-1: 1, 1: -1})
_V_MINUS_V_INV = LaurentPoly({1: 1, -1: -1})

KL_VARIANTS = ("C", "Cprime")
DUAL_VARIANTS = ("dual_to_bC", "dual_to_C")


class HeckeElt:
    """A finitely supported Z[v,v^-1]-combination of standard basis elements."""

    __slots__ = ("algebra", "_c")

    def __init__(self, algebra: "HeckeAlgebra", coeffs: dict[int, LaurentPoly]):
        self.algebra = algebra
        self._c = {k: p for k, p in coeffs.items() if not p.is_zero()}

    def coeff(self, x: WeylElt) -> LaurentPoly:
        return self._c.get(x.idx, LaurentPoly.zero())

    def coeffs(self) -> dict[WeylElt, LaurentPoly]:
        g = self.algebra.group
        return {g.element(k): p for k, p in sorted(self._c.items())}

    def support(self) -> list[WeylElt]:
        g = self.algebra.group
        return [g.element(k) for k in sorted(self._c)]

    def is_zero(self) -> bool:
        return not self._c

    def _check(self, other: "HeckeElt") -> None:
        if other.algebra is not self.algebra:
            raise MixedGroups("Hecke elements live over different groups")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        c = dict(self._c)
        for k, p in other._c.items():
            q = c.get(k, LaurentPoly.zero()) + p
            if q.is_zero():
                c.pop(k, None)
            else:
                c[k] = q
        return HeckeElt(self.algebra, c)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.algebra, {k: -p for k, p in self._c.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return self.algebra.mul(self, other)
        scal = other if isinstance(other, LaurentPoly) else LaurentPoly.const(other)
        return HeckeElt(self.algebra, {k: p * scal for k, p in self._c.items()})

    def __rmul__(self, other):
        if isinstance(other, HeckeElt):
            return self.algebra.mul(other, self)
        return self * other

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElt)
            and other.algebra is self.algebra
            and other._c == self._c
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), frozenset(self._c.items())))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        g = self.algebra.group
        parts = [f"({self._c[k]})*H[{g.name(g.element(k))}]" for k in sorted(self._c)]
        return " + ".join(parts)


class HeckeAlgebra:
    """The Hecke algebra attached to one WeylGroup, with memoized KL tables.

    All tables are write-once per group; every public operation is pure.
    """

    def __init__(self, group: WeylGroup):
        self.group = group
        self._d_std: dict[int, HeckeElt] = {}
        self._kl: dict[int, HeckeElt] = {}
        self._kl_solved: dict[int, HeckeElt] = {}
        self._duals: dict[str, dict[int, HeckeElt]] = {}

    # -- constructors ----------------------------------------------------

    def zero(self) -> HeckeElt:
        return HeckeElt(self, {})

    def unit(self) -> HeckeElt:
        return HeckeElt(self, {0: LaurentPoly.one()})

    def std(self, x: WeylElt) -> HeckeElt:
        """The standard basis element H_x."""
        if x.group is not self.group:
            raise MixedGroups("element from a different group")
        return HeckeElt(self, {x.idx: LaurentPoly.one()})

    def gen(self, i: int) -> HeckeElt:
        return self.std(self.group.simple(i))

    # -- multiplication ----------------------------------------------------

    def _times_gen(self, coeffs: dict[int, LaurentPoly], i: int) -> dict[int, LaurentPoly]:
        g = self.group
        out: dict[int, LaurentPoly] = {}

        def bump(k: int, p: LaurentPoly) -> None:
            q = out.get(k, LaurentPoly.zero()) + p
            if q.is_zero():
                out.pop(k, None)
            else:
                out[k] = q

        for k, p in coeffs.items():
            ks = g._rmult[k][i - 1]
            if g._lengths[ks] > g._lengths[k]:
                bump(ks, p)
            else:
                bump(ks, p)
                bump(k, p * _V_INV_MINUS_V)
        return out

    def mul(self, a: HeckeElt, b: HeckeElt) -> HeckeElt:
        if a.algebra is not self or b.algebra is not self:
            raise MixedGroups("Hecke elements live over different groups")
        g = self.group
        total: dict[int, LaurentPoly] = {}
        for y, cy in b._c.items():
            cur = {k: p * cy for k, p in a._c.items()}
            for i in g.reduced_word(g.element(y)):
                cur = self._times_gen(cur, i)
            for k, p in cur.items():
                q = total.get(k, LaurentPoly.zero()) + p
                if q.is_zero():
                    total.pop(k, None)
                else:
                    total[k] = q
        return HeckeElt(self, total)

    # -- involutions ---------------------------------------------------------

    def _d_of_std(self, k: int) -> HeckeElt:
        """d(H_x) = H_{x^-1}^-1, built along the reduced word of x using
        H_s^-1 = H_s + (v - v^-1)."""
        got = self._d_std.get(k)
        if got is not None:
            return got
        g = self.group
        if k == 0:
            res = self.unit()
        else:
            word = g.reduced_word(g.element(k))
            prefix = g.element_by_word(word[:-1]).idx
            j = word[-1]
            d_gen = HeckeElt(
                self, {g._rmult[0][j - 1]: LaurentPoly.one(), 0: _V_MINUS_V_INV}
            )
            res = self.mul(self._d_of_std(prefix), d_gen)
        self._d_std[k] = res
        return res

    def bar(self, h: HeckeElt) -> HeckeElt:
        """The ring involution d."""
        out = self.zero()
        for k, p in h._c.items():
            out = out + self._d_of_std(k) * p.bar()
        return out

    def b_twist(self, h: HeckeElt) -> HeckeElt:
        """The ring involution b: v -> -v^-1 on coefficients, H_x fixed."""
        return HeckeElt(
            self, {k: p.substitute(RULE_V_TO_NEG_VINV) for k, p in h._c.items()}
        )

    def iota(self, h: HeckeElt) -> HeckeElt:
        """The anti-automorphism i: coefficients fixed, H_x -> H_{x^-1}."""
        g = self.group
        return HeckeElt(self, {g._inverse[k]: p for k, p in h._c.items()})

    # -- Kazhdan-Lusztig elements ---------------------------------------------

    def kl_element(self, x: WeylElt, variant: str = "C") -> HeckeElt:
        """The self-dual element C_x (correction terms in vZ[v]) or
        C'_x = b(C_x) (correction terms in v^-1 Z[v^-1])."""
        if variant not in KL_VARIANTS:
            raise ValueError(f"unknown KL variant: {variant!r}")
        c = self._kl_C(x.idx)
        return self.b_twist(c) if variant == "Cprime" else c

    def _kl_C(self, k: int) -> HeckeElt:
        got = self._kl.get(k)
        if got is not None:
            return got
        g = self.group
        if k == 0:
            res = self.unit()
        else:
            s = g.reduced_word(g.element(k))[0]
            sk = g._lmult[k][s - 1]
            c_s = HeckeElt(self, {g._rmult[0][s - 1]: LaurentPoly.one(), 0: v})
            c_lower = self._kl_C(sk)
            res = self.mul(c_s, c_lower)
            # strip mu(y, sx) * C_y for the y below sx with sy < y
            for y in sorted(c_lower._c, key=lambda t: -g._lengths[t]):
                if g._lengths[g._lmult[y][s - 1]] < g._lengths[y]:
                    mu = c_lower._c[y].coeff(1)
                    if mu:
                        res = res - self._kl_C(y) * mu
        self._kl[k] = res
        return res

    def kl_element_by_bar_solver(self, x: WeylElt) -> HeckeElt:
        """Independent oracle for C_x: starting from H_x, restore bar
        self-duality one basis coefficient at a time, longest first.

        At each step the defect d(f) - f is supported below the current
        element; its coefficient there is bar-antisymmetric, so it is killed
        by a unique correction in vZ[v].  Never touches the C_s-product
        recursion.
        """
        got = self._kl_solved.get(x.idx)
        if got is not None:
            return got
        g = self.group
        f = self.std(x)
        defect = self.bar(f) - f
        order = sorted(
            (k for k in range(g.order) if g._lengths[k] < g.length(x)),
            key=lambda t: -g._lengths[t],
        )
        for y in order:
            c = defect._c.get(y, LaurentPoly.zero())
            if c.is_zero():
                continue
            if c.bar() != -c:
                raise ArithmeticError("bar defect is not antisymmetric; solver broken")
            p = LaurentPoly({e: n for e, n in c.items() if e > 0})
            correction = self.std(g.element(y)) * p
            f = f + correction
            # the defect is linear in f, so update it in place
            defect = defect + self._d_of_std(y) * p.bar() - correction
        if not defect.is_zero() or self.bar(f) != f:
            raise ArithmeticError("bar solver failed to reach a self-dual element")
        self._kl_solved[x.idx] = f
        return f

    # -- bilinear form and dual bases ---------------------------------------

    def pairing(self, a: HeckeElt, b: HeckeElt) -> LaurentPoly:
        """<a, b> = sum over x of a_x * b_x; the H_x are orthonormal."""
        if a.algebra is not self or b.algebra is not self:
            raise MixedGroups("Hecke elements live over different groups")
        out = LaurentPoly.zero()
        for k, p in a._c.items():
            q = b._c.get(k)
            if q is not None:
                out = out + p * q
        return out

    def dual_basis(self, variant: str = "dual_to_bC") -> dict[WeylElt, HeckeElt]:
        """The family {Q_x} with <Q_x, b(C_y)> = delta (variant dual_to_bC)
        or <Q_x, C_y> = delta (variant dual_to_C)."""
        if variant not in DUAL_VARIANTS:
            raise ValueError(f"unknown dual-basis variant: {variant!r}")
        got = self._duals.get(variant)
        if got is None:
            g = self.group
            kl_variant = "Cprime" if variant == "dual_to_bC" else "C"
            cols = [
                self.kl_element(g.element(y), kl_variant)._c for y in range(g.order)
            ]
            inv = invert_unitriangular(cols, g.order)
            # <Q_x, col_y> = delta needs the x-th row of the inverse matrix
            got = {
                x: HeckeElt(self, dict(inv[x]))
                for x in range(g.order)
            }
            self._duals[variant] = got
        return {self.group.element(k): h for k, h in got.items()}

    # -- verification -----------------------------------------------------------

    def verify_hw0_identity(self) -> VerificationReport:
        """H_{w0} * C_x must equal the dual-basis element at w0 x, for all x."""
        g = self.group
        rep = VerificationReport("hecke")
        duals = self.dual_basis("dual_to_bC")
        h_w0 = self.std(g.w0)

        def check():
            bad = []
            for x in g.elements():
                lhs = self.mul(h_w0, self.kl_element(x, "C"))
                rhs = duals[g.multiply(g.w0, x)]
                if lhs != rhs:
                    bad.append(g.name(x))
            return not bad, ("failures at: " + ", ".join(bad)) if bad else f"all {g.order} elements"

        rep.run("hecke.hw0_times_C_is_dual_basis", check)
        return rep

    def verify_relations(self) -> VerificationReport:
        g = self.group
        rep = VerificationReport("hecke")

        def quadratic():
            for i in range(1, g.rank + 1):
                h = self.gen(i)
                lhs = self.mul(h + self.unit() * v, h - self.unit() * LaurentPoly({-1: 1}))
                if not lhs.is_zero():
                    return False, f"s_{i} fails"
            return True, f"{g.rank} generators"

        def braid():
            n = 0
            for x in g.elements():
                for y in g.elements():
                    if g.length(g.multiply(x, y)) == g.length(x) + g.length(y):
                        n += 1
                        if self.mul(self.std(x), self.std(y)) != self.std(g.multiply(x, y)):
                            return False, f"H_x H_y != H_xy at ({g.name(x)}, {g.name(y)})"
            return True, f"{n} length-additive pairs"

        rep.run("hecke.quadratic_relation", quadratic)
        rep.run("hecke.braid_relations", braid)
        return rep

    def verify_involutions(self) -> VerificationReport:
        g = self.group
        rep = VerificationReport("hecke")
        basis = [self.std(x) for x in g.elements()]
        sample = self._sample_elements()

        rep.run(
            "hecke.bar_is_involution",
            lambda: (
                all(self.bar(self.bar(h)) == h for h in basis + sample),
                f"{len(basis) + len(sample)} elements",
            ),
        )
        rep.run(
            "hecke.bar_is_ring_automorphism",
            lambda: (
                all(
                    self.bar(self.mul(a, b)) == self.mul(self.bar(a), self.bar(b))
                    for a in sample
                    for b in sample
                ),
                f"{len(sample)}^2 products",
            ),
        )
        rep.run(
            "hecke.b_is_involution",
            lambda: (
                all(self.b_twist(self.b_twist(h)) == h for h in basis + sample),
                "",
            ),
        )
        rep.run(
            "hecke.b_is_ring_automorphism",
            lambda: (
                all(
                    self.b_twist(self.mul(a, b))
                    == self.mul(self.b_twist(a), self.b_twist(b))
                    for a in sample
                    for b in sample
                ),
                "",
            ),
        )
        rep.run(
            "hecke.iota_is_anti_automorphism",
            lambda: (
                all(
                    self.iota(self.mul(a, b)) == self.mul(self.iota(b), self.iota(a))
                    for a in sample
                    for b in sample
                ),
                "",
            ),
        )
        rep.run(
            "hecke.involutions_pairwise_commute",
            lambda: (
                all(
                    self.bar(self.b_twist(h)) == self.b_twist(self.bar(h))
                    and self.bar(self.iota(h)) == self.iota(self.bar(h))
                    and self.b_twist(self.iota(h)) == self.iota(self.b_twist(h))
                    for h in basis + sample
                ),
                "",
            ),
        )
        return rep

    def verify_kl(self) -> VerificationReport:
        g = self.group
        rep = VerificationReport("hecke")

        def structure():
            for x in g.elements():
                c = self.kl_element(x, "C")
                cp = self.kl_element(x, "Cprime")
                if self.bar(c) != c:
                    return False, f"C_{g.name(x)} not self-dual"
                if self.bar(cp) != cp:
                    return False, f"C'_{g.name(x)} not self-dual"
                if c.coeff(x) != LaurentPoly.one():
                    return False, f"C_{g.name(x)} leading term wrong"
                for y, p in c.coeffs().items():
                    if y == x:
                        continue
                    if not g.bruhat_leq(y, x):
                        return False, f"C_{g.name(x)} supported above Bruhat interval"
                    if p.min_exp() is not None and p.min_exp() < 1:
                        return False, f"C_{g.name(x)} correction not in vZ[v] at {g.name(y)}"
                for y, p in cp.coeffs().items():
                    if y != x and p.max_exp() is not None and p.max_exp() > -1:
                        return False, f"C'_{g.name(x)} correction not in v^-1 Z[v^-1]"
            return True, f"all {g.order} elements"

        rep.run("hecke.kl_selfdual_and_degree_bounds", structure)
        return rep

    def verify_kl_oracle(self) -> VerificationReport:
        g = self.group
        rep = VerificationReport("hecke")

        def agree():
            for x in g.elements():
                if self.kl_element(x, "C") != self.kl_element_by_bar_solver(x):
                    return False, f"recursion and solver disagree at {g.name(x)}"
            return True, f"all {g.order} elements"

        rep.run("hecke.kl_recursion_matches_bar_solver", agree)
        return rep

    def verify_dual_basis(self) -> VerificationReport:
        g = self.group
        rep = VerificationReport("hecke")

        def duality():
            for variant, kl_variant in (("dual_to_bC", "Cprime"), ("dual_to_C", "C")):
                duals = self.dual_basis(variant)
                for x in g.elements():
                    for y in g.elements():
                        expect = LaurentPoly.one() if x == y else LaurentPoly.zero()
                        got = self.pairing(duals[x], self.kl_element(y, kl_variant))
                        if got != expect:
                            return False, f"{variant} fails at ({g.name(x)}, {g.name(y)})"
            return True, f"2 * {g.order}^2 pairings"

        rep.run("hecke.dual_bases_orthonormal", duality)
        return rep

    def suite(self) -> VerificationReport:
        rep = VerificationReport("hecke")
        for sub in (
            self.verify_relations(),
            self.verify_involutions(),
            self.verify_kl(),
            self.verify_kl_oracle(),
            self.verify_dual_basis(),
            self.verify_hw0_identity(),
        ):
            rep.extend(sub)
        return rep

    # -- helpers -----------------------------------------------------------

    def _sample_elements(self) -> list[HeckeElt]:
        """A small deterministic family with nontrivial coefficients."""
        g = self.group
        picks = sorted({0, g.order - 1, g.order // 2, min(1, g.order - 1)})
        out = []
        for n, k in enumerate(picks):
            out.append(
                HeckeElt(
                    self,
                    {
                        k: LaurentPoly({n - 1: 1, 2: -3}),
                        0: LaurentPoly({0: 2, -2: n}),
                    },
                )
            )
        return out


def invert_unitriangular(
    cols: list[dict[int, LaurentPoly]], n: int, lower: bool = False
) -> list[dict[int, LaurentPoly]]:
    """Invert a unitriangular matrix over Z[v, v^-1] given as columns
    (cols[j][i] = entry in row i), nonzero entries only at i <= j
    (or i >= j with lower=True).

    Returns the inverse as rows (out[i][j]).  Exact back substitution; the
    unit diagonal means no division ever happens.
    """
    for j in range(n):
        if cols[j].get(j) != LaurentPoly.one():
            raise ValueError("matrix is not unitriangular")
        if any((i < j if lower else i > j) for i in cols[j]):
            raise ValueError("matrix has entries on the wrong side of the diagonal")
    rows: list[dict[int, LaurentPoly]] = [dict() for _ in range(n)]
    order = range(n - 1, -1, -1) if lower else range(n)
    for i in order:
        rows[i][i] = LaurentPoly.one()
        span = range(i - 1, -1, -1) if lower else range(i + 1, n)
        for j in span:
            s = LaurentPoly.zero()
            for k, p in rows[i].items():
                q = cols[j].get(k)
                if q is not None and k != j:
                    s = s + p * q
            if not s.is_zero():
                rows[i][j] = -s
    return rows
