"""The rank-one block algebra and its finite-dimensional modules.

The algebra is the path algebra of the quiver

        a
    e <---> s        with the relation  a . b = 0
        b            (the length-two cycle at the vertex s vanishes),

a five-dimensional basic algebra with basis {1_e, 1_s, a, b, ba}.  Left
modules are quiver representations: a vector space at each vertex, a matrix
for each arrow, and act_a @ act_b = 0.  The ground field is Q so that every
rank, kernel and homology computation is exact.

None of the structural facts about this presentation are assumed: the
construction battery in `catalog.py` recomputes projective dimensions,
endomorphism rings, Loewy layers and BGG reciprocity, and aborts if any of
them comes out wrong.

A one-vertex, arrowless instance of the same class models the category of
plain vector spaces on the wall.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import Mat


class BlockConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class PathAlgebra:
    """A basic path algebra with monomial relations, given by its path basis."""

    name: str
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (label, source, target)
    basis: tuple[str, ...]
    source: dict
    target: dict
    arrow_word: dict  # path -> tuple of arrow labels, rightmost acts first
    dead_words: frozenset  # forbidden adjacent arrow pairs (the relations)

    def idempotent(self, vertex: str) -> str:
        return f"1_{vertex}"

    def mult(self, p: str, q: str) -> str | None:
        """Product p*q (q acts first); None encodes zero."""
        if self.source[p] != self.target[q]:
            return None
        word = self.arrow_word[p] + self.arrow_word[q]
        for i in range(len(word) - 1):
            if (word[i], word[i + 1]) in self.dead_words:
                return None
        for label in self.basis:
            if self.arrow_word[label] == word and self.source[label] == self.source[q]:
                return label
        return None


def rank_one_algebra() -> PathAlgebra:
    return PathAlgebra(
        name="rank-one block",
        vertices=("e", "s"),
        arrows=(("a", "e", "s"), ("b", "s", "e")),
        basis=("1_e", "1_s", "a", "b", "ba"),
        source={"1_e": "e", "1_s": "s", "a": "e", "b": "s", "ba": "e"},
        target={"1_e": "e", "1_s": "s", "a": "s", "b": "e", "ba": "e"},
        arrow_word={"1_e": (), "1_s": (), "a": ("a",), "b": ("b",), "ba": ("b", "a")},
        dead_words=frozenset({("a", "b")}),
    )


def wall_algebra() -> PathAlgebra:
    return PathAlgebra(
        name="wall",
        vertices=("w",),
        arrows=(),
        basis=("1_w",),
        source={"1_w": "w"},
        target={"1_w": "w"},
        arrow_word={"1_w": ()},
        dead_words=frozenset(),
    )


def _shaped(data, nrows: int, ncols: int, what: str) -> Mat:
    """Coerce user matrix data to an exactly shaped Mat."""
    if data is None:
        return linalg.zeros(nrows, ncols)
    m = linalg.mat(data)
    if m.nrows == 0 and nrows == 0:
        return linalg.zeros(0, ncols)
    if m.ncols == 0 and ncols == 0:
        return linalg.zeros(nrows, 0) if m.nrows == nrows else _bad(what)
    if (m.nrows, m.ncols) != (nrows, ncols):
        _bad(what)
    return m


def _bad(what: str):
    raise BlockConstructionError(f"{what} has the wrong shape")


class Module:
    """A finite-dimensional left module: dims per vertex, a matrix per arrow."""

    __slots__ = ("algebra", "dims", "act")

    def __init__(self, algebra: PathAlgebra, dims: dict, act: dict | None = None):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        self.act = {}
        for label, src, tgt in algebra.arrows:
            self.act[label] = _shaped(
                (act or {}).get(label), self.dims[tgt], self.dims[src], f"arrow {label}"
            )
        self.validate()

    def validate(self) -> None:
        # monomial relations hold on every module
        for w1, w2 in self.algebra.dead_words:
            prod = linalg.mmul(self.act[w1], self.act[w2])
            if not linalg.is_zero_mat(prod):
                raise BlockConstructionError(f"relation {w1}{w2}=0 violated")

    def dim(self, v: str) -> int:
        return self.dims[v]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_action(self, path: str) -> Mat:
        """Matrix of a basis path, M_src -> M_tgt (rightmost arrow acts first)."""
        word = self.algebra.arrow_word[path]
        out = linalg.eye(self.dims[self.algebra.source[path]])
        for arrow in reversed(word):
            out = linalg.mmul(self.act[arrow], out)
        return out

    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def __repr__(self) -> str:
        return f"Module({self.algebra.name}, dims={self.dims})"


class ModuleMap:
    """A homomorphism of modules: one matrix per vertex, commuting with arrows."""

    __slots__ = ("src", "dst", "mats")

    def __init__(self, src: Module, dst: Module, mats: dict, check: bool = True):
        self.src = src
        self.dst = dst
        self.mats = {
            v: _shaped(mats.get(v), dst.dims[v], src.dims[v], f"map at {v}")
            for v in src.algebra.vertices
        }
        if check and not self.commutes():
            raise BlockConstructionError("matrices do not commute with the arrows")

    def commutes(self) -> bool:
        for label, src_v, tgt_v in self.src.algebra.arrows:
            lhs = linalg.mmul(self.mats[tgt_v], self.src.act[label])
            rhs = linalg.mmul(self.dst.act[label], self.mats[src_v])
            if not linalg.mat_eq(lhs, rhs):
                return False
        return True

    # -- algebra of maps -------------------------------------------------

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        if other.dst.dims != self.src.dims:
            raise BlockConstructionError("composition shape mismatch")
        return ModuleMap(
            other.src,
            self.dst,
            {v: linalg.mmul(self.mats[v], other.mats[v]) for v in self.mats},
            check=False,
        )

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.src,
            self.dst,
            {v: linalg.madd(self.mats[v], other.mats[v]) for v in self.mats},
            check=False,
        )

    def __neg__(self) -> "ModuleMap":
        return ModuleMap(
            self.src, self.dst, {v: linalg.mneg(m) for v, m in self.mats.items()}, check=False
        )

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return self + (-other)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(
            self.src, self.dst, {v: linalg.mscale(c, m) for v, m in self.mats.items()}, check=False
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleMap)
            and self.src.dims == other.src.dims
            and self.dst.dims == other.dst.dims
            and all(linalg.mat_eq(self.mats[v], other.mats[v]) for v in self.mats)
        )

    def __hash__(self):
        raise TypeError("ModuleMap is unhashable")

    def is_zero(self) -> bool:
        return all(linalg.is_zero_mat(m) for m in self.mats.values())

    def rank(self, v: str) -> int:
        return linalg.rank(self.mats[v])

    def total_rank(self) -> int:
        return sum(self.rank(v) for v in self.mats)

    def is_injective(self) -> bool:
        return self.total_rank() == self.src.total_dim

    def is_surjective(self) -> bool:
        return self.total_rank() == self.dst.total_dim

    def is_isomorphism(self) -> bool:
        return self.src.dims == self.dst.dims and self.is_injective()


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, {v: linalg.eye(m.dims[v]) for v in m.dims}, check=False)


def zero_map(src: Module, dst: Module) -> ModuleMap:
    return ModuleMap(src, dst, {}, check=False)


def direct_sum(mods: list[Module]) -> tuple[Module, list[ModuleMap], list[ModuleMap]]:
    """Direct sum with injections and projections."""
    if not mods:
        raise BlockConstructionError("empty direct sum needs an algebra")
    alg = mods[0].algebra
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.vertices}
    act = {}
    for label, src_v, tgt_v in alg.arrows:
        big = linalg.zeros(dims[tgt_v], dims[src_v])
        r0 = c0 = 0
        for m in mods:
            a = m.act[label]
            for i in range(m.dims[tgt_v]):
                for j in range(m.dims[src_v]):
                    big.rows[r0 + i][c0 + j] = a.rows[i][j]
            r0 += m.dims[tgt_v]
            c0 += m.dims[src_v]
        act[label] = big
    total = Module(alg, dims, act)
    injections = []
    projections = []
    offs = {v: 0 for v in alg.vertices}
    for m in mods:
        inj = {}
        proj = {}
        for v in alg.vertices:
            mi = linalg.zeros(dims[v], m.dims[v])
            mp = linalg.zeros(m.dims[v], dims[v])
            for i in range(m.dims[v]):
                mi.rows[offs[v] + i][i] = Fraction(1)
                mp.rows[i][offs[v] + i] = Fraction(1)
            inj[v] = mi
            proj[v] = mp
        injections.append(ModuleMap(m, total, inj, check=False))
        projections.append(ModuleMap(total, m, proj, check=False))
        for v in alg.vertices:
            offs[v] += m.dims[v]
    return total, injections, projections


def block_map(srcs: list[Module], dsts: list[Module], blocks: dict) -> ModuleMap:
    """Assemble a map of direct sums from blocks[(r, c)] : srcs[c] -> dsts[r]."""
    src, _, projs = direct_sum(srcs)
    dst, injs, _ = direct_sum(dsts)
    total = zero_map(src, dst)
    for (r, c), f in blocks.items():
        if f is None:
            continue
        total = total + (injs[r] @ f @ projs[c])
    return total


# -- hom spaces ----------------------------------------------------------------

def hom_basis(x: Module, y: Module) -> list[ModuleMap]:
    """A basis of Hom(x, y), by solving the intertwining equations."""
    alg = x.algebra
    offsets = {}
    n = 0
    for v in alg.vertices:
        offsets[v] = n
        n += y.dims[v] * x.dims[v]
    if n == 0:
        return []
    rows: list[list[Fraction]] = []
    for label, src_v, tgt_v in alg.arrows:
        # y.act[label] @ f[src_v] - f[tgt_v] @ x.act[label] = 0
        for i in range(y.dims[tgt_v]):
            for j in range(x.dims[src_v]):
                row = [Fraction(0)] * n
                for k in range(y.dims[src_v]):
                    row[offsets[src_v] + k * x.dims[src_v] + j] += y.act[label].rows[i][k]
                for l in range(x.dims[tgt_v]):
                    row[offsets[tgt_v] + i * x.dims[tgt_v] + l] -= x.act[label].rows[l][j]
                rows.append(row)
    null = linalg.nullspace_basis(linalg.from_rows(rows, n)) if rows else linalg.eye(n)
    out = []
    for c in range(null.ncols):
        mats = {}
        for v in alg.vertices:
            m = linalg.zeros(y.dims[v], x.dims[v])
            for i in range(y.dims[v]):
                for j in range(x.dims[v]):
                    m.rows[i][j] = null.rows[offsets[v] + i * x.dims[v] + j][c]
            mats[v] = m
        out.append(ModuleMap(x, y, mats))
    return out


def hom_dim(x: Module, y: Module) -> int:
    return len(hom_basis(x, y))


# -- submodule / quotient constructions ------------------------------------------

def kernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    """The kernel submodule with its inclusion."""
    alg = f.src.algebra
    bases = {v: linalg.nullspace_basis(f.mats[v]) for v in alg.vertices}
    dims = {v: bases[v].ncols for v in alg.vertices}
    act = {}
    for label, src_v, tgt_v in alg.arrows:
        moved = linalg.mmul(f.src.act[label], bases[src_v])
        sol = linalg.solve(bases[tgt_v], moved)
        if sol is None:
            raise BlockConstructionError("kernel is not a submodule (impossible)")
        act[label] = sol
    ker = Module(alg, dims, act)
    incl = ModuleMap(ker, f.src, {v: bases[v] for v in alg.vertices})
    return ker, incl


def cokernel_of_columns(ambient: Module, cols: dict) -> tuple[Module, ModuleMap, dict]:
    """Quotient of `ambient` by the submodule spanned by the given columns.

    Returns (quotient, projection, representatives); representatives[v]
    holds ambient coordinates of the chosen quotient basis.
    """
    alg = ambient.algebra
    proj_mats = {}
    reps = {}
    dims = {}
    for v in alg.vertices:
        n = ambient.dims[v]
        sub = cols.get(v)
        if sub is None:
            sub = linalg.zeros(n, 0)
        sub_basis = linalg.column_space_basis(sub)
        r = sub_basis.ncols
        # extend the subspace basis by standard vectors to a full basis
        chosen = []
        cur = sub_basis
        cur_rank = r
        for j in range(n):
            cand = linalg.hstack([cur, linalg.std_col(n, j)])
            if linalg.rank(cand) > cur_rank:
                cur = cand
                cur_rank += 1
                chosen.append(j)
        dims[v] = n - r
        if len(chosen) != dims[v]:
            raise BlockConstructionError("basis extension failed")
        reps[v] = Mat(n, len(chosen), [[Fraction(1 if i == j else 0) for j in chosen] for i in range(n)])
        full = linalg.hstack([sub_basis, reps[v]])
        inv = linalg.solve(full, linalg.eye(n))
        if inv is None:
            raise BlockConstructionError("quotient coordinates failed")
        proj_mats[v] = linalg.submatrix_rows(inv, r)
    act = {}
    for label, src_v, tgt_v in alg.arrows:
        act[label] = linalg.mmul(
            proj_mats[tgt_v], linalg.mmul(ambient.act[label], reps[src_v])
        )
    quot = Module(alg, dims, act)
    proj = ModuleMap(ambient, quot, proj_mats)
    return quot, proj, reps


def cokernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    quot, proj, _ = cokernel_of_columns(f.dst, {v: f.mats[v] for v in f.mats})
    return quot, proj


def radical(m: Module) -> dict:
    """Columns spanning rad M = J M at each vertex."""
    alg = m.algebra
    cols = {v: [] for v in alg.vertices}
    for label, src_v, tgt_v in alg.arrows:
        cols[tgt_v].append(m.act[label])
    return {
        v: linalg.column_space_basis(linalg.hstack(cs)) if cs else linalg.zeros(m.dims[v], 0)
        for v, cs in cols.items()
    }


def top_dims(m: Module) -> dict:
    rad = radical(m)
    return {v: m.dims[v] - rad[v].ncols for v in m.dims}


def socle_dims(m: Module) -> dict:
    alg = m.algebra
    out = {}
    for v in alg.vertices:
        outgoing = [m.act[label] for label, src_v, _ in alg.arrows if src_v == v]
        if not outgoing:
            out[v] = m.dims[v]
        else:
            out[v] = linalg.nullspace_basis(linalg.vstack(outgoing)).ncols
    return out


def dual_module(m: Module) -> Module:
    """Contravariant duality: transpose matrices and swap a <-> b.

    Uses the anti-automorphism fixing the vertices and exchanging the two
    arrows; it fixes both simples and exchanges standard with costandard.
    """
    if set(m.algebra.arrow_word) != {"1_e", "1_s", "a", "b", "ba"}:
        raise BlockConstructionError("duality is defined for the rank-one block only")
    return Module(
        m.algebra,
        dict(m.dims),
        {"a": linalg.transpose(m.act["b"]), "b": linalg.transpose(m.act["a"])},
    )


# -- projectives and Ext ------------------------------------------------------------

def projective(alg: PathAlgebra, vertex: str) -> tuple[Module, dict]:
    """The projective A e_vertex, with its path basis grouped by target vertex."""
    paths = [p for p in alg.basis if alg.source[p] == vertex]
    by_tgt = {v: [p for p in paths if alg.target[p] == v] for v in alg.vertices}
    dims = {v: len(by_tgt[v]) for v in alg.vertices}
    act = {}
    for label, src_v, tgt_v in alg.arrows:
        m = linalg.zeros(dims[tgt_v], dims[src_v])
        for j, p in enumerate(by_tgt[src_v]):
            q = alg.mult(label, p)
            if q is not None:
                m.rows[by_tgt[tgt_v].index(q)][j] = Fraction(1)
        act[label] = m
    return Module(alg, dims, act), by_tgt


def projective_cover(m: Module, projs: dict) -> tuple[Module, ModuleMap, list[str]]:
    """A projective cover P -> M; projs maps vertex -> (module, path basis)."""
    alg = m.algebra
    rad = radical(m)
    summands: list[Module] = []
    labels: list[str] = []
    gens: list[tuple[str, list[Fraction]]] = []
    for v in alg.vertices:
        cur = rad[v]
        cur_rank = linalg.rank(cur)
        for j in range(m.dims[v]):
            cand = linalg.hstack([cur, linalg.std_col(m.dims[v], j)])
            if linalg.rank(cand) > cur_rank:
                cur = cand
                cur_rank += 1
                summands.append(projs[v][0])
                labels.append(v)
                gens.append((v, [Fraction(1 if i == j else 0) for i in range(m.dims[v])]))
    if not summands:
        empty = Module(alg, {})
        return empty, zero_map(empty, m), []
    total, _, _ = direct_sum(summands)
    blocks = {}
    for idx, (v, gen_vec) in enumerate(gens):
        pmod, by_tgt = projs[v]
        mats = {}
        for u in alg.vertices:
            mm = linalg.zeros(m.dims[u], pmod.dims[u])
            for col, path in enumerate(by_tgt[u]):
                img = linalg.mmul(m.path_action(path), linalg.col_vec(gen_vec))
                for i in range(m.dims[u]):
                    mm.rows[i][col] = img.rows[i][0]
            mats[u] = mm
        blocks[(0, idx)] = ModuleMap(pmod, m, mats)
    cover = block_map(summands, [m], blocks)
    cover = ModuleMap(total, m, cover.mats)
    if not cover.is_surjective():
        raise BlockConstructionError("projective cover is not surjective")
    return total, cover, labels


def ext_dims(m: Module, n: Module, imax: int, projs: dict) -> list[int]:
    """dim Ext^i(m, n) for 0 <= i <= imax, by an explicit projective resolution."""
    resolution: list[ModuleMap] = []  # d_0: P_0 -> M, then d_i: P_i -> P_{i-1}
    target = m
    embed: ModuleMap | None = None
    for _ in range(imax + 2):
        p, cover, _ = projective_cover(target, projs)
        resolution.append(embed @ cover if embed is not None else cover)
        if p.is_zero():
            break
        ker, incl = kernel(cover)
        target = ker
        embed = incl
    hom_bases = [hom_basis(f.src, n) for f in resolution]
    dims = []
    for i in range(imax + 1):
        cur = hom_bases[i] if i < len(hom_bases) else []
        nxt = hom_bases[i + 1] if i + 1 < len(hom_bases) else []
        if i + 1 < len(resolution) and cur:
            d = resolution[i + 1]
            rows = [_hom_coords(b @ d, nxt) for b in cur]
            rank_out = linalg.rank(linalg.from_rows(rows, len(nxt)))
        else:
            rank_out = 0
        if i == 0 or i >= len(resolution) or not hom_bases[i - 1]:
            rank_in = 0
        else:
            prev = hom_bases[i - 1]
            rows = [_hom_coords(b @ resolution[i], cur) for b in prev]
            rank_in = linalg.rank(linalg.from_rows(rows, len(cur)))
        dims.append(len(cur) - rank_out - rank_in)
    return dims


def _hom_coords(f: ModuleMap, basis: list[ModuleMap]) -> list[Fraction]:
    """Coordinates of f in a basis of its hom space."""
    if not basis:
        if not f.is_zero():
            raise BlockConstructionError("hom coordinate failure")
        return []
    cols = linalg.from_rows(
        [list(col) for col in zip(*(_flatten(b) for b in basis))], len(basis)
    )
    sol = linalg.solve(cols, linalg.col_vec(_flatten(f)))
    if sol is None:
        raise BlockConstructionError("hom coordinate failure")
    return [row[0] for row in sol.rows]


def _flatten(f: ModuleMap) -> list[Fraction]:
    out = []
    for v in f.src.algebra.vertices:
        for row in f.mats[v].rows:
            out.extend(row)
    return out
