"""Finite Weyl groups of types A-G with length, descents, Bruhat order and
reduced words.

Every group is enumerated through its reflection representation: an element
is stored as the signed permutation it induces on the set of positive roots,
computed from the Cartan matrix of the type.  This gives one uniform code
path for all types, including G2 and F4.

Element ids are assigned in breadth-first order from the identity, so ids are
sorted by length and are reproducible run to run.  Reduced words are always
the lexicographically smallest ones, which makes every downstream output
deterministic.

>>> W = build_group(CartanDatum("A", 2))
>>> W.order, W.length(W.w0)
(6, 3)
>>> W.reduced_word(W.w0)
(1, 2, 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_ENUMERATION_CAP = 40320  # 8!, keeps full Bruhat tables in memory

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class WeylError(ValueError):
    pass


class InadmissibleDatum(WeylError):
    pass


class EnumerationCapExceeded(WeylError):
    pass


class MixedGroups(WeylError):
    pass


class MalformedWord(WeylError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    """A finite Cartan type: a letter A/B/C/D/F/G and a rank."""

    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in _ADMISSIBLE or not isinstance(self.rank, int):
            raise InadmissibleDatum(f"inadmissible Cartan datum: {self.letter}{self.rank}")
        if not _ADMISSIBLE[self.letter](self.rank):
            raise InadmissibleDatum(f"inadmissible Cartan datum: {self.letter}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanDatum":
        t = text.strip().upper()
        if len(t) < 2 or not t[1:].isdigit():
            raise InadmissibleDatum(f"inadmissible Cartan datum: {text!r}")
        return cls(t[0], int(t[1:]))

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"

    def cartan_matrix(self) -> list[list[int]]:
        """Cartan matrix A with simple reflections acting by
        s_i(alpha_j) = alpha_j - A[i][j] alpha_i."""
        n = self.rank
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def link(i, j, aij=-1, aji=-1):
            A[i][j] = aij
            A[j][i] = aji

        if self.letter in ("A", "B", "C", "F"):
            for i in range(n - 1):
                link(i, i + 1)
            if self.letter == "B":
                link(n - 2, n - 1, -1, -2)
            elif self.letter == "C":
                link(n - 2, n - 1, -2, -1)
            elif self.letter == "F":
                link(1, 2, -1, -2)
        elif self.letter == "D":
            for i in range(n - 2):
                link(i, i + 1)
            link(n - 3, n - 1)
        elif self.letter == "G":
            link(0, 1, -1, -3)
        return A

    def expected_order(self) -> int:
        n = self.rank
        if self.letter == "A":
            return math.factorial(n + 1)
        if self.letter in ("B", "C"):
            return (2 ** n) * math.factorial(n)
        if self.letter == "D":
            return (2 ** (n - 1)) * math.factorial(n)
        if self.letter == "F":
            return 1152
        return 12  # G2


@dataclass(frozen=True)
class WeylElt:
    """Opaque handle into a WeylGroup (hashable, order = BFS id order)."""

    group: "WeylGroup"
    idx: int

    def __repr__(self) -> str:
        return self.group.name(self)

    def __hash__(self) -> int:
        return hash((id(self.group), self.idx))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylElt)
            and other.group is self.group
            and other.idx == self.idx
        )

    def __lt__(self, other: "WeylElt") -> bool:
        return self.idx < other.idx


def _reflect(cartan: list[list[int]], i: int, vec: tuple[int, ...]) -> tuple[int, ...]:
    out = list(vec)
    out[i] = vec[i] - sum(cartan[i][j] * vec[j] for j in range(len(vec)))
    return tuple(out)


class WeylGroup:
    """A fully enumerated finite Weyl group.

    Immutable after construction; all queries are read-only.
    """

    def __init__(self, datum: CartanDatum, cap: int = DEFAULT_ENUMERATION_CAP):
        self.datum = datum
        n = datum.rank
        cartan = datum.cartan_matrix()
        expected = datum.expected_order()
        if expected > cap:
            raise EnumerationCapExceeded(
                f"enumeration cap exceeded: |W({datum.label})| = {expected} > {cap}"
            )

        # close the simple roots under the simple reflections
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots: set[tuple[int, ...]] = set(simples)
        frontier = list(simples)
        while frontier:
            if len(roots) > 8 * expected:
                raise WeylError("root closure did not terminate; bad Cartan matrix")
            nxt = []
            for r in frontier:
                for i in range(n):
                    s = _reflect(cartan, i, r)
                    if s not in roots:
                        roots.add(s)
                        nxt.append(s)
            frontier = nxt
        positives = sorted(
            (r for r in roots if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        for r in roots:
            if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
                raise WeylError("mixed-sign root produced; bad Cartan matrix")
        if 2 * len(positives) != len(roots):
            raise WeylError("root system is not symmetric; bad Cartan matrix")
        self.positive_roots = tuple(positives)
        npos = len(positives)
        root_index = {r: k for k, r in enumerate(positives)}

        # each simple reflection as a signed permutation of the positive roots
        def signed_perm(i: int) -> tuple[int, ...]:
            img = []
            for r in positives:
                s = _reflect(cartan, i, r)
                if all(c >= 0 for c in s):
                    img.append(root_index[s] + 1)
                else:
                    img.append(-(root_index[tuple(-c for c in s)] + 1))
            return tuple(img)

        gen_perms = [signed_perm(i) for i in range(n)]
        self._alpha_index = [root_index[s] for s in simples]

        def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
            # (p o q)(beta_r): apply q, then p
            out = []
            for r in range(npos):
                t = q[r]
                u = p[abs(t) - 1]
                out.append(u if t > 0 else -u)
            return tuple(out)

        self._compose = compose

        identity = tuple(range(1, npos + 1))
        perms: list[tuple[int, ...]] = [identity]
        index: dict[tuple[int, ...], int] = {identity: 0}
        lengths: list[int] = [0]
        rmult: list[list[int]] = []
        head = 0
        while head < len(perms):
            cur = perms[head]
            row = []
            for i in range(n):
                new = compose(cur, gen_perms[i])
                j = index.get(new)
                if j is None:
                    j = len(perms)
                    if j >= cap:
                        raise EnumerationCapExceeded(
                            f"enumeration cap exceeded while building {datum.label}"
                        )
                    index[new] = j
                    perms.append(new)
                    lengths.append(lengths[head] + 1)
                row.append(j)
            rmult.append(row)
            head += 1

        self._perms = perms
        self._index = index
        self._lengths = lengths
        self._rmult = rmult
        self._gen_perms = gen_perms
        self.order = len(perms)

        self._lmult = [
            [index[compose(gen_perms[i], p)] for i in range(n)] for p in perms
        ]
        self._inverse = []
        for p in perms:
            inv = [0] * npos
            for r, t in enumerate(p):
                inv[abs(t) - 1] = (r + 1) if t > 0 else -(r + 1)
            self._inverse.append(index[tuple(inv)])

        # construction self-checks
        if self.order != expected:
            raise WeylError(
                f"enumerated order {self.order} != expected {expected} for {datum.label}"
            )
        for k, p in enumerate(perms):
            neg = sum(1 for t in p if t < 0)
            if neg != lengths[k]:
                raise WeylError("length != number of inverted positive roots")
        tops = [k for k, l in enumerate(lengths) if l == npos]
        if len(tops) != 1 or lengths.count(0) != 1:
            raise WeylError("longest/identity element not unique")
        self._w0 = tops[0]
        for k in range(self.order):
            if lengths[self._index_mul(self._w0, k)] != npos - lengths[k]:
                raise WeylError("length duality l(w0 x) = l(w0) - l(x) failed")

        self._words: dict[int, tuple[int, ...]] = {0: ()}
        self._bruhat: list[int] | None = None

    # -- internal helpers ----------------------------------------------

    def _index_mul(self, i: int, j: int) -> int:
        return self._index[self._compose(self._perms[i], self._perms[j])]

    def _check_same_group(self, *elts: WeylElt) -> None:
        for x in elts:
            if x.group is not self:
                raise MixedGroups("elements belong to different Weyl groups")

    # -- basic structure -----------------------------------------------

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def n_positive_roots(self) -> int:
        return len(self.positive_roots)

    def element(self, idx: int) -> WeylElt:
        if not 0 <= idx < self.order:
            raise WeylError(f"element id {idx} out of range")
        return WeylElt(self, idx)

    def elements(self) -> list[WeylElt]:
        return [WeylElt(self, k) for k in range(self.order)]

    @property
    def identity(self) -> WeylElt:
        return WeylElt(self, 0)

    @property
    def w0(self) -> WeylElt:
        return WeylElt(self, self._w0)

    def simple(self, i: int) -> WeylElt:
        """The simple reflection s_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise WeylError(f"no simple reflection with index {i}")
        return WeylElt(self, self._rmult[0][i - 1])

    def length(self, x: WeylElt) -> int:
        self._check_same_group(x)
        return self._lengths[x.idx]

    def multiply(self, x: WeylElt, y: WeylElt) -> WeylElt:
        self._check_same_group(x, y)
        return WeylElt(self, self._index_mul(x.idx, y.idx))

    def inverse(self, x: WeylElt) -> WeylElt:
        self._check_same_group(x)
        return WeylElt(self, self._inverse[x.idx])

    def right_multiply_gen(self, x: WeylElt, i: int) -> WeylElt:
        self._check_same_group(x)
        return WeylElt(self, self._rmult[x.idx][i - 1])

    def left_multiply_gen(self, i: int, x: WeylElt) -> WeylElt:
        self._check_same_group(x)
        return WeylElt(self, self._lmult[x.idx][i - 1])

    def left_descents(self, x: WeylElt) -> tuple[int, ...]:
        self._check_same_group(x)
        k = x.idx
        return tuple(
            i + 1
            for i in range(self.rank)
            if self._lengths[self._lmult[k][i]] < self._lengths[k]
        )

    def right_descents(self, x: WeylElt) -> tuple[int, ...]:
        self._check_same_group(x)
        k = x.idx
        return tuple(
            i + 1
            for i in range(self.rank)
            if self._lengths[self._rmult[k][i]] < self._lengths[k]
        )

    # -- reduced words ---------------------------------------------------

    def reduced_word(self, x: WeylElt) -> tuple[int, ...]:
        """Lexicographically smallest reduced word of x (1-based letters)."""
        self._check_same_group(x)
        k = x.idx
        missing = []
        while k not in self._words:
            missing.append(k)
            i = min(
                i
                for i in range(self.rank)
                if self._lengths[self._lmult[k][i]] < self._lengths[k]
            )
            k = self._lmult[k][i]
        for k in reversed(missing):
            i = min(
                i
                for i in range(self.rank)
                if self._lengths[self._lmult[k][i]] < self._lengths[k]
            )
            self._words[k] = (i + 1,) + self._words[self._lmult[k][i]]
        return self._words[x.idx]

    def element_by_word(self, word: tuple[int, ...] | list[int]) -> WeylElt:
        k = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise MalformedWord(f"malformed word: letter {i} out of range")
            k = self._rmult[k][i - 1]
        return WeylElt(self, k)

    def name(self, x: WeylElt) -> str:
        """Canonical dot-separated name, 'e' for the identity."""
        w = self.reduced_word(x)
        return ".".join(str(i) for i in w) if w else "e"

    def parse_word(self, text: str) -> WeylElt:
        """Parse 'e', 'w0', 's' (= s_1) or a dot-separated word like '1.2.1'."""
        t = text.strip()
        if t in ("e", ""):
            return self.identity
        if t == "w0":
            return self.w0
        if t == "s":
            return self.simple(1)
        try:
            word = [int(tok) for tok in t.split(".")]
        except ValueError:
            raise MalformedWord(f"malformed word string: {text!r}") from None
        return self.element_by_word(word)

    # -- Bruhat order ------------------------------------------------------

    def _bruhat_table(self) -> list[int]:
        # row y = bitmask of {x : x <= y}; built through the lifting property
        if self._bruhat is not None:
            return self._bruhat
        rows: list[int] = [0] * self.order
        rows[0] = 1
        for y in range(1, self.order):
            i = min(
                i
                for i in range(self.rank)
                if self._lengths[self._lmult[y][i]] < self._lengths[y]
            )
            sy_row = rows[self._lmult[y][i]]
            acc = 0
            for x in range(self.order):
                sx = self._lmult[x][i]
                if self._lengths[sx] < self._lengths[x]:
                    bit = (sy_row >> sx) & 1
                else:
                    bit = ((sy_row >> x) | (sy_row >> sx)) & 1
                acc |= bit << x
            rows[y] = acc
        self._bruhat = rows
        return rows

    def bruhat_leq(self, x: WeylElt, y: WeylElt) -> bool:
        self._check_same_group(x, y)
        return bool((self._bruhat_table()[y.idx] >> x.idx) & 1)

    def bruhat_covers(self) -> list[tuple[WeylElt, WeylElt]]:
        """All pairs (x, y) with x < y and l(y) = l(x) + 1."""
        rows = self._bruhat_table()
        out = []
        for y in range(self.order):
            for x in range(self.order):
                if (
                    x != y
                    and (rows[y] >> x) & 1
                    and self._lengths[y] == self._lengths[x] + 1
                ):
                    out.append((WeylElt(self, x), WeylElt(self, y)))
        return out

    # -- export ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        lengths = {self.name(x): self.length(x) for x in self.elements()}
        covers = sorted(
            [self.name(a), self.name(b)] for a, b in self.bruhat_covers()
        )
        return {
            "schema": 1,
            "type": self.datum.label,
            "order": self.order,
            "positive_roots": self.n_positive_roots,
            "longest": self.name(self.w0),
            "lengths": lengths,
            "covers": covers,
        }

    def __repr__(self) -> str:
        return f"WeylGroup({self.datum.label}, order={self.order})"


def build_group(datum: CartanDatum, cap: int = DEFAULT_ENUMERATION_CAP) -> WeylGroup:
    """Enumerate the Weyl group of the given Cartan datum."""
    return WeylGroup(datum, cap=cap)


def weyl_suite(g: WeylGroup):
    """Structural checks on an enumerated group, as a verification report."""
    from .report import VerificationReport

    rep = VerificationReport("weyl")
    rep.run(
        "weyl.order_formula",
        lambda: (g.order == g.datum.expected_order(), f"order {g.order}"),
    )
    rep.run(
        "weyl.longest_element",
        lambda: (
            g.length(g.w0) == g.n_positive_roots
            and g.multiply(g.w0, g.w0) == g.identity,
            f"l(w0) = {g.n_positive_roots}, w0 is an involution",
        ),
    )
    rep.run(
        "weyl.length_duality",
        lambda: (
            all(
                g.length(g.multiply(g.w0, x)) == g.length(g.w0) - g.length(x)
                for x in g.elements()
            ),
            "l(w0 x) = l(w0) - l(x)",
        ),
    )
    rep.run(
        "weyl.exchange_condition",
        lambda: (
            all(
                abs(g.length(g.left_multiply_gen(i, x)) - g.length(x)) == 1
                for x in g.elements()
                for i in range(1, g.rank + 1)
            ),
            "l(s x) = l(x) +- 1",
        ),
    )
    rep.run(
        "weyl.reduced_words",
        lambda: (
            all(
                len(g.reduced_word(x)) == g.length(x)
                and g.element_by_word(g.reduced_word(x)) == x
                for x in g.elements()
            ),
            "lexicographically minimal words multiply back",
        ),
    )

    def bruhat_order():
        rows = g._bruhat_table()
        for x in range(g.order):
            if not (rows[x] >> x) & 1:
                return False, "not reflexive"
        for y in range(g.order):
            for x in range(g.order):
                if x != y and (rows[y] >> x) & 1:
                    if g._lengths[x] >= g._lengths[y]:
                        return False, "does not refine length"
        if g.order <= 1152:
            for y in range(g.order):
                for z in range(g.order):
                    if (rows[z] >> y) & 1 and rows[y] & rows[z] != rows[y]:
                        return False, "not transitive"
        return True, "reflexive, length-refining, transitive"

    rep.run("weyl.bruhat_partial_order", bruhat_order)
    return rep
