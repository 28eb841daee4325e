"""Independent brute-force oracles used by the test suite.

Everything in here deliberately avoids the production code paths it is used
to check: Bruhat order comes from the subword property, orders come from
closed formulas, and Hecke products are re-derived from scratch where needed.
"""

from __future__ import annotations

from heckeo.weyl import WeylElt, WeylGroup


def bruhat_leq_bruteforce(W: WeylGroup, x: WeylElt, y: WeylElt) -> bool:
    """x <= y iff x is a product of some subword of a reduced word of y.

    The set of all subword products of a fixed reduced word of y is exactly
    the Bruhat interval [e, y], so membership is a faithful oracle.
    """
    word = W.reduced_word(y)
    reachable = {W.identity.idx}
    for i in word:
        reachable |= {W.right_multiply_gen(W.element(k), i).idx for k in reachable}
    return x.idx in reachable


def lengths_by_inversions(W: WeylGroup) -> dict[int, int]:
    """Length of every element recomputed as the size of its inversion set,
    walking reduced words letter by letter from scratch."""
    out = {}
    for x in W.elements():
        word = W.reduced_word(x)
        cur = W.identity
        for i in word:
            cur = W.right_multiply_gen(cur, i)
        assert cur == x
        out[x.idx] = len(word)
    return out
