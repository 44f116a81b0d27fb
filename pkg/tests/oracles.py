"""Literal, slow reference implementations used only by the tests."""

from itertools import product

from multirel import bits


def pair_set(n, r):
    return set(bits.pairs(n, r))


def pack(n, pairs):
    out = 0
    for a, subset in pairs:
        out |= bits.pair_bit(n, a, subset)
    return out


def seq_by_functions(n, r, s):
    """Peleg composition by enumerating every choice function f: B -> 2^X."""
    s_pairs = pair_set(n, s)
    out = set()
    for a, big in pair_set(n, r):
        sources = list(bits.members(big))
        domain_choices = []
        for b in sources:
            domain_choices.append([img for (c, img) in s_pairs if c == b])
        # an empty product over no sources still yields one function
        for choice in product(*domain_choices):
            union = 0
            for img in choice:
                union |= img
            out.add((a, union))
    return pack(n, out)


def diamond_by_definition(n, r, p):
    return bits.dom(n, seq_by_functions(n, r, p))


def box_by_definition(n, r, p):
    comp = bits.one_seq(n) ^ p
    return bits.one_seq(n) ^ bits.dom(n, seq_by_functions(n, r, comp))
