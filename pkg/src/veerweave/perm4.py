"""Permutations of {0,1,2,3} as 4-tuples of images.

Two standard orderings of S4 are provided: lexicographic order on image
tuples, and the even/odd interleaved order (even permutations at even
indices) used by isomorphism-signature codecs.  The interleaved table is
obtained from the lexicographic one by swapping the two entries of every
other adjacent pair, which is exactly what makes the parities line up.
"""

from itertools import permutations

IDENTITY = (0, 1, 2, 3)

ORDERED_S4 = tuple(permutations(range(4)))

PARITY = {}
for _p in ORDERED_S4:
    _inv = sum(1 for i in range(4) for j in range(i + 1, 4) if _p[i] > _p[j])
    PARITY[_p] = 1 if _inv % 2 == 0 else -1


def _interleaved():
    table = []
    for i in range(24):
        j = i ^ 1 if (i // 2) % 2 == 1 else i
        table.append(ORDERED_S4[j])
    return tuple(table)


S4 = _interleaved()

ORDERED_INDEX = {p: i for i, p in enumerate(ORDERED_S4)}
S4_INDEX = {p: i for i, p in enumerate(S4)}

assert all(PARITY[S4[i]] == (1 if i % 2 == 0 else -1) for i in range(24))


def compose(p, q):
    """The permutation "apply q, then p" (function composition p∘q)."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0] * 4
    for i in range(4):
        inv[p[i]] = i
    return tuple(inv)


def sign(p):
    return PARITY[p]
