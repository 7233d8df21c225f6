"""Slow, independent reference implementations used only by the tests.

Nothing here imports the engine's algebra code; phases are plain Fractions mod 1.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# generator-level rewriting for the torus


def word_of(r) -> list[tuple[int, int]]:
    """x^r = x_1^{r_1} ... x_n^{r_n} as a list of signed generators (index, +-1)."""
    word = []
    for i, ri in enumerate(r, start=1):
        sign = 1 if ri > 0 else -1
        word.extend([(i, sign)] * abs(ri))
    return word


def normal_order(theta, word) -> tuple[Fraction, tuple[int, ...]]:
    """Bubble-sort a signed word into x_1^* ... x_n^* order.

    Swapping adjacent x_a^e x_b^d with a > b uses x_a x_b = w_ab x_b x_a, i.e.
    x_a^e x_b^d = w_ab^{e d} x_b^d x_a^e.  Returns (phase exponent mod 1, r).
    """
    word = list(word)
    q = Fraction(0)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (a, e), (b, d) = word[k], word[k + 1]
            if a > b:
                q += Fraction(theta[a - 1][b - 1]) * e * d
                word[k], word[k + 1] = word[k + 1], word[k]
                changed = True
    n = len(theta)
    r = [0] * n
    for a, e in word:  # sorted now; x x^* = 1 collapses to an exponent sum
        r[a - 1] += e
    return q % 1, tuple(r)


def oracle_product(theta, r, s):
    return normal_order(theta, word_of(r) + word_of(s))


def oracle_star(theta, r):
    """(x^r)^* reverses the word and inverts each letter."""
    word = [(a, -e) for a, e in reversed(word_of(r))]
    return normal_order(theta, word)


def theta_from_upper(n, upper):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), q in upper.items():
        rows[i - 1][j - 1] = Fraction(q)
        rows[j - 1][i - 1] = -Fraction(q)
    return rows


# ---------------------------------------------------------------------------
# permutations as plain tuples


def pcompose(a, b):
    return tuple(a[k - 1] for k in b)


def pinverse(a):
    out = [0] * len(a)
    for k, img in enumerate(a, start=1):
        out[img - 1] = k
    return tuple(out)


def pall(n):
    return list(itertools.permutations(range(1, n + 1)))


def small_vectors(n, bound):
    return list(itertools.product(range(-bound, bound + 1), repeat=n))
