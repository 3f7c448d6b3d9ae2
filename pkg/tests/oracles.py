"""Slow, independent reference computations used to cross-check the library.

Nothing here imports the array code paths: words are plain tuples and every
ball is rebuilt from scratch.
"""

import itertools
from fractions import Fraction


def all_reduced_words(k, n):
    """Every reduced word of length <= n, by filtering all letter strings."""
    out = []
    for length in range(n + 1):
        for w in itertools.product(range(1, k + 2), repeat=length):
            if all(a != b for a, b in zip(w, w[1:])):
                out.append(w)
    return out


def a_parity(w, A):
    return sum(1 for a in w if a in A) % 2


def naive_class(w, A, index):
    if index == 2:
        return a_parity(w, A)
    return a_parity(w, A) + 2 * (len(w) % 2)


def naive_spin(w, A, index, table, root_parent):
    c = naive_class(w, A, index)
    j = root_parent if not w else naive_class(w[:-1], A, index)
    return table[(j, c)]


def naive_neighbours(w, k):
    out = [w[:-1]] if w else []
    out += [w + (a,) for a in range(1, k + 2) if not w or a != w[-1]]
    return out


def naive_ball_classes(k, A, index, table, n, root_parent):
    """Set of ball classes over centres at depth 2..n-1, walking tuples."""
    spins = {w: naive_spin(w, A, index, table, root_parent) for w in all_reduced_words(k, n)}
    seen = set()
    for w, s in spins.items():
        if 2 <= len(w) <= n - 1:
            seen.add(sum(1 for y in naive_neighbours(w, k) if spins[y] != s))
    return seen


def naive_levels(k, J1, J2):
    """Ball energies by direct summation over one representative per class."""
    out = []
    for i in range(k + 2):
        leaves = [-1] * i + [1] * (k + 1 - i)
        bonds = sum(leaves)
        pairs = sum(a * b for a, b in itertools.combinations(leaves, 2))
        out.append(Fraction(J1) * bonds / 2 + Fraction(J2) * pairs)
    return out


def naive_energy(spins, k, n, J1, J2):
    """Free-boundary Hamiltonian on V_n by summing over all vertex pairs at distance 1 and 2."""
    words = all_reduced_words(k, n)

    def dist(x, y):
        p = 0
        while p < min(len(x), len(y)) and x[p] == y[p]:
            p += 1
        return len(x) + len(y) - 2 * p

    bonds = pairs = 0
    for x, y in itertools.combinations(words, 2):
        d = dist(x, y)
        if d == 1:
            bonds += spins[x] * spins[y]
        elif d == 2:
            pairs += spins[x] * spins[y]
    return Fraction(J1) * bonds + Fraction(J2) * pairs
