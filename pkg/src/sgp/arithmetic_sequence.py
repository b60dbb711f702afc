"""Betti data for semigroups generated by generalized arithmetic sequences.

S = <a, a+d, ..., a+nd> with gcd(a, d) = 1 and 1 <= n <= a - 1, which
makes the listed generators minimal.  Writing a = c*n + b with b in
[1, n], a minimal presentation consists of the exchange relators
e_i + e_{j+1} = e_j + e_{i+1} (all of degree 2a + (i+j-1)d) plus a family
of long relators (c+d)e_1 + e_{k-2} = c*e_{n+1} + e_{b+k-2} for
k in [3, n+3-b], whose two sides have lengths c+d+1 and c+1.  The long
relators are exactly the ones witnessing two different factorization
lengths, so their degrees form the unbalanced Betti elements.

Indices here follow the 1-based e_1 .. e_{n+1} convention of the
formulas; vectors are stored 0-based.
"""

from __future__ import annotations

from math import gcd

from .core_semigroup import Factorization, Presentation


class ArithSemigroup:
    """<a, a+d, ..., a+nd> with the derived split a = c*n + b."""

    __slots__ = ("a", "d", "n", "b", "c", "generators")

    def __init__(self, a, d, n):
        if a < 2 or d < 1 or n < 1:
            raise ValueError("need a >= 2, d >= 1, n >= 1")
        if n > a - 1:
            raise ValueError(
                "need n <= a - 1, otherwise the generators are not minimal")
        if gcd(a, d) != 1:
            raise ValueError("a and d must be coprime, got gcd %d" % gcd(a, d))
        self.a, self.d, self.n = a, d, n
        self.b = (a - 1) % n + 1
        self.c = (a - self.b) // n  # n <= a - 1 forces c >= 1
        self.generators = tuple(a + i * d for i in range(n + 1))

    def __repr__(self):
        return "ArithSemigroup(a=%d, d=%d, n=%d)" % (self.a, self.d, self.n)


def presentation_arith(S: ArithSemigroup) -> Presentation:
    """The minimal presentation: exchange relators plus the long family."""
    n, b, c, d = S.n, S.b, S.c, S.d
    e = n + 1
    pairs = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            x = [0] * e
            x[i - 1] += 1
            x[j] += 1  # e_i + e_{j+1}
            y = [0] * e
            y[j - 1] += 1
            y[i] += 1  # e_j + e_{i+1}
            pairs.append((Factorization(x), Factorization(y)))
    for k in range(3, n + 4 - b):
        x = [0] * e
        x[0] = c + d
        x[k - 3] += 1  # (c+d) e_1 + e_{k-2}
        y = [0] * e
        y[e - 1] = c
        y[b + k - 3] += 1  # c e_{n+1} + e_{b+k-2}
        pairs.append((Factorization(x), Factorization(y)))
    return Presentation(tuple(pairs))


def betti_arith(S: ArithSemigroup):
    """All Betti elements, ascending: exchange degrees plus the long ones."""
    a, d, n = S.a, S.d, S.n
    out = {(a + i * d) + (a + (j + 1) * d)
           for i in range(n - 1) for j in range(i + 1, n)}
    out.update(ubetti_arith(S))
    return sorted(out)


def ubetti_arith(S: ArithSemigroup):
    """The Betti elements with two factorization lengths, ascending.

    Exactly the degrees of the long relators; the exchange degrees stay
    balanced unless they collide with one of these (possible when c = 1).
    """
    a, d = S.a, S.d
    return sorted({(S.c + d) * a + (a + (k - 3) * d)
                   for k in range(3, S.n + 4 - S.b)})
