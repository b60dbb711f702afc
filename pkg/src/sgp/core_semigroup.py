"""Generic numerical-semigroup engine.

A numerical semigroup is the set of all non-negative integer combinations
of a finite set of positive generators whose gcd is 1.  Everything in this
module is exact integer arithmetic over explicit factorization sets, with
no closed forms: the point is to be slow, obvious and trustworthy, so that
the fast paths in the sibling modules can be checked against it.

Conventions used throughout:

- a factorization of r is an exponent vector over the *minimal* generators,
  represented as a tuple of non-negative ints;
- every collection-valued operation returns a sorted list (ints ascending,
  vectors lexicographic, chains by construction order), so output is
  reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd


class NotMemberError(ValueError):
    """An operation was asked about an integer outside the semigroup."""


class Factorization(tuple):
    """Exponent vector over the minimal generators of a semigroup."""

    __slots__ = ()

    @property
    def length(self) -> int:
        return sum(self)

    def value(self, gens) -> int:
        return sum(c * g for c, g in zip(self, gens))


class Semigroup:
    """The numerical semigroup generated by a set of positive integers.

    Construction validates the input (nonempty, positive, gcd 1), derives
    the minimal generating set, the Frobenius number and a membership
    table covering every integer up to the Frobenius number.  Instances
    are immutable after construction and safe to share between threads.
    """

    __slots__ = ("generators", "minimal_generators", "frobenius", "_member")

    def __init__(self, generators):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise ValueError("need at least one generator")
        if gens[0] <= 0:
            raise ValueError("generators must be positive, got %d" % gens[0])
        g = reduce(gcd, gens)
        if g != 1:
            raise ValueError(
                "not a numerical semigroup: gcd of generators is %d" % g)
        self.generators = tuple(gens)
        self._build_member_table()
        n1 = gens[0]
        # g is a minimal generator unless it splits as s + t with both
        # parts nonzero members; s only needs to run over [n1, g - n1].
        self.minimal_generators = tuple(
            g for g in gens
            if not any(s in self and (g - s) in self
                       for s in range(n1, g - n1 + 1)))

    def _build_member_table(self):
        gens = self.generators
        n1 = gens[0]
        # Generous first guess (exact for two coprime generators); the
        # doubling loop covers semigroups where no two generators are
        # coprime and the Frobenius number exceeds it.
        size = n1 * gens[-1] + n1 + 1
        while True:
            table = bytearray(size)
            table[0] = 1
            for n in range(n1, size):
                for g in gens:
                    if g > n:
                        break
                    if table[n - g]:
                        table[n] = 1
                        break
            # n1 consecutive members mark the conductor: everything at or
            # beyond the start of the run is a member.
            run = 0
            conductor = None
            for n in range(size):
                run = run + 1 if table[n] else 0
                if run == n1:
                    conductor = n - n1 + 1
                    break
            if conductor is not None:
                break
            size *= 2
        self.frobenius = conductor - 1
        self._member = bytes(table[:conductor])

    def __contains__(self, n) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return bool(self._member[n])

    def value(self, coords) -> int:
        """Value of an exponent vector over the minimal generators."""
        return sum(c * g for c, g in zip(coords, self.minimal_generators))

    def __repr__(self):
        return "Semigroup(%s)" % ", ".join(map(str, self.minimal_generators))


@dataclass(frozen=True)
class FactorizationGraph:
    """The graph on F(r, S) joining factorizations with overlapping support.

    Two exponent vectors are adjacent exactly when their dot product is
    positive, which for non-negative vectors means they share a generator.
    """

    element: int
    vertices: tuple
    edges: tuple  # (i, j) index pairs into vertices, i < j
    n_components: int


@dataclass(frozen=True)
class BettiClassification:
    """Betti elements split by whether their length set is a singleton."""

    betti: tuple
    balanced: tuple
    unbalanced: tuple


@dataclass(frozen=True)
class Presentation:
    """Pairs of distinct factorizations of equal value."""

    relations: tuple


def minimal_generators(gens):
    """The unique minimal generating set of <gens>, ascending.

    Rejects empty input, non-positive entries and gcd != 1.
    """
    return list(Semigroup(gens).minimal_generators)


def factorizations(S: Semigroup, r: int):
    """All exponent vectors x with sum(x_i * n_i) = r, lexicographic.

    Bounded recursive descent over the minimal generators; empty exactly
    when r is not a member.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    gens = S.minimal_generators
    e = len(gens)
    out = []
    coords = [0] * e

    def descend(i, rem):
        if i == e - 1:
            q, rest = divmod(rem, gens[i])
            if rest == 0:
                coords[i] = q
                out.append(Factorization(coords))
                coords[i] = 0
            return
        g = gens[i]
        for x in range(rem // g + 1):
            coords[i] = x
            descend(i + 1, rem - x * g)
        coords[i] = 0

    descend(0, r)
    return out


def denumerant(S: Semigroup, r: int) -> int:
    """Number of factorizations of r (0 when r is not a member)."""
    return len(factorizations(S, r))


def length_set(S: Semigroup, r: int):
    """Sorted set of factorization lengths of a member r."""
    if r not in S:
        raise NotMemberError("%d is not in %r" % (r, S))
    return sorted({f.length for f in factorizations(S, r)})


def length_sets_up_to(S: Semigroup, bound: int):
    """length_set for every r in [0, bound] at once, by dynamic programming.

    Entry r is None when r is not a member.  The sweeps use this instead
    of per-element factorization enumeration, which would dominate their
    runtime; the recurrence L(r) = union of (L(r - g) + 1) over generators
    is checked against length_set pointwise in the test suite.
    """
    gens = S.minimal_generators
    table = [None] * (bound + 1)
    if bound >= 0:
        table[0] = {0}
    for r in range(1, bound + 1):
        acc = None
        for g in gens:
            if g > r:
                break
            prev = table[r - g]
            if prev is None:
                continue
            if acc is None:
                acc = set()
            acc.update(l + 1 for l in prev)
        table[r] = acc
    return table


def apery(S: Semigroup, x: int):
    """Ap(S, x) = {s in S : s - x not in S}, sorted ascending.

    Exactly the least member of each residue class mod x, hence exactly
    x elements.  x must be a nonzero member.
    """
    if x == 0:
        raise ValueError("the Apery set of 0 is not defined")
    if x not in S:
        raise NotMemberError("%d is not in %r" % (x, S))
    top = S.frobenius + x
    return [s for s in range(top + 1) if s in S and (s - x) not in S]


def apery_multi(S: Semigroup, xs, bound=None):
    """Ap(S, X) = S minus (X + S), the intersection of the Apery sets.

    For X = {} this is all of S, which is infinite, so an explicit bound
    is required and the members up to it are returned.
    """
    xs = sorted(set(xs))
    if not xs:
        if bound is None:
            raise ValueError("Ap(S, {}) is all of S; pass an explicit bound")
        return [s for s in range(bound + 1) if s in S]
    if 0 in xs:
        raise ValueError("the Apery set of 0 is not defined")
    for x in xs:
        if x not in S:
            raise NotMemberError("%d is not in %r" % (x, S))
    # Anything above frobenius + max(xs) is max(xs) + member, so excluded.
    top = S.frobenius + xs[-1]
    return [s for s in range(top + 1)
            if s in S and all((s - x) not in S for x in xs)]


def _component_count(verts) -> int:
    # Union-find over shared support: a positive dot product between
    # non-negative vectors means some coordinate is positive in both.
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    first_use = {}
    for idx, v in enumerate(verts):
        for coord, x in enumerate(v):
            if x:
                if coord in first_use:
                    ri, rj = find(first_use[coord]), find(idx)
                    if ri != rj:
                        parent[ri] = rj
                else:
                    first_use[coord] = idx
    return len({find(i) for i in range(len(verts))})


def nabla_graph(S: Semigroup, r: int) -> FactorizationGraph:
    """The factorization graph of a member r."""
    if r not in S:
        raise NotMemberError("%d is not in %r" % (r, S))
    verts = factorizations(S, r)
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if any(u and v for u, v in zip(verts[i], verts[j])):
                edges.append((i, j))
    return FactorizationGraph(r, tuple(verts), tuple(edges),
                              _component_count(verts))


def betti_elements(S: Semigroup, scan_bound=None) -> BettiClassification:
    """All members with a disconnected factorization graph, classified.

    The scan covers [0, frobenius + n_1 + n_e].  That is exhaustive: for
    larger r every generator pair n_1, n_j leaves r - n_1 - n_j in S, so
    each factorization connects through the n_1-using ones and the graph
    is connected.  (For two coprime generators a, b the bound collapses
    to ab, which is the unique Betti element, so it is tight.)  A larger
    scan_bound can be passed to double-check.
    """
    gens = S.minimal_generators
    bound = scan_bound
    if bound is None:
        bound = S.frobenius + gens[0] + gens[-1]
    betti, balanced, unbalanced = [], [], []
    for r in range(bound + 1):
        if r not in S:
            continue
        verts = factorizations(S, r)
        if len(verts) < 2 or _component_count(verts) == 1:
            continue
        betti.append(r)
        if len({v.length for v in verts}) == 1:
            balanced.append(r)
        else:
            unbalanced.append(r)
    return BettiClassification(tuple(betti), tuple(balanced),
                               tuple(unbalanced))


def ulf(S: Semigroup, bound=None, scan_bound=None):
    """All members whose factorization length set is a singleton.

    Computed as Ap(S, UBetti(S)), which is finite whenever some Betti
    element has two factorization lengths; among numerical semigroups
    only N itself (generated by 1) has none, and then an explicit bound
    is required because every member qualifies.
    """
    cls = betti_elements(S, scan_bound)
    if not cls.unbalanced:
        if bound is None:
            raise ValueError(
                "every member of %r has a one-length factorization set; "
                "pass an explicit bound" % S)
        return [s for s in range(bound + 1) if s in S]
    return apery_multi(S, cls.unbalanced)


def min_ulf_breaker(S: Semigroup, scan_bound=None):
    """The least member with two factorization lengths among Betti elements.

    Every member below it has a singleton length set and it does not.
    None when there is no unbalanced Betti element (S = N).
    """
    cls = betti_elements(S, scan_bound)
    return min(cls.unbalanced) if cls.unbalanced else None
