"""Closed forms for semigroups generated by three consecutive integers.

Throughout, S = <a, a+1, a+2> with a >= 3.  Write ell_r = floor(r / a) and
eps_r = r mod a.  Then r is a member iff eps_r <= 2 * ell_r, and the vector

    phi_r = (ell_r - floor((eps_r + 1) / 2), eps_r mod 2, floor(eps_r / 2))

is a factorization of r whenever it is non-negative.  Any two
factorizations of the same element with equal length differ by a multiple
of omega = (-1, 2, -1), the trade of one a and one a+2 for two copies of
a+1.  Below the threshold L_a (the least element with two factorization
lengths) the factorization set of r is exactly the omega-orbit
{phi_r + j*omega : 0 <= j <= kappa_r} with kappa_r = min(phi_1, phi_3);
the same formula extends to every unique-length element, because the
box coordinates of the Apery-set description coincide with phi_r there.

Everything here is O(1) or O(a^2) arithmetic with no caching, so the
functions are freely usable from concurrent code.  The brute-force
counterparts in core_semigroup are the reference implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core_semigroup import (
    BettiClassification,
    Factorization,
    NotMemberError,
    Presentation,
    Semigroup,
    factorizations,
)

# Trading one a and one a+2 for two copies of a+1 keeps the value fixed.
OMEGA = (-1, 2, -1)

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _check_a(a):
    if a < 3:
        # a = 1 gives N, where factorizations are unique, and a = 2 gives
        # <2, 3>, where all factorization lengths of an element differ;
        # the formulas in this module assume neither degenerate shape.
        raise ValueError("need a >= 3, got %r" % (a,))


def _threshold(a):
    # least element of <a, a+1, a+2> with two factorization lengths
    return (a // 2) * (a + 2) if a % 2 == 0 else (a // 2 + 2) * a


class TripleSemigroup:
    """Derived constants of <a, a+1, a+2>.

    L is the largest length realized below the threshold, D the largest
    denumerant there, frob the Frobenius number and ulf_bound the
    threshold L_a itself.
    """

    __slots__ = ("a", "generators", "L", "D", "frob", "ulf_bound")

    def __init__(self, a):
        _check_a(a)
        self.a = a
        self.generators = (a, a + 1, a + 2)
        self.L = (a - 1) // 2
        self.D = (a + 3) // 4
        self.frob = (a // 2) * a - 1
        self.ulf_bound = _threshold(a)

    def __repr__(self):
        return "TripleSemigroup(%d)" % self.a


@dataclass(frozen=True)
class SeedDescriptor:
    """phi_r and the statistics derived from it.

    kappa / xi are min / max of the outer coordinates, iota is
    phi_2 + |phi_1 - phi_3| and c = phi_3 - phi_1 = eps_r - ell_r.
    """

    r: int
    ell: int
    eps: int
    phi: tuple
    kappa: int
    xi: int
    iota: int
    c: int


@dataclass(frozen=True)
class TripleDecomposition:
    """The unique (d, i, c) with r = (a+1)(2d - 2 + i) + c and c in Gamma_i."""

    d: int
    i: int
    c: int


@dataclass(frozen=True)
class UlfElement:
    """A unique-length member with its canonical box coordinates.

    r = lam * a + mu * (a+1) + eta * (a+2), with mu in {0, 1} and the
    (lam, eta) ranges cut by parity as in ulf_triple.
    """

    r: int
    lam: int
    mu: int
    eta: int


def seed(a, r) -> SeedDescriptor:
    """Seed data of r; pure arithmetic, defined for every r >= 0.

    phi has a negative first coordinate exactly when r is not a member.
    """
    _check_a(a)
    if r < 0:
        raise ValueError("r must be non-negative")
    ell, eps = divmod(r, a)
    phi = (ell - (eps + 1) // 2, eps % 2, eps // 2)
    return SeedDescriptor(r, ell, eps, phi, min(phi[0], phi[2]),
                          max(phi[0], phi[2]),
                          phi[1] + abs(phi[0] - phi[2]), phi[2] - phi[0])


def member_triple(a, r) -> bool:
    """Membership test: r mod a <= 2 * floor(r / a)."""
    _check_a(a)
    return r >= 0 and r % a <= 2 * (r // a)


def ubetti_triple(a) -> BettiClassification:
    """Betti elements of <a, a+1, a+2>, split balanced / unbalanced.

    The balanced one is 2(a+1) = a + (a+2), both sides of length 2.  The
    unbalanced ones are (a/2)(a+2) for even a, and ((a+3)/2)a together
    with ((a+1)/2)(a+2) for odd a; each carries a long power-of-a
    factorization against a shorter one.
    """
    _check_a(a)
    balanced = (2 * (a + 1),)
    if a % 2 == 0:
        unbalanced = ((a // 2) * (a + 2),)
    else:
        unbalanced = (((a - 1) // 2 + 2) * a, ((a - 1) // 2 + 1) * (a + 2))
    return BettiClassification(tuple(sorted(balanced + unbalanced)),
                               balanced, unbalanced)


def ulf_membership_triple(a, r) -> bool:
    """Whether all factorizations of r share one length, in O(1).

    A member qualifies iff subtracting any unbalanced Betti element lands
    outside the semigroup.
    """
    if not member_triple(a, r):
        return False
    return all(not member_triple(a, r - u)
               for u in ubetti_triple(a).unbalanced)


def _omega_orbit(sd: SeedDescriptor):
    phi = sd.phi
    return [Factorization((phi[0] - j, phi[1] + 2 * j, phi[2] - j))
            for j in range(sd.kappa + 1)]


def factorizations_triple(a, r):
    """F(r, S) by closed form for unique-length members, ordered by j.

    For those, the whole set is the omega-orbit of the seed vector.  A
    member with two factorization lengths is delegated to the generic
    engine instead.
    """
    if not member_triple(a, r):
        raise NotMemberError("%d is not in <%d, %d, %d>" % (r, a, a + 1, a + 2))
    if not ulf_membership_triple(a, r):
        return factorizations(Semigroup((a, a + 1, a + 2)), r)
    return _omega_orbit(seed(a, r))


def _seed_below_threshold(a, r) -> SeedDescriptor:
    if not member_triple(a, r):
        raise NotMemberError("%d is not in <%d, %d, %d>" % (r, a, a + 1, a + 2))
    if r >= _threshold(a):
        raise ValueError(
            "%d is not below the two-length threshold %d; use the generic "
            "engine there" % (r, _threshold(a)))
    return seed(a, r)


def denumerant_triple(a, r) -> int:
    """kappa_r + 1, the factorization count below the threshold."""
    return _seed_below_threshold(a, r).kappa + 1


def length_triple(a, r) -> int:
    """The single factorization length floor(r / a) of a unique-length member."""
    if not member_triple(a, r):
        raise NotMemberError("%d is not in <%d, %d, %d>" % (r, a, a + 1, a + 2))
    if not ulf_membership_triple(a, r):
        raise ValueError(
            "%d has factorizations of two different lengths" % r)
    return r // a


def decompose_triple(a, r) -> TripleDecomposition:
    """The unique (d, i, c) with r = (a+1)(2d - 2 + i) + c, c in Gamma_i.

    d is the denumerant of r and 2d - 2 + i its factorization length;
    only defined below the two-length threshold.
    """
    sd = _seed_below_threshold(a, r)
    return TripleDecomposition(sd.kappa + 1, sd.iota, sd.c)


def gamma(i):
    """Gamma_0 = {0}, Gamma_1 = {-1, 0, 1}, Gamma_i = {-i, -i+1, i-1, i}."""
    if i < 0:
        raise ValueError("i must be non-negative")
    if i == 0:
        return [0]
    if i == 1:
        return [-1, 0, 1]
    return [-i, -i + 1, i - 1, i]


def s_ell(a, ell):
    """S^ell, the members whose single factorization length is ell.

    Always a (possibly empty) interval, returned as a range.  Below
    k = floor(a / 2) it is [ell*a, ell*(a+2)] for either parity; the top
    rows shrink because the box coordinates run out, and beyond ell = a
    the set is empty.
    """
    _check_a(a)
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if ell > a:
        return range(0)
    k = a // 2
    if a % 2 == 0:
        if ell < k:
            lo, hi = ell * a, ell * (a + 2)
        elif ell == k:
            lo, hi = k * a, k * a + a - 1
        else:
            lo = k * a + (a + 1) + (ell - k - 1) * (a + 2)
            hi = (ell - k) * a + (a + 1) + (k - 1) * (a + 2)
    else:
        if ell <= k:
            lo, hi = ell * a, ell * (a + 2)
        else:
            lo = (k + 1) * a + (ell - k - 1) * (a + 2)
            hi = (ell - k) * a + k * (a + 2)
    return range(lo, hi + 1)


def s_d_i(a, d, i):
    """S_{d,i} = {(a+1)(2d - 2 + i) + c : c in Gamma_i}, ascending.

    These are the elements of denumerant d and length 2d - 2 + i; valid
    for 1 <= d <= D and 0 <= i <= L + 2 - 2d.
    """
    ts = TripleSemigroup(a)
    if not 1 <= d <= ts.D:
        raise ValueError("need 1 <= d <= %d, got %d" % (ts.D, d))
    cap = ts.L + 2 - 2 * d
    if not 0 <= i <= cap:
        raise ValueError("need 0 <= i <= %d for d=%d, got %d" % (cap, d, i))
    base = (a + 1) * (2 * d - 2 + i)
    return [base + c for c in gamma(i)]


def s_d_ulf(a, d):
    """The unique-length members of denumerant d, ascending.

    Two box families meet here: eta pinned high with lam = d - 1, and lam
    running with eta pinned at d - 1.  For odd a the top denumerant
    d = (a+1)/2 survives only at two corner elements.
    """
    _check_a(a)
    top = (a + 1) // 2
    if not 1 <= d <= top:
        raise ValueError("need 1 <= d <= %d, got %d" % (top, d))
    if a % 2 and d == top:
        k = (a - 1) // 2
        return [k * a + k * (a + 2), (k + 1) * a + k * (a + 2)]
    out = set()
    if a % 2 == 0:
        for mu in (0, 1):
            for eta in range(d - 1, a // 2):
                out.add((d - 1) * a + mu * (a + 1) + eta * (a + 2))
            for lam in range(d, a // 2 + 1):
                out.add(lam * a + mu * (a + 1) + (d - 1) * (a + 2))
    else:
        k = (a - 1) // 2
        for mu in (0, 1):
            for eta in range(d - 1, k - mu + 1):
                out.add((d - 1) * a + mu * (a + 1) + eta * (a + 2))
            for lam in range(d, k + 2 - mu):
                out.add(lam * a + mu * (a + 1) + (d - 1) * (a + 2))
    return sorted(out)


def ulf_triple(a):
    """Every unique-length member with its box coordinates, ascending in r.

    The expression lam*a + mu*(a+1) + eta*(a+2) over the parity-cut box
    (even a: lam <= a/2, mu <= 1, eta <= a/2 - 1; odd a: lam <= (a+1)/2 - mu,
    eta <= (a-1)/2 - mu) hits each unique-length element exactly once, so
    the count is (a/2)(a+2) for even a and (a+1)^2 / 2 for odd a.
    """
    _check_a(a)
    out = []
    if a % 2 == 0:
        for mu in (0, 1):
            for lam in range(a // 2 + 1):
                for eta in range(a // 2):
                    out.append(UlfElement(
                        lam * a + mu * (a + 1) + eta * (a + 2), lam, mu, eta))
    else:
        k = (a - 1) // 2
        for mu in (0, 1):
            for lam in range(k + 2 - mu):
                for eta in range(k + 1 - mu):
                    out.append(UlfElement(
                        lam * a + mu * (a + 1) + eta * (a + 2), lam, mu, eta))
    out.sort(key=lambda u: u.r)
    return out


def presentation_triple(a) -> Presentation:
    """A minimal presentation of <a, a+1, a+2>.

    Writing a = 2c + b with b in {1, 2}: the short relator trades
    2(a+1) for a + (a+2); the long relators tie the ends of the Apery box
    together, one for even a and two for odd a.
    """
    _check_a(a)
    b = 2 if a % 2 == 0 else 1
    c = (a - b) // 2
    pairs = [(Factorization((0, 2, 0)), Factorization((1, 0, 1)))]
    if b == 2:
        pairs.append((Factorization((c + 2, 0, 0)),
                      Factorization((0, 0, c + 1))))
    else:
        pairs.append((Factorization((c + 1, 1, 0)),
                      Factorization((0, 0, c + 1))))
        pairs.append((Factorization((c + 2, 0, 0)),
                      Factorization((0, 1, c))))
    return Presentation(tuple(pairs))


def _monomial(vec, superscript=False) -> str:
    parts = []
    for name, exp in zip("xyz", vec):
        if exp == 0:
            continue
        if exp == 1:
            parts.append(name)
        elif superscript:
            parts.append(name + str(exp).translate(_SUPERSCRIPTS))
        else:
            parts.append("%s^%d" % (name, exp))
    return "".join(parts) or "1"


def monomial_basis(a, r, superscript=False):
    """The omega-orbit of r rendered as monomials in x, y, z, ordered by j.

    Exponent 1 is omitted, exponent 0 drops the variable and the zero
    vector renders as "1".  ASCII carets by default ("x^2yz"); pass
    superscript=True for Unicode exponents.  Only defined below the
    two-length threshold, where the orbit is the whole basis of r.
    """
    sd = _seed_below_threshold(a, r)
    return [_monomial(f, superscript) for f in _omega_orbit(sd)]
