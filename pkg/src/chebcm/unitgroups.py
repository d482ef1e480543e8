"""Multiplicative residue groups (Z/nZ)^* and the subgroup/quotient bookkeeping
used to describe the Galois structure of the fields Q(zeta_n - zeta_n^(-1)).

Convention: the unit group mod 1 is the trivial group, represented as {0}.
Cosets of a quotient are named by their smallest member.
"""

from __future__ import annotations

import math
from functools import lru_cache

SUBGROUP_CAP = 2**12


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def unit_group(n: int):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (0,)
    return tuple(a for a in range(1, n) if math.gcd(a, n) == 1)


def _mul(n, a, b):
    if n == 1:
        return 0
    return (a * b) % n


def _identity(n):
    return 0 if n == 1 else 1


def subgroup_generated(n: int, gens) -> frozenset:
    """Closure of gens inside (Z/nZ)^*; breadth-first products."""
    gens = [g % n for g in gens]
    for g in gens:
        if math.gcd(g if n > 1 else 1, n) != 1:
            raise ValueError(f"{g} is not a unit mod {n}")
    e = _identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _mul(n, a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
        if len(seen) > SUBGROUP_CAP:
            raise ValueError("subgroup closure exceeded cap")
    return frozenset(seen)


def element_order(n: int, a: int) -> int:
    a %= n
    if n > 1 and math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    e = _identity(n)
    k = 1
    b = a
    while b != e:
        b = _mul(n, b, a)
        k += 1
        if k > n:
            raise AssertionError("order search ran away")
    return k


def kd_kernel(d: int) -> frozenset:
    """Units a mod d with zeta_d^a - zeta_d^(-a) = zeta_d - zeta_d^(-1).

    Trivial unless 4 | d, in which case it is generated by -1 + d/2.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d % 4 != 0:
        return frozenset({_identity(d)})
    return subgroup_generated(d, (d // 2 - 1,))


def kd_is_cm(d: int) -> bool:
    """True when Q(zeta_d - zeta_d^(-1)) is a CM field (complex, closed under conjugation)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d <= 2:
        return False
    return (-1) % d not in kd_kernel(d)


def case1_cm_criterion(d: int) -> bool:
    """For even d: phi(4d) == 2d, i.e. the degree matches twice the genus."""
    if d < 2 or d % 2 != 0:
        raise ValueError("even d >= 2 required")
    return euler_phi(4 * d) == 2 * d


def case2_cm_criterion(d: int) -> bool:
    """For odd d >= 3: phi(d) == d - 1."""
    if d < 3 or d % 2 != 1:
        raise ValueError("odd d >= 3 required")
    return euler_phi(d) == d - 1


def eta_fixers_congruence(n: int) -> frozenset:
    """Units a mod n fixing zeta^a - zeta^(-a), found by the two congruence cases:
    either a = 1 mod n, or 2 = n - 2a mod 2n (possible only when 4 | n)."""
    out = set()
    for a in unit_group(n):
        if n == 1 or a % n == 1 % n:
            out.add(a)
        elif (2 - (n - 2 * a)) % (2 * n) == 0:
            out.add(a)
    return frozenset(out)


class QuotientGroup:
    """(Z/nZ)^* modulo a subgroup; cosets carry their smallest member as name."""

    def __init__(self, n: int, kernel):
        kernel = frozenset(kernel)
        units = unit_group(n)
        if not kernel <= set(units):
            raise ValueError("kernel is not a subset of the unit group")
        e = _identity(n)
        if subgroup_generated(n, kernel) != kernel:
            raise ValueError("kernel is not a subgroup")
        self.n = n
        self.kernel = kernel
        rep_of = {}
        reps = []
        for a in units:
            if a in rep_of:
                continue
            coset = sorted(_mul(n, a, k) for k in kernel)
            r = coset[0]
            reps.append(r)
            for c in coset:
                rep_of[c] = r
        self.reps = tuple(sorted(reps))
        self._rep_of = rep_of
        self.identity = rep_of[e]

    @property
    def order(self):
        return len(self.reps)

    def rep(self, a: int) -> int:
        a %= self.n
        if a not in self._rep_of:
            raise ValueError(f"{a} is not a unit mod {self.n}")
        return self._rep_of[a]

    def mul(self, a: int, b: int) -> int:
        return self._rep_of[_mul(self.n, a, b)]

    def inv(self, a: int) -> int:
        if self.n == 1:
            return 0
        return self._rep_of[pow(a, -1, self.n)]

    def coset_order(self, a: int) -> int:
        a = self.rep(a)
        k = 1
        b = a
        while b != self.identity:
            b = self.mul(b, a)
            k += 1
        return k

    def subgroups(self):
        """All subgroups of the quotient, as frozensets of coset names."""
        if self.order > SUBGROUP_CAP:
            raise ValueError("quotient too large for subgroup enumeration")
        cyclics = set()
        for a in self.reps:
            cyc = {self.identity}
            b = a
            while b != self.identity:
                cyc.add(b)
                b = self.mul(b, a)
            cyclics.add(frozenset(cyc))
        found = set(cyclics)
        found.add(frozenset({self.identity}))
        changed = True
        while changed:
            changed = False
            for h in list(found):
                for c in cyclics:
                    if c <= h:
                        continue
                    prod = frozenset(self.mul(x, y) for x in h for y in c)
                    if prod not in found:
                        found.add(prod)
                        changed = True
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def __eq__(self, other):
        return (
            isinstance(other, QuotientGroup)
            and other.n == self.n
            and other.kernel == self.kernel
        )

    def __hash__(self):
        return hash((self.n, self.kernel))

    def __repr__(self):
        return f"QuotientGroup(n={self.n}, kernel={sorted(self.kernel)})"


def kd_galois_structure(d: int):
    """For d = 2^e, e >= 3: the Galois group of Q(zeta_d - zeta_d^(-1)) as a
    quotient of (Z/dZ)^*, with the certificate that the class of 5 generates.

    Returns (quotient, generator_residue, order).
    """
    e = d.bit_length() - 1
    if d != 1 << e or e < 3:
        raise ValueError("d must be 2^e with e >= 3")
    q = QuotientGroup(d, kd_kernel(d))
    expected = 1 << (e - 2)
    if q.order != expected:
        raise AssertionError(f"quotient order {q.order} != 2^(e-2) = {expected}")
    g = q.rep(5)
    if q.coset_order(g) != expected:
        raise AssertionError("class of 5 does not generate the quotient")
    return q, 5, expected


def proper_subfields_totally_real(e: int) -> bool:
    """For d = 2^e: every nontrivial subgroup of the Galois quotient contains
    the class of -1, so every proper subfield is fixed by conjugation."""
    if e < 1:
        raise ValueError("e must be >= 1")
    d = 1 << e
    q = QuotientGroup(d, kd_kernel(d))
    conj = q.rep(-1 % d) if d > 2 else q.identity
    for h in q.subgroups():
        if len(h) == 1:
            continue
        if conj not in h:
            return False
    return True
