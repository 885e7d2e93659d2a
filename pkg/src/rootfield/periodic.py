"""Periodic base-p decompositions of inverted root exponents.

For extracting an r-th root in F_{p^m} one wants an exponent v with
r*v = 1 modulo the group order (or modulo order/r in the ramified case).
When the extension degree m is large compared to the multiplicative
order k of p mod r, v splits as

    v = a + b * (1 + p^l + p^{2l} + ... + p^{(n-1)l})

with a short period l and small a, b < p^{2l}.  The geometric part can
then be raised with Frobenius maps instead of generic powering, which is
where the savings come from.  This module is pure integer arithmetic;
no field elements appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class NotCoprime(ValueError):
    """Arguments that must be coprime share a factor."""


class PeriodTooLong(ValueError):
    """The extension degree does not exceed the decomposition period."""


class NotCoprimeCase(ValueError):
    """r shares a factor with the group order; the coprime path is out."""


class NotRamifiedCase(ValueError):
    """r does not divide the group order exactly once."""


class ConditionsUnmet(ValueError):
    """The base-q decomposition hypotheses fail for these arguments."""


@dataclass(frozen=True)
class PeriodicExponent:
    """One decomposition v = a + b * sum_{j<n} p^{j*period}.

    congruence_modulus is the modulus M with r*v = 1 (mod M); case_tag is
    "coprime" or "ramified".  The period is measured in base-p digits.
    """

    a: int
    b: int
    period: int
    n: int
    v: int
    congruence_modulus: int
    case_tag: str


@dataclass(frozen=True)
class CaseAnalysis:
    """Classification of (p, m, r) by how r meets the group order.

    gcd_tag is "coprime", "ramified_exact" or "higher_power"; alpha is
    the exact multiplicity of r in p^m - 1; u is the auxiliary
    multiplier in [1, r), absent for higher_power.
    """

    r: int
    gcd_tag: str
    k: int
    u: int | None
    alpha: int


def mult_order(base: int, r: int) -> int:
    """Least k >= 1 with base^k = 1 mod r.  Plain iteration; the orders
    met here are tiny, so no factoring of phi(r) is warranted."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    if gcd(base, r) != 1:
        raise NotCoprime(f"{base} and {r} are not coprime")
    k = 1
    acc = base % r
    while acc != 1:
        acc = acc * base % r
        k += 1
    return k


def geometric_sum(p: int, period: int, n: int) -> int:
    """1 + p^period + ... + p^{(n-1)*period}."""
    if n <= 0:
        return 0
    return (p ** (period * n) - 1) // (p ** period - 1)


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization as (prime, exponent) pairs, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def exact_power(r: int, n: int) -> int:
    """Multiplicity of r in n: largest alpha with r^alpha | n."""
    alpha = 0
    while n % r == 0:
        n //= r
        alpha += 1
    return alpha


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p^d with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError("q must be >= 2")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    d = 0
    t = q
    while t % p == 0:
        t //= p
        d += 1
    if t != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, d


def analyze_case(p: int, m: int, r: int) -> CaseAnalysis:
    """Classify r against the group order p^m - 1 and compute k and u."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if gcd(r, p) != 1:
        raise NotCoprime(f"r={r} shares a factor with the characteristic {p}")
    order = p ** m - 1
    k = mult_order(p, r)
    alpha = exact_power(r, order)
    if alpha == 0:
        if gcd(r, order) != 1:
            raise ValueError(
                f"r={r} shares a factor with the group order without dividing it")
        u = (-pow(order % r, -1, r)) % r
        return CaseAnalysis(r, "coprime", k, u, 0)
    if alpha == 1:
        cofactor = (order // r) % r
        if gcd(cofactor, r) != 1:
            raise ValueError(
                f"r={r} divides the group order once but its cofactor is entangled")
        u = (-pow(cofactor, -1, r)) % r
        return CaseAnalysis(r, "ramified_exact", k, u, 1)
    return CaseAnalysis(r, "higher_power", k, None, alpha)


def _split_periodic(v, p, u, rdiv, period, m, modulus, tag):
    """Shared tail of both decompositions.

    z = u*(p^period - 1)/rdiv must be exactly integral; the top digit
    block b is z shifted to the leading end, and a is whatever remains
    after the geometric part is taken out.  Bounds a, b < p^{2*period}
    are part of the contract, so they are asserted here rather than
    trusted.
    """
    z_num = u * (p ** period - 1)
    assert z_num % rdiv == 0, "periodic block is not integral"
    z = z_num // rdiv
    n = m // period
    b = p ** (m - n * period) * z
    a = v - b * geometric_sum(p, period, n)
    bound = p ** (2 * period)
    assert 0 <= a < bound, "constant part out of range"
    assert 0 <= b < bound, "periodic part out of range"
    return PeriodicExponent(a, b, period, n, v, modulus, tag)


def decompose_coprime(p: int, m: int, r: int) -> PeriodicExponent:
    """Decomposition for gcd(r, p^m - 1) = 1.

    u in [1, r) satisfies u*(p^m - 1) = -1 (mod r), which makes
    v = floor(p^m * u / r) the inverse of r modulo the group order.
    Requires m > k, k the order of p mod r; the period is k.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    order = p ** m - 1
    k = mult_order(p, r)
    if m <= k:
        raise PeriodTooLong(f"need m > k, got m={m}, k={k}")
    if gcd(r, order) != 1:
        raise NotCoprimeCase(f"gcd(r, p^m - 1) = {gcd(r, order)}")
    u = (-pow(order % r, -1, r)) % r
    v = p ** m * u // r
    pe = _split_periodic(v, p, u, r, k, m, order, "coprime")
    assert r * pe.v % order == 1
    return pe


def decompose_ramified(p: int, m: int, r: int) -> PeriodicExponent:
    """Decomposition for r dividing p^m - 1 exactly once.

    u in [1, r) satisfies u*(p^m - 1)/r = -1 (mod r) and
    v = ceil(p^m * u / r^2) gives r*v = 1 (mod (p^m - 1)/r).  The period
    stretches to k*r because only p^{kr} - 1 picks up the factor r^2
    needed to keep the block z integral.  Requires m > k*r.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    order = p ** m - 1
    if order % r != 0 or gcd(order // r, r) != 1:
        raise NotRamifiedCase(
            f"r={r} does not divide p^m - 1 exactly once with coprime cofactor")
    k = mult_order(p, r)
    period = k * r
    if m <= period:
        raise PeriodTooLong(f"need m > k*r, got m={m}, k*r={period}")
    u = (-pow((order // r) % r, -1, r)) % r
    v = -(-(p ** m * u) // (r * r))
    modulus = order // r
    pe = _split_periodic(v, p, u, r * r, period, m, modulus, "ramified")
    assert r * pe.v % modulus == 1
    return pe


@dataclass(frozen=True)
class BaseQDecomposition:
    """Decomposition over an intermediate field F_q, q = p^d, plus the
    base-p comparison data: n counts periodic terms base q, n_prime the
    terms the same exponent gets when worked base p.  n_prime >= n
    always; the base-p view never loses terms."""

    q: int
    p: int
    d: int
    m: int
    r: int
    pe: PeriodicExponent
    k_base: int
    k_prime: int
    n: int
    n_prime: int


def decompose_base_q(q: int, m: int, r: int) -> BaseQDecomposition:
    """Decompose the inverted exponent for F_{q^m} working base q.

    Coprime variant: gcd(q*(q-1), r) = 1, order k of q mod r exceeds 1,
    gcd(m, k) = 1.  Ramified variant: r divides q - 1 exactly once and
    gcd(m, r) = 1.  Anything else raises ConditionsUnmet.  The returned
    record carries the periodic exponent with its period converted to
    base-p digits of the flattened field F_{p^{md}}.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    p, d = prime_power_split(q)
    order = q ** m - 1
    if gcd(q * (q - 1), r) == 1:
        k = mult_order(q, r)
        if gcd(m, k) != 1:
            raise ConditionsUnmet(f"gcd(m, k) = {gcd(m, k)} with k={k}")
        if k == 1:
            raise ConditionsUnmet("order of q mod r must exceed 1")
        if m <= k:
            raise PeriodTooLong(f"need m > k, got m={m}, k={k}")
        if gcd(r, order) != 1:
            raise ConditionsUnmet("r unexpectedly divides q^m - 1")
        u = (-pow(order % r, -1, r)) % r
        v = q ** m * u // r
        pe_q = _split_periodic(v, q, u, r, k, m, order, "coprime")
        assert r * v % order == 1
        k_prime = mult_order(p, r)
        n_prime = m * d // k_prime
    elif (q - 1) % r == 0 and gcd((q - 1) // r, r) == 1 and gcd(m, r) == 1:
        if m <= r:
            raise PeriodTooLong(f"need m > r, got m={m}, r={r}")
        u = (-pow((order // r) % r, -1, r)) % r
        v = -(-(q ** m * u) // (r * r))
        modulus = order // r
        pe_q = _split_periodic(v, q, u, r * r, r, m, modulus, "ramified")
        assert r * v % modulus == 1
        k = mult_order(q, r)  # always 1 here
        k_prime = mult_order(p, r)
        n_prime = m * d // (k_prime * r)
    else:
        raise ConditionsUnmet(f"no base-q variant applies to q={q}, m={m}, r={r}")
    # express the period in base-p digits so the record is comparable
    # with a base-p decomposition of the same flattened field
    pe = PeriodicExponent(pe_q.a, pe_q.b, pe_q.period * d, pe_q.n, pe_q.v,
                          pe_q.congruence_modulus, pe_q.case_tag)
    return BaseQDecomposition(q, p, d, m, r, pe, k, k_prime, pe.n, n_prime)
