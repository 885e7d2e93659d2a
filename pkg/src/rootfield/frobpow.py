"""Raising field elements to geometric-series exponents via Frobenius.

The target exponent is B = 1 + s + s^2 + ... + s^n with s = p^e.  Since
y -> y^s is e Frobenius applications, y^B can be built with a doubling
chain on the term count instead of generic powering:

    y^{B_{2t}}   = y^{B_t} * (y^{B_t})^{s^t}
    y^{B_{2t+1}} = y^{B_{2t}} * y^{s^{2t}}

Reading the term count's binary expansion left to right gives at most
2*ceil(log2(n+1)) multiplications, plus Frobenius work that the counter
tracks separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field, OpCounter


@dataclass(frozen=True)
class PhiPlan:
    """Doubling chain for a term count: replaying the moves from 1
    reaches term_count; doubles cost one multiplication, double-plus-one
    moves cost two."""

    term_count: int
    step: int
    chain: tuple[str, ...]

    @classmethod
    def for_term_count(cls, term_count: int, step: int) -> "PhiPlan":
        if term_count < 1:
            raise ValueError("term count must be >= 1")
        if step < 1:
            raise ValueError("step must be >= 1")
        moves = []
        for bit in bin(term_count)[3:]:
            moves.append("double_plus_one" if bit == "1" else "double")
        return cls(term_count, step, tuple(moves))

    def replay(self) -> int:
        t = 1
        for move in self.chain:
            t = 2 * t + (1 if move == "double_plus_one" else 0)
        return t

    def mult_cost(self) -> int:
        return sum(2 if move == "double_plus_one" else 1 for move in self.chain)


def phi_map(fld: Field, y, e: int, n: int,
            counter: OpCounter | None = None) -> tuple:
    """y^{1 + s + ... + s^n} with s = p^e, in at most 2*ceil(log2(n+1))
    multiplications."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    plan = PhiPlan.for_term_count(n + 1, e)
    t = 1
    acc = y
    for move in plan.chain:
        acc = fld.mul(acc, fld.frobenius(acc, t * e, counter), counter)
        t *= 2
        if move == "double_plus_one":
            acc = fld.mul(acc, fld.frobenius(y, t * e, counter), counter)
            t += 1
    return acc


def apply_periodic(fld: Field, delta, pe,
                   counter: OpCounter | None = None) -> tuple:
    """delta^{pe.v} through the split v = a + b*(geometric series).

    Two short exponentiations (a and b are below p^{2*period}) and one
    phi_map; total multiplications stay within
    2*ceil(log2(pe.n)) + 4*pe.period*ceil(log2(p)) + 1.
    """
    part_a = fld.pow(delta, pe.a, counter)
    part_b = fld.pow(delta, pe.b, counter)
    geo = phi_map(fld, part_b, pe.period, pe.n - 1, counter)
    return fld.mul(part_a, geo, counter)
