"""Brute-force ground truth for small fields.

Everything here enumerates the whole field, so it is only usable up to
2^20 elements; that is the point.  Tests compare the clever paths
against these answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .field import Field


ENUMERATION_BOUND = 1 << 20


class FieldTooLarge(ValueError):
    """Exhaustive enumeration is capped at 2^20 elements."""


@dataclass(frozen=True)
class OracleReport:
    """Every r-th root of one delta, found the honest way."""

    all_roots: frozenset
    residue_count: int
    group_order: int


def _check_size(fld: Field):
    if fld.order_minus_one + 1 > ENUMERATION_BOUND:
        raise FieldTooLarge(
            f"field has {fld.order_minus_one + 1} elements, oracle cap is 2^20")


def brute_root(fld: Field, delta, r: int) -> OracleReport:
    """Collect every gamma with gamma^r = delta by full enumeration."""
    _check_size(fld)
    order = fld.order_minus_one
    roots = []
    residues = set()
    for gamma in fld.elements():
        power = fld.pow(gamma, r)
        if any(gamma):
            residues.add(power)
        if power == delta:
            roots.append(gamma)
    return OracleReport(frozenset(roots), len(residues), order)


def enumerate_residues(fld: Field, r: int) -> set:
    """Image of the r-th power map on nonzero elements."""
    _check_size(fld)
    out = set()
    for gamma in fld.elements():
        if any(gamma):
            out.add(fld.pow(gamma, r))
    return out


def root_table(fld: Field, r: int) -> dict:
    """All roots of every delta at once: one enumeration pass instead of
    p^m of them.  Returns {delta: [gamma, ...]} with every list sorted in
    base-p counting order."""
    _check_size(fld)
    table: dict = {}
    for gamma in fld.elements():
        table.setdefault(fld.pow(gamma, r), []).append(gamma)
    return table


def residue_count_formula(fld: Field, r: int) -> int:
    """What enumerate_residues must return, counted without enumerating."""
    return fld.order_minus_one // gcd(r, fld.order_minus_one)
