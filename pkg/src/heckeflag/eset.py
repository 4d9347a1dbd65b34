"""Diagonal-support sets of Hecke structure constants and their invariants.

For an element w, the set reported here collects every z whose diagonal
structure constant N(w, z, z) — the coefficient of T_z in T_w T_z — is
nonzero, together with the maximal degree d over the set and the subset of
degree maximizers.  For infinite systems the scan is truncated at a length
bound that is always carried in the report, so a truncated result can never
masquerade as a complete one: membership of each tested z is exact, absence
beyond the bound is not certified.

Membership is decided by computing the product T_w * T_z for every candidate
z; no shortcut identities are used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import Element
from .hecke import HeckeAlgebra
from .poly import IntPoly

__all__ = ["ESetReport", "DEFAULT_TRUNCATION", "e_set", "in_w_bullet", "d_and_e_prime"]

# Conventional bound for infinite systems when a caller must pick one; the
# dihedral patterns computed here stabilize within a few lengths, so 12 gives
# a comfortable margin at negligible cost.
DEFAULT_TRUNCATION = 12


@dataclass
class ESetReport:
    """Result of a diagonal-support scan for a fixed w.

    members lists (z, N(w, z, z), degree) for exactly the z with nonzero
    diagonal constant, sorted by (length, word); d is the maximal degree over
    members (None when empty); e_prime lists the degree maximizers; truncation
    is the length bound used, present iff the system is infinite.
    """

    w: Element
    members: list[tuple[Element, IntPoly, int]]
    d: int | None
    e_prime: list[Element]
    truncation: int | None

    def member_elements(self) -> list[Element]:
        return [z for z, _, _ in self.members]

    def to_json(self) -> dict:
        return {
            "w": self.w.to_json(),
            "truncation": self.truncation,
            "members": [
                {"z": z.to_json(), "N": list(p), "deg": deg}
                for z, p, deg in self.members
            ],
            "d": self.d,
            "e_prime": [z.to_json() for z in self.e_prime],
        }


def e_set(algebra: HeckeAlgebra, w: Element, max_len: int | None = None) -> ESetReport:
    """Scan for all z with N(w, z, z) != 0.

    Finite systems scan the whole group and the result is complete; infinite
    systems scan elements of length <= max_len and record the bound in the
    report.  Passing max_len for a finite system is an error: the finite scan
    is always complete and a bound would silently change the semantics.
    """
    system = algebra.system
    system._check_member(w)
    if system.is_finite:
        if max_len is not None:
            raise ValueError("max_len only applies to infinite systems")
        candidates = system.elements
        truncation = None
    else:
        if max_len is None:
            raise ValueError("max_len is required for infinite systems")
        candidates = system.elements_up_to(max_len)
        truncation = max_len

    tw = algebra.t_basis(w)
    members: list[tuple[Element, IntPoly, int]] = []
    for z in candidates:
        n = algebra.product(tw, algebra.t_basis(z)).coefficient(z)
        if n:
            members.append((z, n, n.degree))
    d = max((deg for _, _, deg in members), default=None)
    e_prime = [z for z, _, deg in members if deg == d] if members else []
    return ESetReport(w=w, members=members, d=d, e_prime=e_prime, truncation=truncation)


def in_w_bullet(algebra: HeckeAlgebra, w: Element, max_len: int | None = None) -> bool | None:
    """Whether the diagonal-support set of w is nonempty.

    Returns True on a witness.  For infinite systems an empty scan up to the
    bound returns None ("unknown"): truncation cannot certify emptiness.
    Finite scans are complete, so False would be definitive there (it never
    occurs: the longest element is always a witness).
    """
    report = e_set(algebra, w, max_len)
    if report.members:
        return True
    return False if algebra.system.is_finite else None


def d_and_e_prime(
    algebra: HeckeAlgebra, w: Element, max_len: int | None = None
) -> tuple[int, list[Element]]:
    """The maximal diagonal degree and its maximizers.

    For infinite systems the values are relative to the truncated scan:
    d is a lower bound for the untruncated maximum.
    """
    report = e_set(algebra, w, max_len)
    if not report.members:
        raise ValueError("diagonal-support set is empty (within the bound)")
    return report.d, report.e_prime
