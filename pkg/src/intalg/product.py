"""Finite products of interval algebras and independence testing.

A family is an ordered list of product members; member alpha has one
element per coordinate zeta.  Independence of an index tuple is checked
by the elementary-product characterization: every sign pattern over the
chosen members must have a nonzero meet in at least one coordinate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import algebra, terms
from .algebra import Element
from .errors import CapacityError, InputError

MAX_INDEPENDENCE_ARITY = 16


@dataclass(frozen=True)
class Family:
    kappa: int
    order_sizes: tuple
    members: tuple  # tuple of members, each a tuple of kappa Elements

    def __post_init__(self):
        if self.kappa != len(self.order_sizes):
            raise InputError("kappa does not match order_sizes")
        for member in self.members:
            if len(member) != self.kappa:
                raise InputError("member with wrong coordinate count")
            for zeta, a in enumerate(member):
                if a.order_size != self.order_sizes[zeta]:
                    raise InputError(
                        f"coordinate {zeta} has order size {a.order_size}, "
                        f"expected {self.order_sizes[zeta]}"
                    )

    def __len__(self) -> int:
        return len(self.members)

    def coordinate(self, zeta: int) -> list:
        return [member[zeta] for member in self.members]

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "order_sizes": list(self.order_sizes),
            "elements": [
                [a.to_json() for a in member] for member in self.members
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Family":
        try:
            kappa = data["kappa"]
            order_sizes = tuple(data["order_sizes"])
            raw_members = data["elements"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed family: {exc}") from exc
        members = tuple(
            tuple(
                Element.from_json(order_sizes[zeta], eps)
                for zeta, eps in enumerate(member)
            )
            for member in raw_members
        )
        return cls(kappa, order_sizes, members)


@dataclass(frozen=True)
class DependenceWitness:
    """A violated sign pattern, reported as the disjoint index sets."""

    pattern: tuple
    gamma: tuple  # positions taken plain
    nabla: tuple  # positions taken complemented


def prod_eval(t: terms.Term, fam: Family, indices) -> list:
    """Evaluate t coordinatewise on the chosen members."""
    indices = list(indices)
    for i in indices:
        if not 0 <= i < len(fam):
            raise InputError(f"member index {i} out of range")
    if terms.num_vars(t) > len(indices):
        raise InputError(
            f"term uses {terms.num_vars(t)} variables, got {len(indices)}"
        )
    return [
        terms.evaluate(
            t,
            [fam.members[i][zeta] for i in indices],
            order_size=fam.order_sizes[zeta],
        )
        for zeta in range(fam.kappa)
    ]


def is_zero(values) -> bool:
    """A product value is zero iff every coordinate is empty."""
    return all(a.is_empty() for a in values)


def _pattern_meet(order_size, elements, pattern) -> Element:
    acc = algebra.full(order_size)
    for a, sign in zip(elements, pattern):
        acc = algebra.meet(acc, a if sign else algebra.complement(a))
        if acc.is_empty():
            break
    return acc


def is_independent(fam: Family, indices):
    """Decide independence of the given members.

    Returns (True, None) or (False, witness) where the witness is the
    lexicographically least failing sign pattern.
    """
    indices = list(indices)
    n = len(indices)
    if n > MAX_INDEPENDENCE_ARITY:
        raise CapacityError(f"{n} indices exceed cap {MAX_INDEPENDENCE_ARITY}")
    if len(set(indices)) != n:
        raise InputError("duplicate member indices")
    for i in indices:
        if not 0 <= i < len(fam):
            raise InputError(f"member index {i} out of range")
    if fam.kappa == 0 and n > 0:
        pattern = (0,) * n
        return False, DependenceWitness(pattern, (), tuple(range(n)))
    for pattern in itertools.product((0, 1), repeat=n):
        nonzero = False
        for zeta in range(fam.kappa):
            chosen = [fam.members[i][zeta] for i in indices]
            meet = _pattern_meet(fam.order_sizes[zeta], chosen, pattern)
            if not meet.is_empty():
                nonzero = True
                break
        if not nonzero:
            gamma = tuple(j for j, s in enumerate(pattern) if s == 1)
            nabla = tuple(j for j, s in enumerate(pattern) if s == 0)
            return False, DependenceWitness(pattern, gamma, nabla)
    return True, None
