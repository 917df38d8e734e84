"""Single-entry mutations of valid structures, for negative testing."""

from __future__ import annotations

import dataclasses
import random
from fractions import Fraction

from .linalg import Morphism

__all__ = ["perturb", "mutate_map", "mutate_field"]

_DELTAS = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 3), 3)


def perturb(f: Morphism, rng: random.Random, i: int | None = None, j: int | None = None):
    """Copy of ``f`` with one entry changed by a nonzero amount.

    Returns ``(mutant, (i, j))``.  For GF(p) the change is a nonzero residue.
    """
    rows, cols = f.shape
    i = rng.randrange(rows) if i is None else i
    j = rng.randrange(cols) if j is None else j
    fld = f.field
    if fld.modulus:
        delta = rng.randrange(1, fld.modulus)
    else:
        delta = fld(rng.choice(_DELTAS))
    return f.with_entry(i, j, fld.reduce(f.entry(i, j) + delta)), (i, j)


def mutate_map(f: Morphism, rng: random.Random) -> Morphism:
    return perturb(f, rng)[0]


def mutate_field(obj, names, rng: random.Random):
    """Mutate one entry of one of the named structure maps of a dataclass.

    Returns ``(mutant, description)``.
    """
    name = rng.choice(list(names))
    f = getattr(obj, name)
    mutant, (i, j) = perturb(f, rng)
    return dataclasses.replace(obj, **{name: mutant}), f"{name}[{i},{j}]"
