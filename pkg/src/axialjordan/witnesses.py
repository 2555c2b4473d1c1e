"""Fixed witness tuples per row and samplers of random admissible rational tuples."""

from __future__ import annotations

import random
from fractions import Fraction as F

from .classifier import GENERIC, matching_rows
from .models import ParameterTuple

WITNESSES: dict[str, ParameterTuple] = {
    "A1": ParameterTuple.of(1, 1, 1, 1),
    "A2": ParameterTuple.of(0, 0, 1, 0),
    "A3": ParameterTuple.of(0, 0, 0, 0),
    "A4": ParameterTuple.of(0, F(1, 3), F(2, 3), 0),
    "A5": ParameterTuple.of(F(1, 3), F(1, 3), F(1, 9), F(-1, 9)),
    "A6": ParameterTuple.of(0, 0, F(1, 2), 0),
    "A7": ParameterTuple.of(0, F(1, 2), F(3, 2), F(1, 2)),
    "A8": ParameterTuple.of(0, F(1, 4), F(1, 2), 0),
    "A9": ParameterTuple.of(4, 1, 1, 2),
    GENERIC: ParameterTuple.of(F(1, 2), 2, 2, F(3, 2)),
}


def _q(rng: random.Random, lo: int = -6, hi: int = 6, den: int = 5, nonzero: bool = False) -> F:
    while True:
        x = F(rng.randint(lo, hi), rng.randint(1, den))
        if x or not nonzero:
            return x


def _sample_once(row: str, rng: random.Random) -> ParameterTuple:
    if row in ("A1", "A2", "A3"):
        return WITNESSES[row]
    if row == "A4":
        b = _q(rng, nonzero=True)
        return ParameterTuple.of(0, b, 1 - b, 0)
    if row == "A5":
        # alpha = 1/(1+x^2) makes alpha(1-alpha) a square, so psi is rational
        x, y = _q(rng, nonzero=True), _q(rng, nonzero=True)
        al, be = 1 / (1 + x * x), 1 / (1 + y * y)
        root = x * y / ((1 + x * x) * (1 + y * y))
        ps = al * be + rng.choice((-1, 1)) * root
        return ParameterTuple.of(al, be, 2 * ps + 1 - al - be, ps)
    if row == "A6":
        return ParameterTuple.of(0, 0, _q(rng), 0)
    if row == "A7":
        al, be, ps = _q(rng), _q(rng), _q(rng)
        if rng.random() < 0.3:
            al = F(0)
        return ParameterTuple.of(al, be, 2 * ps + 1 - al - be, ps)
    if row == "A8":
        return ParameterTuple.of(0, _q(rng), _q(rng), 0)
    if row == "A9":
        al, be, ps = _q(rng, nonzero=True), _q(rng, nonzero=True), _q(rng, nonzero=True)
        return ParameterTuple.of(al, be, ps * ps / (al * be), ps)
    if row == GENERIC:
        al, be, ga, m = (_q(rng, nonzero=True) for _ in range(4))
        # psi^2 - alpha beta gamma = ((m - alpha beta gamma/m)/2)^2
        return ParameterTuple.of(al, be, ga, (m + al * be * ga / m) / 2)
    raise ValueError(f"unknown row {row!r}")


def random_admissible(row: str, rng: random.Random, tries: int = 1000) -> ParameterTuple:
    """A random rational tuple satisfying the relations of ``row`` (or generic)."""
    for _ in range(tries):
        p = _sample_once(row, rng)
        if row == GENERIC:
            if p.simplicity_factor() != 0:
                return p
        elif row in matching_rows(p):
            return p
    raise RuntimeError(f"could not sample an admissible tuple for {row}")


def sample(row: str, count: int, seed: int = 0, distinct: bool = True) -> list[ParameterTuple]:
    """``count`` admissible tuples (fewer only for rows with a single admissible tuple)."""
    rng = random.Random(f"{row}:{seed}")
    if row in ("A1", "A2", "A3"):
        return [WITNESSES[row]]
    out: list[ParameterTuple] = []
    seen = set()
    while len(out) < count:
        p = random_admissible(row, rng)
        if distinct and p in seen:
            continue
        seen.add(p)
        out.append(p)
    return out
