"""Affine Weyl group combinatorics on sl2 weights.

The infinite dihedral group acts on integer weights via the reflections

    s_r . k = -k - 2 + (4r + 2) l,        t_r . k = -k - 2 + 4 r l,

so the orbit of x consists of the integers k with k + 1 = +-(x + 1) mod 2l.
The fundamental alcove is -1 < k < l - 1 with walls at -1 and l - 1; weights
indexed by negative numbers are the zero module everywhere below, encoded as
an empty multiset, never an error.
"""

from __future__ import annotations

from dataclasses import dataclass


class NotTiltingCharacter(Exception):
    """Raised when a multiset is not the Weyl-filtration profile of a tilting sum."""


def reflect(kind: str, r: int, k: int, l: int) -> int:
    """Apply the affine reflection s_r or t_r to the weight k."""
    if kind == "s":
        return -k - 2 + (4 * r + 2) * l
    if kind == "t":
        return -k - 2 + 4 * r * l
    raise ValueError("kind must be 's' or 't'")


def orbit(x: int, l: int, cutoff: int) -> list:
    """All weights in [-1, cutoff] linked to x."""
    if x < -1:
        raise ValueError("orbits are taken inside Z_{>=-1}")
    out = set()
    for k in range(-1, cutoff + 1):
        if (k + 1) % (2 * l) == (x + 1) % (2 * l) or (k + 1 + x + 1) % (2 * l) == 0:
            out.add(k)
    return sorted(out)


def is_interior(base: int, l: int) -> bool:
    return -1 < base < l - 1


@dataclass(frozen=True)
class OrbitIndex:
    """A linkage class named by its representative in the closed fundamental alcove."""

    base: int
    l: int

    def __post_init__(self):
        if not (-1 <= self.base <= self.l - 1):
            raise ValueError("base must lie in the closed fundamental alcove")

    @property
    def kind(self) -> str:
        return "interior" if is_interior(self.base, self.l) else "wall"


def indexed_weight(base: int, l: int, i: int) -> int:
    """The unique orbit element in the i-th (closed) alcove.

    Interior bases give a bijection i -> weight; wall bases follow the
    two-to-one doubling pattern forced by the closed alcoves sharing
    endpoints (the fixed wall being the exception).
    """
    if i < 0:
        raise ValueError("alcove index must be non-negative")
    lo, hi = i * l - 1, (i + 1) * l - 1
    candidates = [k for k in orbit(base, l, hi + 1) if lo <= k <= hi]
    if is_interior(base, l):
        candidates = [k for k in candidates if lo < k < hi]
    if len(candidates) != 1:
        raise AssertionError(f"alcove {i} should contain exactly one orbit element, got {candidates}")
    return candidates[0]


def is_simple_weight(i: int, l: int) -> bool:
    """Closed form for when the i-th Weyl/tilting module stays simple."""
    return i < l or i % l == l - 1


def linked_lower_weight(i_prime: int, l: int) -> int:
    """For non-simple i', the lower weight i with i' = (a+2)l - b - 2, i = al + b."""
    b = (-i_prime - 2) % l
    if b > l - 2:
        raise ValueError(f"weight {i_prime} is on a wall, it has no linked lower weight")
    a = (i_prime + b + 2) // l - 2
    if a < 0:
        raise ValueError(f"weight {i_prime} lies in the fundamental alcove")
    return a * l + b


def tensor_weyl_factors(i: int, i2: int) -> dict:
    """Weyl factors of the tensor product of the i-th and i2-th Weyl modules.

    One factor each at |i-i2|, |i-i2|+2, ..., i+i2.
    """
    if i < 0 or i2 < 0:
        return {}
    return {w: 1 for w in range(abs(i - i2), i + i2 + 1, 2)}


def tilting_weyl_factors(i: int, l: int) -> dict:
    """Weyl-filtration multiset of the i-th indecomposable tilting module."""
    if i < 0:
        return {}
    if is_simple_weight(i, l):
        return {i: 1}
    return {i: 1, linked_lower_weight(i, l): 1}


def decompose_into_tiltings(factors: dict, l: int) -> dict:
    """Peel a Weyl-factor multiset into indecomposable tilting summands.

    Filtration multiplicities are unique up to reordering, so greedy
    highest-weight-first peeling is canonical.  Raises NotTiltingCharacter
    if any multiplicity goes negative.
    """
    remaining = {w: m for w, m in factors.items() if m}
    out = {}
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        if mult < 0:
            raise NotTiltingCharacter(f"negative multiplicity at weight {top}")
        out[top] = out.get(top, 0) + mult
        for w, m in tilting_weyl_factors(top, l).items():
            nm = remaining.get(w, 0) - m * mult
            if nm < 0:
                raise NotTiltingCharacter(f"negative multiplicity at weight {w}")
            if nm == 0:
                remaining.pop(w, None)
            else:
                remaining[w] = nm
    return out


def tensor_power_factors(word: list, l: int) -> dict:
    """Weyl factors of a tensor product of Weyl modules with the given weights."""
    factors = {0: 1}
    for w in word:
        out = {}
        for a, m in factors.items():
            for b, m2 in tensor_weyl_factors(a, w).items():
                out[b] = out.get(b, 0) + m * m2
        factors = out
    return factors
