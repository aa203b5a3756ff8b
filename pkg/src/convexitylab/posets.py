"""Finite partially ordered sets.

Elements are ids 0..size-1 with display labels.  The order is stored
transitively closed as bitmask up-rows (``up[i]`` = mask of elements
>= i, including i); Hasse edges are cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import bits, is_subset
from .errors import InputError


def transitive_closure(rows: list[int]) -> list[int]:
    n = len(rows)
    out = list(rows)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = out[i]
            for j in bits(out[i]):
                acc |= out[j]
            if acc != out[i]:
                out[i] = acc
                changed = True
    return out


@dataclass(frozen=True)
class FinitePoset:
    """Partial order given by reflexive-transitive up-set rows."""

    labels: tuple[str, ...]
    up: tuple[int, ...]
    _hasse: tuple[tuple[int, int], ...] = field(
        init=False, default=None, repr=False, hash=False, compare=False  # type: ignore[assignment]
    )

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InputError("poset labels must be unique")
        if len(self.up) != n:
            raise InputError("up-row count must match element count")
        for i, row in enumerate(self.up):
            if not row >> i & 1:
                raise InputError("order must be reflexive")
            if row & ~((1 << n) - 1):
                raise InputError("up-row references elements outside the poset")
        for i in range(n):
            for j in bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise InputError(
                        f"antisymmetry violated by {self.labels[i]} and {self.labels[j]}"
                    )
                if not is_subset(self.up[j], self.up[i]):
                    raise InputError("order must be transitively closed")

    @classmethod
    def from_covers(
        cls, labels: tuple[str, ...], covers: list[tuple[int, int]]
    ) -> "FinitePoset":
        """Build from cover-style edges (a below b); closure is computed."""
        n = len(labels)
        rows = [1 << i for i in range(n)]
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError("cover edge references unknown elements")
            rows[a] |= 1 << b
        return cls(labels, tuple(transitive_closure(rows)))

    @classmethod
    def from_relation(cls, labels: tuple[str, ...], leq_pairs: set[tuple[int, int]]) -> "FinitePoset":
        n = len(labels)
        rows = [1 << i for i in range(n)]
        for a, b in leq_pairs:
            rows[a] |= 1 << b
        return cls(labels, tuple(transitive_closure(rows)))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        labels = tuple(str(i) for i in range(n))
        rows = tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))
        return cls(labels, rows)

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(tuple(str(i) for i in range(n)), tuple(1 << i for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def down(self, i: int) -> int:
        """Mask of elements <= i."""
        return sum(1 << j for j in range(self.size) if self.leq(j, i))

    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        if self._hasse is None:
            edges = []
            for i in range(self.size):
                above = [j for j in bits(self.up[i]) if j != i]
                for j in above:
                    if not any(k != j and self.leq(k, j) for k in above):
                        edges.append((i, j))
            object.__setattr__(self, "_hasse", tuple(sorted(edges)))
        return self._hasse

    def is_chain_set(self, mask: int) -> bool:
        elems = list(bits(mask))
        return all(
            self.leq(a, b) or self.leq(b, a) for i, a in enumerate(elems) for b in elems[i + 1 :]
        )

    def is_antichain_set(self, mask: int) -> bool:
        elems = list(bits(mask))
        return all(
            not self.leq(a, b) and not self.leq(b, a)
            for i, a in enumerate(elems)
            for b in elems[i + 1 :]
        )

    def meet_of(self, i: int, j: int) -> int | None:
        """Greatest common lower bound, or None if it does not exist."""
        common = [k for k in range(self.size) if self.leq(k, i) and self.leq(k, j)]
        greatest = [k for k in common if all(self.leq(other, k) for other in common)]
        return greatest[0] if greatest else None

    def meet_semilattice_defect(self) -> tuple[int, int] | None:
        """A pair without a meet, or None if every pair has one."""
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.meet_of(i, j) is None:
                    return (i, j)
        return None

    def strict_pairs(self) -> list[tuple[int, int]]:
        """All pairs (a, b) with a < b in the order."""
        return [
            (i, j)
            for i in range(self.size)
            for j in bits(self.up[i])
            if j != i
        ]

    def downsets(self) -> list[int]:
        """All down-closed subsets as masks, ascending."""
        out = []
        for mask in range(1 << self.size):
            if all(is_subset(self.down(i) , mask) for i in bits(mask)):
                out.append(mask)
        return out

    def linear_extension(self) -> list[int]:
        order = sorted(range(self.size), key=lambda i: (bin(self.down(i)).count("1"), i))
        return order
