"""Abstract finite lattices and join-semilattices.

``Lattice`` carries opaque element ids with an order relation; join
and meet are derived and validated (unique least upper / greatest
lower bounds must exist).  ``JoinSemilattice`` needs only a total join
operation; the order is recovered from it.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .bitset import bits, is_subset
from .closure import ClosedSetLattice
from .errors import InputError
from .posets import FinitePoset


@dataclass(frozen=True)
class Lattice:
    """Finite lattice over element ids 0..size-1."""

    labels: tuple[str, ...]
    up: tuple[int, ...]
    _join: tuple[tuple[int, ...], ...] = field(
        init=False, default=None, repr=False, hash=False, compare=False  # type: ignore[assignment]
    )
    _meet: tuple[tuple[int, ...], ...] = field(
        init=False, default=None, repr=False, hash=False, compare=False  # type: ignore[assignment]
    )
    _hasse: tuple[tuple[int, int], ...] = field(
        init=False, default=None, repr=False, hash=False, compare=False  # type: ignore[assignment]
    )

    def __post_init__(self) -> None:
        FinitePoset(self.labels, self.up)  # order axioms
        object.__setattr__(self, "_join", self._bound_table(upper=True))
        object.__setattr__(self, "_meet", self._bound_table(upper=False))

    def _bound_table(self, upper: bool) -> tuple[tuple[int, ...], ...]:
        n = self.size
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if self.up[j] >> i & 1:
                    down[i] |= 1 << j
        rows = self.up if upper else tuple(down)
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                common = rows[i] & rows[j]
                best = None
                for k in bits(common):
                    if is_subset(common, rows[k]):
                        best = k
                        break
                if best is None:
                    kind = "join" if upper else "meet"
                    raise InputError(
                        f"not a lattice: {self.labels[i]} and {self.labels[j]} have no {kind}"
                    )
                row.append(best)
            table.append(tuple(row))
        return tuple(table)

    @property
    def size(self) -> int:
        return len(self.labels)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def join(self, i: int, j: int) -> int:
        return self._join[i][j]

    def meet(self, i: int, j: int) -> int:
        return self._meet[i][j]

    @property
    def bottom(self) -> int:
        for i in range(self.size):
            if self.up[i] == (1 << self.size) - 1:
                return i
        raise InputError("lattice has no bottom element")

    @property
    def top(self) -> int:
        for i in range(self.size):
            if self.up[i] == 1 << i:
                return i
        raise InputError("lattice has no top element")

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

    def lower_covers(self, j: int) -> tuple[int, ...]:
        return tuple(i for i, b in self.hasse_edges() if b == j)

    def upper_covers(self, i: int) -> tuple[int, ...]:
        return tuple(j for a, j in self.hasse_edges() if a == i)

    def join_irreducibles(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if len(self.lower_covers(i)) == 1)

    def meet_irreducibles(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if len(self.upper_covers(i)) == 1)

    def down_mask(self, i: int) -> int:
        out = 0
        for j in range(self.size):
            if self.leq(j, i):
                out |= 1 << j
        return out

    def join_of_set(self, ids: Sequence[int]) -> int:
        out = self.bottom
        for i in ids:
            out = self.join(out, i)
        return out

    def meet_of_set(self, ids: Sequence[int]) -> int:
        out = self.top
        for i in ids:
            out = self.meet(out, i)
        return out

    def dual(self) -> "Lattice":
        n = self.size
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if self.leq(j, i):
                    down[i] |= 1 << j
        return Lattice(self.labels, tuple(down))

    def to_poset(self) -> FinitePoset:
        return FinitePoset(self.labels, self.up)

    def to_join_semilattice(self) -> "JoinSemilattice":
        return JoinSemilattice(self.labels, self.join)


def as_lattice(source: "Lattice | ClosedSetLattice") -> Lattice:
    """Coerce a closed-set lattice (or pass a lattice through)."""
    if isinstance(source, Lattice):
        return source
    n = source.size
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if source.leq(i, j):
                up[i] |= 1 << j
    labels = tuple(source.ground.format_set(m) for m in source.masks)
    return Lattice(labels, tuple(up))


def chain_lattice(n: int) -> Lattice:
    if n < 1:
        raise InputError("chain needs at least one element")
    poset = FinitePoset.chain(n)
    return Lattice(poset.labels, poset.up)


def boolean_lattice(atoms: int) -> Lattice:
    """Powerset of ``atoms`` generators; element ids are the subsets."""
    n = 1 << atoms
    labels = tuple("{" + ",".join(str(b) for b in bits(m)) + "}" for m in range(n))
    up = tuple(
        sum(1 << j for j in range(n) if is_subset(m, j)) for m in range(n)
    )
    return Lattice(labels, up)


def m3() -> Lattice:
    """Three atoms, bottom and top."""
    return Lattice(
        ("0", "a", "b", "c", "1"),
        (0b11111, 0b10010, 0b10100, 0b11000, 0b10000),
    )


def n5() -> Lattice:
    """Pentagon: bottom, short side y, long side p < q, top."""
    return Lattice(
        ("0", "p", "q", "y", "1"),
        (0b11111, 0b10110, 0b10100, 0b11000, 0b10000),
    )


def downset_lattice(poset: FinitePoset) -> Lattice:
    masks = poset.downsets()
    labels = tuple(
        "{" + ",".join(poset.labels[i] for i in bits(m)) + "}" for m in masks
    )
    up = tuple(
        sum(1 << j for j, mj in enumerate(masks) if is_subset(mi, mj))
        for mi in masks
    )
    return Lattice(labels, up)


class JoinSemilattice:
    """Elements with a total, associative, commutative, idempotent join.

    The partial order is derived: i <= j iff join(i, j) == j.  The join
    is evaluated lazily through a function and memoized, so large hosts
    never materialize a full table.
    """

    def __init__(self, labels: Sequence[str], join_fn: Callable[[int, int], int]):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise InputError("semilattice labels must be unique")
        if not self.labels:
            raise InputError("semilattice must be nonempty")
        self._join_fn = join_fn
        self._memo: dict[tuple[int, int], int] = {}

    @classmethod
    def from_table(cls, labels: Sequence[str], table: Sequence[Sequence[int]]) -> "JoinSemilattice":
        rows = [tuple(r) for r in table]
        n = len(labels)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InputError("join table shape must match the element count")
        for r in rows:
            for v in r:
                if not 0 <= v < n:
                    raise InputError("join table entry out of range")
        return cls(labels, lambda i, j: rows[i][j])

    @property
    def size(self) -> int:
        return len(self.labels)

    def join(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._join_fn(i, j)
            self._memo[key] = hit
        return hit

    def leq(self, i: int, j: int) -> bool:
        return self.join(i, j) == j

    @property
    def top(self) -> int:
        out = 0
        for i in range(1, self.size):
            out = self.join(out, i)
        return out

    def bottom_or_none(self) -> int | None:
        for i in range(self.size):
            if all(self.leq(i, j) for j in range(self.size)):
                return i
        return None

    def with_bottom(self, label: str = "⊥") -> "JoinSemilattice":
        """Adjoin a fresh least element below everything."""
        name = label
        while name in self.labels:
            name += "'"
        labels = (name,) + self.labels
        inner = self

        def join_fn(i: int, j: int) -> int:
            if i == 0:
                return j
            if j == 0:
                return i
            return inner.join(i - 1, j - 1) + 1

        return JoinSemilattice(labels, join_fn)

    def join_table(self) -> list[list[int]]:
        n = self.size
        return [[self.join(i, j) for j in range(n)] for i in range(n)]

    def validate(self) -> None:
        """Check idempotence, commutativity and associativity (cubic)."""
        n = self.size
        for i in range(n):
            if self.join(i, i) != i:
                raise InputError(f"join not idempotent at {self.labels[i]}")
            for j in range(n):
                if self._join_fn(i, j) != self._join_fn(j, i):
                    raise InputError("join not commutative")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.join(self.join(i, j), k) != self.join(i, self.join(j, k)):
                        raise InputError("join not associative")

    def __repr__(self) -> str:
        return f"JoinSemilattice(n={self.size})"
