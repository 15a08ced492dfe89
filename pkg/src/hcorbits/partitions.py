"""Partitions of n as Jordan types of nilpotent orbits in sl_n.

Row indices are 1-based throughout and a partition is treated as padded with
zeros on the right, so ``part(tau, k)`` is 0 for ``k > len(tau)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("empty partition")
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")
        if self.parts[-1] < 1:
            raise ValueError(f"non-positive part in {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        """1-based access with virtual zero padding."""
        if k < 1:
            raise IndexError(k)
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        tokens = [t for t in text.replace(" ", "").split(",") if t]
        try:
            values = [int(t) for t in tokens]
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}") from exc
        return validate_partition(values)


def validate_partition(parts: Iterable[int]) -> Partition:
    parts = list(parts)
    if not parts:
        raise ValueError("empty sequence")
    while parts and parts[-1] == 0:
        parts.pop()
    if not parts:
        raise ValueError("partition has no positive parts")
    return Partition(tuple(parts))


def boundary_codim_at_least_4(tau: Partition) -> bool:
    # tau_i - tau_{i+1} <= 1, including the last part against the zero padding
    return all(tau[k] - tau[k + 1] <= 1 for k in range(1, len(tau) + 1))


def _require_codim4(tau: Partition):
    if not boundary_codim_at_least_4(tau):
        raise ValueError(f"boundary of the orbit {tau} has codimension < 4")


def codim4_indices(tau: Partition) -> list[int]:
    """Indices i with tau_i = tau_{i+1} + 1 = tau_{i+2} + 2."""
    _require_codim4(tau)
    return [
        i for i in range(1, len(tau) + 1)
        if tau[i] == tau[i + 1] + 1 == tau[i + 2] + 2
    ]


def degeneration(tau: Partition, i: int) -> Partition:
    if i not in codim4_indices(tau):
        raise ValueError(f"{i} does not index a codimension-4 orbit of {tau}")
    rows = [tau[k] for k in range(1, max(len(tau), i + 2) + 1)]
    rows[i - 1] = rows[i + 1] = tau[i] - 1
    return validate_partition(rows)


def multiplicities(tau: Partition) -> dict[int, int]:
    return dict(sorted(Counter(tau.parts).items(), reverse=True))


def codim2_parts(tau: Partition) -> list[int]:
    _require_codim4(tau)
    m = multiplicities(tau)
    return sorted(l for l, c in m.items() if c == 1 and l != tau[1])


def row_for_part(tau: Partition, part: int) -> int:
    """The index i in codim4_indices(tau) with tau_{i+1} == part."""
    for i in codim4_indices(tau):
        if tau[i + 1] == part:
            return i
    raise ValueError(f"{part} is not a codimension-2 part of {tau}")


def so_orbit_splits(tau: Partition) -> bool:
    return all(p % 2 == 0 for p in tau.parts)


def transpose(tau: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in tau.parts if p >= c) for c in range(1, tau[1] + 1)))


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n

    def rec(rest, top):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, top), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, largest):
        yield Partition(parts)


def codim4_partitions(max_n: int) -> Iterator[Partition]:
    """Partitions with boundary codimension >= 4, for n = 1..max_n."""
    for n in range(1, max_n + 1):
        for tau in partitions_of(n):
            if boundary_codim_at_least_4(tau):
                yield tau
