"""ab-diagrams: nilpotent K-orbits for the inner pair (sl_n, s(gl_k x gl_{n-k})).

A diagram is a Young diagram whose rows carry alternating a/b labels. A row is
fixed by its length and first label, and rows of equal length are unordered,
so diagrams are stored with rows sorted by (-length, label string).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .partitions import Partition, boundary_codim_at_least_4


def _alternating(row: str) -> bool:
    return bool(row) and set(row) <= {"a", "b"} and all(x != y for x, y in zip(row, row[1:]))


def _row(length: int, first: str) -> str:
    other = "b" if first == "a" else "a"
    return "".join(first if k % 2 == 0 else other for k in range(length))


@dataclass(frozen=True)
class ABDiagram:
    rows: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(sorted(self.rows, key=lambda r: (-len(r), r)))
        for r in rows:
            if not _alternating(r):
                raise ValueError(f"row {r!r} is not an alternating a/b word")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def a_count(self) -> int:
        return sum(r.count("a") for r in self.rows)

    def __str__(self):
        return "/".join(self.rows)

    @classmethod
    def parse(cls, text: str) -> "ABDiagram":
        return cls(tuple(r for r in text.strip().split("/") if r))


def enumerate_ab_diagrams(tau: Partition, k: int) -> list[ABDiagram]:
    """All diagrams of shape tau with exactly k labels 'a' (0 <= k <= n)."""
    if not 0 <= k <= tau.n:
        raise ValueError(f"k={k} outside 0..{tau.n}")
    lengths = sorted(set(tau.parts), reverse=True)
    counts = [tau.parts.count(j) for j in lengths]
    found = []
    # n_j^a rows of length j start with 'a'; the rest start with 'b'
    for starts in product(*(range(c + 1) for c in counts)):
        total = sum(
            na * ((j + 1) // 2) + (c - na) * (j // 2)
            for j, c, na in zip(lengths, counts, starts)
        )
        if total != k:
            continue
        rows = []
        for j, c, na in zip(lengths, counts, starts):
            rows += [_row(j, "a")] * na + [_row(j, "b")] * (c - na)
        found.append(ABDiagram(tuple(rows)))
    return sorted(found, key=lambda d: d.rows)


def _end_removals(row: str):
    yield row[1:], row[0]
    if len(row) > 1:
        yield row[:-1], row[-1]


def closure_covers(d: ABDiagram) -> list[ABDiagram]:
    """Diagrams d' with d obtained from d' by moving one labelled box up.

    Equivalently: take an end box of some row and attach it, label kept, to
    an end of a row at least as long; both rows must stay alternating.
    """
    rows = list(d.rows)
    out = set()
    for src, row in enumerate(rows):
        for rest, label in _end_removals(row):
            for dst, target in enumerate(rows):
                if dst == src or len(target) < len(row):
                    continue
                for grown in (label + target, target + label):
                    if not _alternating(grown):
                        continue
                    new = [r for t, r in enumerate(rows) if t not in (src, dst)]
                    new.append(grown)
                    if rest:
                        new.append(rest)
                    out.add(ABDiagram(tuple(new)))
    return sorted(out, key=lambda e: e.rows)


def levi_blocks(d: ABDiagram) -> dict[int, tuple[int, int]]:
    blocks: dict[int, list[int]] = {}
    for r in d.rows:
        counts = blocks.setdefault(len(r), [0, 0])
        counts[0 if r[0] == "a" else 1] += 1
    return {j: (na, nb) for j, (na, nb) in sorted(blocks.items(), reverse=True)}


def inner_case_verdict(tau: Partition, k: int) -> dict:
    if not boundary_codim_at_least_4(tau):
        raise ValueError(f"boundary of the orbit {tau} has codimension < 4")
    if not 0 < k < tau.n:
        raise ValueError(f"k={k} outside 1..{tau.n - 1}")
    diagrams = enumerate_ab_diagrams(tau, k)
    return {
        "verdict": "equivalence",
        "k": k,
        "k_orbits": [
            {"diagram": list(d.rows), "levi_blocks": {str(j): list(v) for j, v in levi_blocks(d).items()}}
            for d in diagrams
        ],
        "rule": "inner involution: every a2 slice is inner, the restriction functor is an equivalence",
    }
