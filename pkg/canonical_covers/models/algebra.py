"""Data models for split cover algebras and graded rings."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Mapping

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator, model_serializer, model_validator

from ..errors import DomainError, ProfileError
from ..sections.projective import h0, h1_line

logger = logging.getLogger(__name__)


class SplitBundle(RootModel[tuple[int, ...]]):
    """Direct sum of line bundles O(a_i) on a projective space, twists descending."""

    model_config = ConfigDict(frozen=True)

    @field_validator("root")
    @classmethod
    def _descending(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sorted(v, reverse=True))

    @property
    def twists(self) -> tuple[int, ...]:
        return self.root

    @property
    def rank(self) -> int:
        return len(self.root)

    @property
    def degree(self) -> int:
        return sum(self.root)

    def h0(self, k: int = 0, ambient_dim: int = 1) -> int:
        """h0 of the bundle twisted by O(k)."""
        return sum(h0(ambient_dim, a + k) for a in self.root)

    def h1(self, k: int = 0) -> int:
        """h1 of the bundle twisted by O(k) on P^1."""
        return sum(h1_line(a + k) for a in self.root)

    def hilbert_function(self, window: range, ambient_dim: int = 1) -> dict[int, int]:
        return {k: self.h0(k, ambient_dim) for k in window}

    def without(self, twist: int) -> SplitBundle:
        """Drop one summand of the given twist."""
        twists = list(self.root)
        if twist not in twists:
            raise DomainError(f"no summand O({twist}) in {list(self.root)}")
        twists.remove(twist)
        return SplitBundle(tuple(twists))

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __str__(self) -> str:
        return str(list(self.root))


class MuMode(str, Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    ISO = "iso"


class MuProfile:
    """Zero / nonzero / iso pattern of E_i x E_j -> O + E.

    Summands E_1..E_{n-1} are numbered from 1 in the descending order of their
    twists; target 0 is the O-part. Pairs are stored with i <= j, so the profile
    is symmetric by construction. Absent entries are zero.
    """

    def __init__(self, table: Mapping[tuple[int, int], Mapping[int, MuMode | str]] | None = None):
        normalized: dict[tuple[int, int], dict[int, MuMode]] = {}
        for (i, j), targets in (table or {}).items():
            key = (min(i, j), max(i, j))
            modes = {int(t): MuMode(m) for t, m in targets.items()}
            if key in normalized and normalized[key] != modes:
                raise ProfileError(f"asymmetric entries for pair {key}")
            normalized[key] = modes
        self._table = normalized

    def mode(self, i: int, j: int, target: int) -> MuMode:
        return self._table.get((min(i, j), max(i, j)), {}).get(target, MuMode.ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int], dict[int, MuMode]]]:
        for key in sorted(self._table):
            yield key, dict(self._table[key])

    def nonzero_targets(self, i: int, j: int) -> dict[int, MuMode]:
        targets = self._table.get((min(i, j), max(i, j)), {})
        return {t: m for t, m in targets.items() if m is not MuMode.ZERO}

    def is_symmetric(self) -> bool:
        return all(i <= j for i, j in self._table)

    def to_dict(self) -> dict[str, dict[str, str]]:
        return {
            f"{i},{j}": {str(t): m.value for t, m in sorted(targets.items())}
            for (i, j), targets in self.items()
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MuProfile):
            return NotImplemented
        strip = lambda p: {k: {t: m for t, m in v.items() if m is not MuMode.ZERO} for k, v in p._table.items()}
        return {k: v for k, v in strip(self).items() if v} == {k: v for k, v in strip(other).items() if v}

    def __repr__(self) -> str:
        return f"MuProfile({self.to_dict()})"


@dataclass(frozen=True)
class CoverAlgebra:
    """pi_* O_X = O + E for a degree-n cover of a projective space.

    Profile entries that cannot be nonzero for degree reasons are forced to zero:
    O(a) x O(b) -> O(c) is given by a form of degree c - a - b.
    """

    degree: int
    target_twist: int
    bundle: SplitBundle
    profile: MuProfile = field(default_factory=MuProfile)
    ambient_dim: int = 1

    def __post_init__(self):
        if self.degree < 2:
            raise DomainError(f"cover degree must be at least 2, got {self.degree}")
        if self.bundle.rank != self.degree - 1:
            raise DomainError(
                f"rank of O + E is {self.bundle.rank + 1}, expected {self.degree}"
            )
        object.__setattr__(self, "profile", self._force_degrees(self.profile))

    def target_twist_of(self, target: int) -> int:
        return 0 if target == 0 else self.bundle.twists[target - 1]

    def _force_degrees(self, profile: MuProfile) -> MuProfile:
        n = self.degree
        table: dict[tuple[int, int], dict[int, MuMode]] = {}
        for (i, j), targets in profile.items():
            if not (1 <= i < n and 1 <= j < n):
                raise ProfileError(f"pair ({i}, {j}) outside E_1..E_{n - 1}")
            kept = {}
            for target, mode in targets.items():
                if not 0 <= target < n:
                    raise ProfileError(f"target {target} outside O + E_1..E_{n - 1}")
                excess = self.target_twist_of(target) - self.bundle.twists[i - 1] - self.bundle.twists[j - 1]
                if mode is MuMode.ZERO:
                    continue
                if excess < 0:
                    logger.debug("forcing E%d x E%d -> %d to zero (degree %d)", i, j, target, excess)
                    continue
                if mode is MuMode.ISO and excess != 0:
                    raise ProfileError(
                        f"E_{i} x E_{j} -> block {target} cannot be an isomorphism:"
                        f" twists differ by {excess}"
                    )
                kept[target] = mode
            if kept:
                table[(i, j)] = kept
        return MuProfile(table)

    def closed_subalgebra_rank(self) -> int | None:
        """Rank of O + E_1 + ... + E_{n-2} when it is closed under multiplication."""
        n = self.degree
        last = n - 1
        for i in range(1, last):
            for j in range(i, last):
                if last in self.profile.nonzero_targets(i, j):
                    return None
        return n - 1

    def integrality_contradiction(self) -> bool:
        """A rank-k subalgebra of a degree-n integral cover needs k | n."""
        k = self.closed_subalgebra_rank()
        return k is not None and 1 < k < self.degree and self.degree % k != 0


class GeneratorProfile(BaseModel):
    """Minimal generator counts by degree; degree 1 is implicit."""

    counts: dict[int, int] = Field(default_factory=dict, description="degree -> count")

    @model_validator(mode="before")
    @classmethod
    def _accept_plain_mapping(cls, data: Any) -> Any:
        if isinstance(data, Mapping) and "counts" not in data:
            return {"counts": {int(k): v for k, v in data.items()}}
        return data

    @field_validator("counts")
    @classmethod
    def _drop_zeros(cls, v: dict[int, int]) -> dict[int, int]:
        for degree, count in v.items():
            if degree < 2:
                raise ValueError(f"generator degree must be at least 2, got {degree}")
            if count < 0:
                raise ValueError(f"negative generator count in degree {degree}")
        return {d: c for d, c in sorted(v.items()) if c}

    @model_serializer
    def _serialize(self) -> dict[str, int]:
        top = max([4, *self.counts])
        return {str(d): self.counts.get(d, 0) for d in range(2, top + 1)}

    def count(self, degree: int) -> int:
        return self.counts.get(degree, 0)

    @property
    def max_degree(self) -> int:
        return max(self.counts, default=1)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{d}: {c}" for d, c in self.counts.items()) + "}"


class GradedPiece(BaseModel):
    """Block decomposition of one graded piece of a section ring."""

    level: int = Field(..., ge=0)
    twists: list[int] = Field(..., description="O-block first, then the E-blocks")
    dims: list[int]

    @property
    def dimension(self) -> int:
        return sum(self.dims)
