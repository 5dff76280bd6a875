"""Core record types and permutation algebra.

A :class:`Permutation` stores a slot-to-position mapping: ``mapping[i] == k``
means the item shown at slot ``i`` belongs at position ``k``.  All indices are
zero-based internally; rendering code is responsible for any one-based display.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, TypeVar

from .errors import (
    InvalidPermutationError,
    InvalidRankError,
    InvalidSizeError,
    ShapeError,
)

T = TypeVar("T")


class Modality(str, enum.Enum):
    MULTIMODAL = "multimodal"
    TEXT_ONLY = "text_only"
    IMAGE_ONLY = "image_only"


class Source(str, enum.Enum):
    WIKIHOW = "wikihow"
    RECIPEQA = "recipeqa"
    OTHER = "other"


class ModalityHelp(str, enum.Enum):
    BOTH = "both"
    TEXT_ONLY = "text_only"
    IMAGE_ONLY = "image_only"
    NEITHER = "neither"


@dataclass(frozen=True)
class Permutation:
    """Immutable bijection from slots onto positions 0..n-1."""

    mapping: tuple[int, ...]

    def __init__(self, mapping: Sequence[int]):
        values = tuple(int(v) for v in mapping)
        if len(values) == 0:
            raise InvalidSizeError("permutation must have at least one element")
        if sorted(values) != list(range(len(values))):
            raise InvalidPermutationError(
                f"mapping {values!r} is not a bijection onto 0..{len(values) - 1}"
            )
        object.__setattr__(self, "mapping", values)

    @property
    def n(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise InvalidSizeError(f"identity needs n >= 1, got {n}")
        return cls(range(n))

    @classmethod
    def from_ordering(cls, ordering: Sequence[int]) -> "Permutation":
        """Build from an item ordering: ``ordering[k]`` is the slot at position k."""
        order = list(ordering)
        mapping = [0] * len(order)
        if sorted(order) != list(range(len(order))):
            raise InvalidPermutationError(f"ordering {order!r} is not a permutation")
        for pos, slot in enumerate(order):
            mapping[slot] = pos
        return cls(mapping)

    def ordering(self) -> tuple[int, ...]:
        """Slots listed in target-position order (the inverse mapping)."""
        return self.inverse().mapping

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for slot, pos in enumerate(self.mapping):
            inv[pos] = slot
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition: apply ``other`` first, then self."""
        if other.n != self.n:
            raise ShapeError(f"cannot compose sizes {self.n} and {other.n}")
        return Permutation(self.mapping[v] for v in other.mapping)

    def apply(self, items: Sequence[T]) -> list[T]:
        """Scatter items so that ``result[mapping[i]] == items[i]``."""
        if len(items) != self.n:
            raise ShapeError(f"expected {self.n} items, got {len(items)}")
        out: list[T] = [None] * self.n  # type: ignore[list-item]
        for slot, pos in enumerate(self.mapping):
            out[pos] = items[slot]
        return out

    def is_identity(self) -> bool:
        return all(pos == slot for slot, pos in enumerate(self.mapping))


@dataclass(frozen=True)
class Step:
    step_id: str
    sentences: tuple[str, ...] = ()
    token_count: int = 0
    image_refs: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "image_refs", tuple(self.image_refs))
        if len(self.sentences) > 5:
            raise InvalidSizeError(
                f"step {self.step_id!r} has {len(self.sentences)} sentences, limit is 5"
            )
        if self.token_count < 0:
            raise InvalidParameter(f"step {self.step_id!r} has negative token_count")
        if not self.sentences and not self.image_refs:
            raise InvalidSizeError(
                f"step {self.step_id!r} carries neither text nor images"
            )
        if self.sentences and self.token_count < len(self.sentences):
            raise InvalidSizeError(
                f"step {self.step_id!r}: token_count {self.token_count} below "
                f"sentence count {len(self.sentences)}"
            )


# Alias so the validation above reads naturally while reusing the shared type.
from .errors import InvalidParameterError as InvalidParameter  # noqa: E402


@dataclass(frozen=True)
class Manual:
    manual_id: str
    goal: str
    source: Source
    category_path: tuple[str, ...]
    steps: tuple[Step, ...]
    golden: bool = False

    def __post_init__(self):
        object.__setattr__(self, "category_path", tuple(self.category_path))
        object.__setattr__(self, "steps", tuple(self.steps))
        if len(self.steps) < 2:
            raise InvalidSizeError(
                f"manual {self.manual_id!r} has {len(self.steps)} steps, need at least 2"
            )
        ids = [s.step_id for s in self.steps]
        if len(set(ids)) != len(ids):
            raise InvalidSizeError(f"manual {self.manual_id!r} has duplicate step ids")

    @property
    def n_steps(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ScrambledInstance:
    manual_id: str
    modality: Modality
    scramble: Permutation
    seed: int

    @property
    def instance_id(self) -> str:
        return f"{self.manual_id}:{self.modality.value}"


@dataclass(frozen=True)
class OrderPrediction:
    instance_id: str
    predicted: Permutation
    objective_value: float | None = None
    per_position_confidence: tuple[float, ...] | None = None

    def __post_init__(self):
        conf = self.per_position_confidence
        if conf is not None:
            conf = tuple(float(c) for c in conf)
            object.__setattr__(self, "per_position_confidence", conf)
            if len(conf) != self.predicted.n:
                raise ShapeError(
                    f"{self.instance_id}: {len(conf)} confidences for "
                    f"{self.predicted.n} positions"
                )
            if any(c < 0.0 or c > 1.0 for c in conf):
                raise InvalidParameter(
                    f"{self.instance_id}: confidences must lie in [0, 1]"
                )


@dataclass(frozen=True)
class ReferenceSet:
    """Ground-truth order plus any accepted alternative orders.

    Alternatives equal to the original are dropped, as are duplicates, so the
    stored set is always canonical.
    """

    original: Permutation
    alternatives: tuple[Permutation, ...] = ()

    def __post_init__(self):
        seen = {self.original.mapping}
        kept: list[Permutation] = []
        for alt in self.alternatives:
            if alt.n != self.original.n:
                raise InvalidReferenceSize(
                    f"alternative of size {alt.n} against original of size {self.original.n}"
                )
            if alt.mapping in seen:
                continue
            seen.add(alt.mapping)
            kept.append(alt)
        object.__setattr__(self, "alternatives", tuple(kept))

    def all_references(self) -> tuple[Permutation, ...]:
        """Original first, then alternatives; index 0 is always the original."""
        return (self.original,) + self.alternatives

    @property
    def reference_count(self) -> int:
        return 1 + len(self.alternatives)


from .errors import InvalidReferenceError as InvalidReferenceSize  # noqa: E402


@dataclass(frozen=True)
class CompletionResult:
    """Outcome of one next-step retrieval query."""

    instance_id: str
    rank_of_gt: int
    position_correct: bool

    def __post_init__(self):
        if self.rank_of_gt < 1:
            raise InvalidRankError(
                f"{self.instance_id}: rank must be >= 1, got {self.rank_of_gt}"
            )


@dataclass(frozen=True)
class WorkerResponse:
    worker_id: str
    instance_id: str
    modality: Modality
    submitted_order: Permutation
    confidence: int
    modality_help: ModalityHelp

    def __post_init__(self):
        if not 1 <= int(self.confidence) <= 5:
            raise InvalidParameter(
                f"confidence must be in 1..5, got {self.confidence}"
            )
