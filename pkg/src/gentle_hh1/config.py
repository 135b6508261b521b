"""Run configuration for corpus verification."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Field

MAX_VERTICES_CAP = 4
MAX_ARROWS_CAP = 5


@dataclass(frozen=True)
class CorpusConfig:
    max_vertices: int = 3
    max_arrows: int = 4
    fields: tuple[str, ...] = ("Q", "F2", "F3")
    checks: tuple[str, ...] | None = None  # None runs every check group

    def __post_init__(self):
        if not 1 <= self.max_vertices <= MAX_VERTICES_CAP:
            raise ValueError(f"max_vertices must lie in 1..{MAX_VERTICES_CAP}")
        if not 0 <= self.max_arrows <= MAX_ARROWS_CAP:
            raise ValueError(f"max_arrows must lie in 0..{MAX_ARROWS_CAP}")
        for f in self.fields:
            Field.parse(f)

    @property
    def field_objects(self) -> list[Field]:
        return [Field.parse(f) for f in self.fields]

    @classmethod
    def from_strings(cls, max_vertices: int, max_arrows: int, fields: str, checks: str | None = None) -> "CorpusConfig":
        return cls(
            max_vertices,
            max_arrows,
            tuple(s.strip() for s in fields.split(",") if s.strip()),
            tuple(c.strip() for c in checks.split(",")) if checks else None,
        )
