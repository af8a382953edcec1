from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..coloring import Coloring


@dataclass(frozen=True)
class Rejection:
    """A recognizer's negative answer, with a witness where one exists."""

    reason: str
    certificate: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return False


class ClassSolution(NamedTuple):
    value: int
    coloring: Coloring


class NotInClassError(ValueError):
    pass
