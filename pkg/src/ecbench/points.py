from __future__ import annotations

from typing import Any, NamedTuple, Optional, Tuple


class AffinePoint(NamedTuple):
    """Affine point; ``is_infinity`` marks the neutral element of models
    whose neutral element has no affine coordinates (x and y are then None)."""

    x: Any
    y: Any
    is_infinity: bool = False

    def ints(self) -> Optional[Tuple[int, int]]:
        """Plain-integer view, ``None`` for infinity (matches the oracle)."""
        if self.is_infinity:
            return None
        return (int(self.x), int(self.y))


INFINITY = AffinePoint(None, None, True)
