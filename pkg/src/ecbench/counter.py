"""Operation tallies for field and point arithmetic.

Field and point routines report into whichever :class:`OpCounter` is active
in the current context (see :func:`counting`). Nothing is recorded when no
counter is active, so the arithmetic can be used without instrumentation.
The active counter lives in a :class:`contextvars.ContextVar`; concurrent
runs in separate threads or tasks each see their own counter.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import asdict, dataclass, field, fields
from typing import Iterator, Optional

_active: contextvars.ContextVar[Optional["OpCounter"]] = contextvars.ContextVar(
    "ecbench_active_counter", default=None
)


@dataclass
class OpCounter:
    field_mul: int = 0
    field_sqr: int = 0
    field_add_sub: int = 0
    field_inv: int = 0
    const_mul: int = 0
    point_add: int = 0
    point_double: int = 0
    point_triple: int = 0
    # inverted Edwards steps redone in standard Edwards coordinates
    fallbacks: int = 0
    # separate bank for precomputation-table construction
    precomp: Optional["OpCounter"] = field(default=None, repr=False, compare=False)

    def precomp_bank(self) -> "OpCounter":
        if self.precomp is None:
            self.precomp = OpCounter()
        return self.precomp

    def report(self) -> "CounterReport":
        return counter_report(self)


TALLY_NAMES = tuple(f.name for f in fields(OpCounter) if f.name != "precomp")


@dataclass(frozen=True)
class CounterReport:
    """Immutable snapshot of an :class:`OpCounter`."""

    field_mul: int = 0
    field_sqr: int = 0
    field_add_sub: int = 0
    field_inv: int = 0
    const_mul: int = 0
    point_add: int = 0
    point_double: int = 0
    point_triple: int = 0
    fallbacks: int = 0
    precomp: Optional["CounterReport"] = None

    def __sub__(self, other: "CounterReport") -> "CounterReport":
        return CounterReport(**{k: getattr(self, k) - getattr(other, k) for k in TALLY_NAMES})

    @property
    def mults(self) -> int:
        """General field multiplications plus squarings (constant mults excluded)."""
        return self.field_mul + self.field_sqr

    def as_dict(self) -> dict:
        d = asdict(self)
        if self.precomp is None:
            d.pop("precomp")
        return d


def counter_report(counter: OpCounter) -> CounterReport:
    pre = counter_report(counter.precomp) if counter.precomp is not None else None
    return CounterReport(**{k: getattr(counter, k) for k in TALLY_NAMES}, precomp=pre)


def active() -> Optional[OpCounter]:
    return _active.get()


@contextlib.contextmanager
def counting(counter: Optional[OpCounter]) -> Iterator[Optional[OpCounter]]:
    """Route tallies to ``counter`` (``None`` suspends counting)."""
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)
