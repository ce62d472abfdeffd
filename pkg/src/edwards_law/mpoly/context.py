"""Variable contexts and monomial orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import UnknownVariable


class VarContext:
    """An ordered tuple of distinct variable names.

    The order is also the lex priority: ``names[0]`` is the largest variable.
    Contexts compare by value, so two contexts built from the same names are
    interchangeable.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not n or not (n[0].isalpha() or n[0] == "_") or not all(
                ch.isalnum() or ch == "_" for ch in n
            ):
                raise ValueError(f"invalid variable name {n!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("VarContext is immutable")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VarContext) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarContext({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def var(self, name: str):
        """The polynomial consisting of the single variable ``name``."""
        from .poly import MPoly

        exp = [0] * len(self.names)
        exp[self.index(name)] = 1
        return MPoly(self, {tuple(exp): 1})

    def vars(self, *names: str):
        return tuple(self.var(n) for n in names)

    def const(self, value):
        from .poly import MPoly

        return MPoly(self, {self.unit: value})

    @property
    def unit(self) -> tuple:
        """Exponent vector of the monomial 1."""
        return (0,) * len(self.names)

    def zero(self):
        from .poly import MPoly

        return MPoly(self, {})

    def one(self):
        return self.const(1)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; lex priority comes from the context order.

    ``key(exp)`` is increasing with the order, ``heap_key(exp)`` is
    decreasing (so ``heapq`` pops the largest monomial first).
    """

    kind: str = "lex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exp: tuple):
        if self.kind == "lex":
            return exp
        return (sum(exp), tuple(-e for e in reversed(exp)))

    def heap_key(self, exp: tuple):
        if self.kind == "lex":
            return tuple(-e for e in exp)
        return (-sum(exp), exp[::-1])

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(str(order))
