"""Prime field arithmetic.

Internally the engine stores coefficients as plain ``int`` residues in
``[0, p)``; :class:`FieldElement` is the checked, user-facing wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("division by zero in GF(%d)" % p)
    return pow(a, p - 2, p)


def symmetric(a: int, p: int) -> int:
    """Representative of ``a`` in ``(-p/2, p/2]``, used for printing."""
    a %= p
    return a - p if a > p // 2 else a


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("characteristic %d is not prime" % self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError("mixing GF(%d) and GF(%d)" % (self.p, other.p))
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self) -> "FieldElement":
        return FieldElement(inv(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElement(self._coerce(other), self.p).inverse()

    def __rtruediv__(self, other):
        return FieldElement(self._coerce(other), self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return "%d (mod %d)" % (symmetric(self.value, self.p), self.p)
