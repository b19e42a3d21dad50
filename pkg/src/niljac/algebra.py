"""Exact arithmetic for commutative quaternions built on nilpotent units.

The basis units ``i``, ``j``, ``k`` square to zero and every product of two
distinct units vanishes as well, so the product of two elements collapses to

    (a + u) * (b + v) == a*b + a*v + b*u

where ``u`` and ``v`` are the vector parts.  That makes the algebra
commutative and associative.  Components are plain Python integers, so every
operation is exact at any magnitude; nothing in this module ever rounds.
"""

from __future__ import annotations

from operator import index as _as_int


class NonDivisible(ArithmeticError):
    """Exact division failed because a component left a remainder.

    Carries the offending value, the divisor and (for quaternions) the name
    of the component, so a falsified divisibility claim can be reported
    precisely instead of silently truncating.
    """

    def __init__(self, value: int, divisor: int, component: str | None = None):
        self.value = value
        self.divisor = divisor
        self.component = component
        where = f"component {component} = {value}" if component else f"value {value}"
        super().__init__(f"{where} is not divisible by {divisor}")


def exact_div_int(value: int, divisor: int, component: str | None = None) -> int:
    """Divide ``value`` by ``divisor``, requiring a zero remainder.

    Raises ``ZeroDivisionError`` for a zero divisor and :class:`NonDivisible`
    when the division is not exact.
    """
    if divisor == 0:
        raise ZeroDivisionError("exact division by zero")
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise NonDivisible(value, divisor, component)
    return quotient


class NilQuat:
    """Quaternion ``s + x*i + y*j + z*k`` with integer components and
    nilpotent units.

    Values behave like immutable numbers: every operation returns a new
    instance, equality is componentwise, and a quaternion with zero vector
    part compares (and hashes) equal to the plain integer ``s``.

    >>> NilQuat(1, 1, 2, 5) * NilQuat(1, 1, 2, 5)
    NilQuat(1, 2, 4, 10)
    >>> print(NilQuat(-1, -3, -3, -10))
    -1 - 3i - 3j - 10k
    """

    __slots__ = ("s", "x", "y", "z")

    def __init__(self, s: int = 0, x: int = 0, y: int = 0, z: int = 0):
        self.s = _as_int(s)
        self.x = _as_int(x)
        self.y = _as_int(y)
        self.z = _as_int(z)

    def __repr__(self) -> str:
        return f"NilQuat({self.s}, {self.x}, {self.y}, {self.z})"

    def __str__(self) -> str:
        parts = [str(self.s)]
        for coeff, unit in ((self.x, "i"), (self.y, "j"), (self.z, "k")):
            sign = "+" if coeff >= 0 else "-"
            parts.append(f"{sign} {abs(coeff)}{unit}")
        return " ".join(parts)

    def __iter__(self):
        yield self.s
        yield self.x
        yield self.y
        yield self.z

    def __eq__(self, other) -> bool:
        if isinstance(other, NilQuat):
            return (
                self.s == other.s
                and self.x == other.x
                and self.y == other.y
                and self.z == other.z
            )
        if isinstance(other, int):
            return self.x == 0 and self.y == 0 and self.z == 0 and self.s == other
        return NotImplemented

    def __hash__(self) -> int:
        # scalar quaternions must hash like the integer they equal
        if self.x == 0 and self.y == 0 and self.z == 0:
            return hash(self.s)
        return hash((self.s, self.x, self.y, self.z))

    def __bool__(self) -> bool:
        return bool(self.s or self.x or self.y or self.z)

    def __pos__(self) -> "NilQuat":
        return self

    def __neg__(self) -> "NilQuat":
        return NilQuat(-self.s, -self.x, -self.y, -self.z)

    def __add__(self, other) -> "NilQuat":
        if isinstance(other, NilQuat):
            return NilQuat(self.s + other.s, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, int):
            return NilQuat(self.s + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "NilQuat":
        if isinstance(other, NilQuat):
            return NilQuat(self.s - other.s, self.x - other.x, self.y - other.y, self.z - other.z)
        if isinstance(other, int):
            return NilQuat(self.s - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other) -> "NilQuat":
        if isinstance(other, int):
            return NilQuat(other - self.s, -self.x, -self.y, -self.z)
        return NotImplemented

    def __mul__(self, other) -> "NilQuat":
        if isinstance(other, NilQuat):
            a, b = self.s, other.s
            return NilQuat(
                a * b,
                a * other.x + b * self.x,
                a * other.y + b * self.y,
                a * other.z + b * self.z,
            )
        if isinstance(other, int):
            return NilQuat(self.s * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    __rmul__ = __mul__  # the algebra is commutative

    def __pow__(self, exponent: int) -> "NilQuat":
        e = _as_int(exponent)
        if e < 0:
            raise ValueError("negative powers are not defined over integer components")
        result = NilQuat(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> "NilQuat":
        """Negate the vector part; an involution that fixes scalars."""
        return NilQuat(self.s, -self.x, -self.y, -self.z)

    def norm_sq(self) -> int:
        """Squared norm: the scalar part of ``q * q.conjugate()``, i.e. ``s**2``."""
        return self.s * self.s

    def exact_div(self, divisor: int) -> "NilQuat":
        """Componentwise exact division; every component must be divisible.

        Raises :class:`NonDivisible` naming the first offending component,
        or ``ZeroDivisionError`` for a zero divisor.
        """
        d = _as_int(divisor)
        return NilQuat(
            exact_div_int(self.s, d, "s"),
            exact_div_int(self.x, d, "x"),
            exact_div_int(self.y, d, "y"),
            exact_div_int(self.z, d, "z"),
        )

    @property
    def scalar_part(self) -> int:
        return self.s

    @property
    def vector_part(self) -> "NilQuat":
        return NilQuat(0, self.x, self.y, self.z)

    def to_json(self) -> list[str]:
        """Render as a 4-element array of decimal strings ``[s, x, y, z]``.

        Strings rather than numbers keep arbitrarily large components exact
        for consumers limited to 64-bit integers.
        """
        return [str(self.s), str(self.x), str(self.y), str(self.z)]


ONE = NilQuat(1)
UNIT_I = NilQuat(0, 1, 0, 0)
UNIT_J = NilQuat(0, 0, 1, 0)
UNIT_K = NilQuat(0, 0, 0, 1)
