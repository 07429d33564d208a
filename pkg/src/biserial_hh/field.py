"""Exact scalar fields: the rationals and prime fields."""

from gmpy2 import mpq
from sympy import GF


class Field:
    """Coefficient field of characteristic 0 (rationals) or a prime ``p``.

    Calling the field coerces ints, fractions and ``"p/q"`` strings into
    exact elements that support ``+ - * /`` and comparison with 0.
    """

    def __init__(self, char=0):
        char = int(char)
        if char < 0 or char == 1:
            raise ValueError(f"invalid characteristic {char}")
        if char > 1 and any(char % q == 0 for q in range(2, int(char**0.5) + 1)):
            raise ValueError(f"characteristic {char} is not prime")
        self.char = char
        self._gf = GF(char) if char else None
        self._gf_type = type(self._gf(0)) if char else None

    def __call__(self, x):
        if self._gf is None:
            if isinstance(x, str):
                return mpq(x)
            return mpq(x)
        if isinstance(x, self._gf_type):
            return x
        if isinstance(x, str):
            x = mpq(x)
        if not isinstance(x, int):
            x = mpq(x)
            return self._gf(int(x.numerator)) / self._gf(int(x.denominator))
        return self._gf(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def to_str(self, x):
        """Lossless string form: ``"p/q"`` (or ``"k"``) for rationals, residue otherwise."""
        if self._gf is None:
            x = mpq(x)
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(int(self(x)) % self.char)

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)
