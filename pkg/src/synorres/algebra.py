"""Exact coefficient fields and monomials.

All homology in this package is computed over an exact field: the rationals
(the default) or a prime field GF(p).  Floating point never appears.  Field
elements are ordinary Python objects supporting +, -, *, / and truthiness
(zero is falsy), so the linear algebra layer stays field-agnostic.

Monomials are immutable exponent vectors over a fixed variable list.  The
variable names themselves are carried by whatever owns the ambient ring (an
ideal spec or an lcm lattice); a Monomial only knows its exponents.  The text
grammar is `var` or `var^k` joined by `*`, with the bare token `1` denoting
the unit monomial.
"""

from __future__ import annotations

from fractions import Fraction


class DimensionError(ValueError):
    """Operands live in different dimensions (variable counts, chain dims)."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of the operation."""


class ValidationError(ValueError):
    """Input fails a structural precondition."""


# --- coefficient fields ---


class RationalField:
    """The field of rational numbers, elements are fractions.Fraction."""

    name = "QQ"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeFieldElement:
    """A residue in GF(p).  Arithmetic is mod p; division by inverse."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other) -> "PrimeFieldElement":
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        if not isinstance(other, PrimeFieldElement) or other.p != self.p:
            raise DomainError("mixed prime-field arithmetic")
        return other

    def __add__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return self * other.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return PrimeFieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return (
            isinstance(other, PrimeFieldElement)
            and self.p == other.p
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def of(self, n: int) -> PrimeFieldElement:
        return PrimeFieldElement(int(n), self.p)

    def parse(self, text: str) -> PrimeFieldElement:
        return self.of(int(text))

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("GF", self.p))


def field_from_flag(flag: str):
    """Map the CLI --field value to a field: 'q' -> rationals, '<p>' -> GF(p)."""
    flag = flag.strip().lower()
    if flag in ("q", "qq", "0"):
        return RationalField()
    try:
        p = int(flag)
    except ValueError:
        raise DomainError(f"unrecognized field flag {flag!r}") from None
    return PrimeField(p)


# --- monomials ---


class Monomial:
    """An immutable exponent vector; ordering is lexicographic."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def _match(self, other: "Monomial"):
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if len(self.exps) != len(other.exps):
            raise DimensionError("monomials over different variable counts")

    def lcm(self, other: "Monomial") -> "Monomial":
        self._match(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        self._match(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; other must divide self."""
        self._match(other)
        if not other.divides(self):
            raise DomainError("quotient of non-divisible monomials")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._match(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        self._match(other)
        return self.exps < other.exps

    def __le__(self, other):
        self._match(other)
        return self.exps <= other.exps

    def format(self, variables) -> str:
        if len(variables) != len(self.exps):
            raise DimensionError("variable list does not match exponent vector")
        parts = []
        for name, e in zip(variables, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial{self.exps}"


def parse_monomial(text: str, variables) -> Monomial:
    """Parse `var`, `var^k` joined by `*`; bare `1` is the unit monomial."""
    text = text.strip()
    index = {name: i for i, name in enumerate(variables)}
    exps = [0] * len(variables)
    if text == "1":
        return Monomial(exps)
    if not text:
        raise ValidationError("empty monomial text")
    for token in text.split("*"):
        token = token.strip()
        if "^" in token:
            base, _, power = token.partition("^")
            base = base.strip()
            try:
                k = int(power.strip())
            except ValueError:
                raise ValidationError(f"bad exponent in token {token!r}") from None
            if k < 1:
                raise ValidationError(f"exponent must be positive in {token!r}")
        else:
            base, k = token, 1
        if base not in index:
            raise ValidationError(f"unknown variable {base!r}")
        exps[index[base]] += k
    return Monomial(exps)
