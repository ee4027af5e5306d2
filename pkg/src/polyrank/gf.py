"""Prime-field scalars GF(p) and dense univariate polynomials over them.

Polynomials are immutable. Coefficients are stored low-to-high in a tuple
with no trailing zeros; the zero polynomial is the empty tuple. Degrees are
plain ints, except that the zero polynomial has degree NEG_INF, a sentinel
that compares below every int and absorbs integer shifts.
"""

from __future__ import annotations

from typing import Iterable, Sequence

NEG_INF = float("-inf")

# schoolbook multiplication below this operand length, Karatsuba above
KARATSUBA_CUTOFF = 32

_MAX_MODULUS = 2**31 - 1

# deterministic Miller-Rabin witness set for n < 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ExactDivisionError(ValueError):
    """Raised when a division that must be exact leaves a remainder."""


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, fixed witness set)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class GF:
    """The prime field GF(p) for a prime modulus p, 2 <= p <= 2**31 - 1.

    Elements are canonical residues, i.e. plain ints in [0, p).
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"modulus must be an int, got {p!r}")
        if not 2 <= p <= _MAX_MODULUS:
            raise ValueError(f"modulus must be in [2, 2**31 - 1], got {p}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def validate(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.p:
            raise ValueError(f"{a!r} is not a canonical residue mod {self.p}")
        return a

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return pow(a, -1, self.p)


def _pack_bits(coeffs: Sequence[int]) -> int:
    v = 0
    for i, c in enumerate(coeffs):
        if c:
            v |= 1 << i
    return v


def _unpack_bits(v: int) -> tuple:
    return tuple((v >> i) & 1 for i in range(v.bit_length()))


def _mul_gf2(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Carry-less product of two GF(2) polynomials packed into ints."""
    ia = _pack_bits(a)
    ib = _pack_bits(b)
    acc = 0
    while ia:
        low = ia & -ia
        acc ^= ib * low
        ia ^= low
    return _unpack_bits(acc)


def _mul_schoolbook(a: Sequence[int], b: Sequence[int], p: int) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [c % p for c in out]


def _add_lists(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return out


def _mul_any(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) < KARATSUBA_CUTOFF:
        return _mul_schoolbook(a, b, p)
    return _mul_karatsuba(a, b, p)


def _mul_karatsuba(a: Sequence[int], b: Sequence[int], p: int) -> list:
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    t0 = _mul_any(a0, b0, p)
    t2 = _mul_any(a1, b1, p)
    tm = _mul_any(_add_lists(a0, a1, p), _add_lists(b0, b1, p), p)
    t1 = list(tm)
    for i, c in enumerate(t0):
        t1[i] = (t1[i] - c) % p
    for i, c in enumerate(t2):
        t1[i] = (t1[i] - c) % p
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(t0):
        out[i] = c
    for i, c in enumerate(t1):
        if c:
            out[h + i] = (out[h + i] + c) % p
    for i, c in enumerate(t2):
        if c:
            out[2 * h + i] = (out[2 * h + i] + c) % p
    return out


class Poly:
    """A dense univariate polynomial over GF(p).

    Construction reduces coefficients mod p and strips trailing zeros, so
    equal polynomials always have equal coefficient tuples.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        if not isinstance(field, GF):
            raise ValueError(f"expected a GF field, got {field!r}")
        cs = [int(c) % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field: GF) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: GF) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: GF, k: int, c: int = 1) -> "Poly":
        """c * x**k"""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls(field, (0,) * k + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check_field(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if self.field.p != other.field.p:
            raise ValueError(
                f"mixed moduli: {self.field.p} vs {other.field.p}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field.p == other.field.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        return Poly(self.field, _add_lists(self.coeffs, other.coeffs, self.field.p))

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        a, b, p = self.coeffs, other.coeffs, self.field.p
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = (out[i] - c) % p
        return Poly(self.field, out)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field)
        if self.field.p == 2:
            return Poly(self.field, _mul_gf2(a, b))
        return Poly(self.field, _mul_any(a, b, self.field.p))

    def scale(self, c: int) -> "Poly":
        c %= self.field.p
        return Poly(self.field, [c * a for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        if len(rem) - 1 < dd:
            return Poly(self.field), Poly(self.field, rem)
        inv_lc = pow(den[-1], -1, p)
        quo = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] % p
            if c:
                q = c * inv_lc % p
                quo[i - dd] = q
                for j, d in enumerate(den):
                    rem[i - dd + j] = (rem[i - dd + j] - q * d) % p
        return Poly(self.field, quo), Poly(self.field, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def truncate(self, order: int) -> "Poly":
        """self mod x**order"""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return Poly(self.field, self.coeffs[:order])

    def mul_x_pow(self, k: int) -> "Poly":
        """self * x**k"""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def div_x_pow(self, k: int) -> "Poly":
        """Exact division by x**k; the low k coefficients must vanish."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if any(self.coeffs[:k]):
            raise ExactDivisionError(
                f"polynomial is not divisible by x**{k}"
            )
        return Poly(self.field, self.coeffs[k:])

    def __call__(self, alpha: int) -> int:
        """Evaluate at alpha by Horner's rule."""
        p = self.field.p
        alpha %= p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * alpha + c) % p
        return acc

    def to_token(self) -> str:
        """Text form: space-separated residues low-to-high, '0' when zero."""
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_token(cls, field: GF, token: str) -> "Poly":
        parts = token.split()
        if not parts:
            raise ValueError("empty polynomial token")
        coeffs = []
        for part in parts:
            try:
                c = int(part)
            except ValueError:
                raise ValueError(f"bad coefficient token {part!r}") from None
            if not 0 <= c < field.p:
                raise ValueError(
                    f"coefficient {c} out of range [0, {field.p})"
                )
            coeffs.append(c)
        if coeffs == [0]:
            return cls(field)
        if coeffs and coeffs[-1] == 0:
            raise ValueError("polynomial token has a trailing zero coefficient")
        return cls(field, coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"<Poly {self} over GF({self.field.p})>"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._check_field(b)
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.scale(pow(a.leading_coefficient(), -1, a.field.p))
