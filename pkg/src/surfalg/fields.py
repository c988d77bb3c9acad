"""Exact coefficient fields: the rationals and prime fields GF(p).

Elements of GF(p) are plain Python ints in [0, p); rational elements are
`fractions.Fraction`.  Field objects are immutable and hashable, so specs
and tables can carry them around and compare them.
"""

from fractions import Fraction

# mod-p matrix kernels accumulate products in int64; keep p small enough
# that k * (p-1)^2 never overflows for the matrix sizes we reach.
MAX_PRIME = 1 << 20


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GF:
    """The prime field with p elements."""

    __slots__ = ("p",)
    is_modp = True

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"GF order must be prime, got {p}")
        if p > MAX_PRIME:
            raise ValueError(f"prime too large for the mod-p kernel: {p}")
        self.p = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def to_json(self, a):
        return int(a)

    def from_json(self, v):
        return int(v) % self.p

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def name(self):
        return f"GF({self.p})"


class RationalField:
    """The field of rationals, with Fraction elements."""

    __slots__ = ()
    is_modp = False

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        return Fraction(a) / b

    def parse(self, text):
        return Fraction(text.strip())

    def to_json(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def from_json(self, v):
        return Fraction(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @property
    def name(self):
        return "Q"


QQ = RationalField()


def field_from_name(name):
    """Parse a field descriptor: "Q" or "GF(p)"."""
    text = name.strip()
    if text in ("Q", "QQ", "rationals"):
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        return GF(int(text[3:-1]))
    raise ValueError(f"unknown field descriptor: {name!r}")
