"""Exact arithmetic in the number field Q(i, sqrt2, sqrt3).

Every quantity that appears in the structure constants of the lattice
vertex algebra lives in the degree-8 field Q(i, sqrt2, sqrt3).  A field
element is stored as 8 rational coordinates over the basis

    1, sqrt2, sqrt3, sqrt6, i, sqrt2*i, sqrt3*i, sqrt6*i

in that order.  Coordinates are `gmpy2.mpq` when gmpy2 is available and
`fractions.Fraction` otherwise; the two types interoperate and compare
equal, so nothing downstream needs to care which one is active.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    RAT = Fraction

_R0 = RAT(0)
_R1 = RAT(1)

# Multiplication of the radical parts {1, sqrt2, sqrt3, sqrt6}: entry
# (p, q) -> (r, f) meaning basis_p * basis_q = f * basis_r.
_RMUL = (
    ((0, 1), (1, 1), (2, 1), (3, 1)),
    ((1, 1), (0, 2), (3, 1), (2, 2)),
    ((2, 1), (3, 1), (0, 3), (1, 3)),
    ((3, 1), (2, 2), (1, 3), (0, 6)),
)

# Full 8x8 table including the imaginary flag: index = radical + 4*imag.
_MUL = tuple(
    tuple(
        (
            _RMUL[p % 4][q % 4][0] + 4 * ((p // 4 + q // 4) % 2),
            -_RMUL[p % 4][q % 4][1] if (p // 4 and q // 4) else _RMUL[p % 4][q % 4][1],
        )
        for q in range(8)
    )
    for p in range(8)
)

_LABELS = ("", "√2", "√3", "√6", "i", "√2·i", "√3·i", "√6·i")


def rat(x):
    """Coerce an int, Fraction, mpq or ratio string to the rational type."""
    if isinstance(x, float):
        raise TypeError("refusing to build an exact rational from a float")
    return RAT(x)


class Scalar:
    """An element of Q(i, sqrt2, sqrt3) with exact rational coordinates."""

    __slots__ = ("co",)

    def __init__(self, co):
        self.co = tuple(co)
        if len(self.co) != 8:
            raise ValueError("Scalar needs exactly 8 coordinates")

    @classmethod
    def from_rat(cls, x):
        return cls((rat(x), _R0, _R0, _R0, _R0, _R0, _R0, _R0))

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.co, other.co
        return Scalar((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3],
                       a[4] + b[4], a[5] + b[5], a[6] + b[6], a[7] + b[7]))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(tuple(-x for x in self.co))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = [_R0] * 8
        for p, x in enumerate(self.co):
            if not x:
                continue
            for q, y in enumerate(other.co):
                if not y:
                    continue
                m, f = _MUL[p][q]
                out[m] += x * y * f
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_rat_sqrt2(self, r, e):
        """self * r * sqrt2**e in one pass, for rational r and int e.

        This is the hot path of the mode engine: a fused scale avoids
        building two intermediate field elements per contribution.
        """
        sh = e >> 1
        m = rat(r) * (RAT(1 << sh) if sh >= 0 else RAT(1, 1 << -sh))
        a = self.co
        if e & 1:
            m2 = m + m
            return Scalar((m2 * a[1], m * a[0], m2 * a[3], m * a[2],
                           m2 * a[5], m * a[4], m2 * a[7], m * a[6]))
        return Scalar((m * a[0], m * a[1], m * a[2], m * a[3],
                       m * a[4], m * a[5], m * a[6], m * a[7]))

    def inv(self):
        """Multiplicative inverse via successive conjugations."""
        if not self:
            raise ZeroDivisionError("inverting zero field element")
        a_bar = self.conj_i()
        b = self * a_bar
        b_bar = b.conj_sqrt2()
        c = b * b_bar
        c_bar = c.conj_sqrt3()
        d = c * c_bar
        if any(d.co[k] for k in range(1, 8)):
            raise ArithmeticError("norm tower failed to land in Q")
        scale = 1 / d.co[0]
        num = a_bar * b_bar * c_bar
        return Scalar(tuple(x * scale for x in num.co))

    def __truediv__(self, other):
        return self * _coerce(other).inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    # -- conjugations ---------------------------------------------------

    def conj_i(self):
        a = self.co
        return Scalar((a[0], a[1], a[2], a[3], -a[4], -a[5], -a[6], -a[7]))

    def conj_sqrt2(self):
        a = self.co
        return Scalar((a[0], -a[1], a[2], -a[3], a[4], -a[5], a[6], -a[7]))

    def conj_sqrt3(self):
        a = self.co
        return Scalar((a[0], a[1], -a[2], -a[3], a[4], a[5], -a[6], -a[7]))

    # -- predicates and conversions --------------------------------------

    def __bool__(self):
        return any(self.co)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or type(other) is type(_R1):
            other = _coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.co == other.co

    def __hash__(self):
        return hash(self.co)

    def is_rational(self):
        return not any(self.co[k] for k in range(1, 8))

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number: %s" % self)
        return Fraction(self.co[0].numerator, self.co[0].denominator)

    def is_real(self):
        return not any(self.co[k] for k in range(4, 8))

    # -- rendering --------------------------------------------------------

    def __str__(self):
        parts = []
        for k, x in enumerate(self.co):
            if not x:
                continue
            label = _LABELS[k]
            mag = -x if x < 0 else x
            if not label:
                body = str(mag)
            elif mag == 1:
                body = label
            elif mag.denominator == 1:
                body = "%s%s" % (mag, label)
            else:
                body = "(%s)%s" % (mag, label)
            if not parts:
                parts.append(("-" if x < 0 else "") + body)
            else:
                parts.append((" - " if x < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) or type(x) is type(_R1):
        return Scalar.from_rat(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


def sc(x):
    """Build a Scalar from an int, Fraction or mpq."""
    return _coerce(x)


ZERO = Scalar.from_rat(0)
ONE = Scalar.from_rat(1)
SQRT2 = Scalar((_R0, _R1, _R0, _R0, _R0, _R0, _R0, _R0))
SQRT3 = Scalar((_R0, _R0, _R1, _R0, _R0, _R0, _R0, _R0))
SQRT6 = Scalar((_R0, _R0, _R0, _R1, _R0, _R0, _R0, _R0))
I = Scalar((_R0, _R0, _R0, _R0, _R1, _R0, _R0, _R0))
HALF = Scalar.from_rat(Fraction(1, 2))
ZETA3 = Scalar((RAT(-1, 2), _R0, _R0, _R0, _R0, _R0, RAT(1, 2), _R0))
ZETA6 = Scalar((RAT(1, 2), _R0, _R0, _R0, _R0, _R0, RAT(1, 2), _R0))

_SIXTH = (ONE, ZETA6, ZETA3, -ONE, -ZETA6, -ZETA3)


def sixth_root(k):
    """zeta6**k for the principal sixth root of unity zeta6 = e^{pi i/3}."""
    return _SIXTH[k % 6]


def exp_two_pi_i(lam):
    """e^{2 pi i lam} for a rational lam with denominator dividing 6."""
    lam = Fraction(lam)
    six = lam * 6
    if six.denominator != 1:
        raise ValueError("eigenvalue %s is not in (1/6)Z" % lam)
    return sixth_root(int(six))


def sqrt2_power(e):
    """sqrt2**e for an integer e (possibly negative)."""
    if e >= 0:
        base = Scalar.from_rat(1 << (e // 2))
    else:
        base = Scalar.from_rat(Fraction(1, 1 << ((-e + 1) // 2)))
        if e % 2:
            base = base * SQRT2  # 2^{-(k+1)} * sqrt2 = sqrt2^{-(2k+1)}
            return base
    return base * SQRT2 if e % 2 else base


# Module-level aliases matching the functional interface.

def add(a, b):
    return _coerce(a) + _coerce(b)


def mul(a, b):
    return _coerce(a) * _coerce(b)


def neg(a):
    return -_coerce(a)


def invert(a):
    return _coerce(a).inv()


def is_rational(a):
    return _coerce(a).is_rational()


def as_rational(a):
    return _coerce(a).as_rational()
