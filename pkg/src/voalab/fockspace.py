"""States of a rank-one lattice Fock space.

A basis monomial is h(-n_1)...h(-n_s) e^{q b} where h is the canonical
weight-one Heisenberg generator, b is the degree-8 lattice vector
(b = 2a with (a,a) = 2, h = a/sqrt2), and the charge q runs over the
grid (1/8)Z so that every module sector of interest fits in one space.
Internally a monomial is the pair (degs, q8): degs is a descending
tuple of positive integers and q8 = 8q is an integer.

The weight of h(-n_1)...h(-n_s) e^{q b} is sum(n_i) + 4 q^2.
"""

from __future__ import annotations

from fractions import Fraction

from .exactfield import (
    I, ONE, SQRT2, SQRT3, SQRT6, Scalar, ZERO, sc, sixth_root,
)


def to_q8(q):
    """Normalize a charge (multiple of 1/8) to its integer 8q form."""
    if isinstance(q, int):
        return 8 * q
    f = Fraction(q)
    e = f * 8
    if e.denominator != 1:
        raise ValueError("charge %s is not a multiple of 1/8" % q)
    return int(e)


def mono(degs, q8):
    return (tuple(sorted(degs, reverse=True)), q8)


def mono_weight(m):
    degs, q8 = m
    w = Fraction(sum(degs)) + Fraction(q8 * q8, 16)
    return int(w) if w.denominator == 1 else w


def mono_str(m):
    degs, q8 = m
    ops = "".join("h(-%d)" % d for d in degs)
    if q8 == 0:
        ket = "|0>"
    else:
        ket = "|%sb>" % Fraction(q8, 8)
    return ops + ket


class State:
    """A finite K-linear combination of Fock monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def basis(cls, degs, q=0, coeff=ONE):
        coeff = sc(coeff) if not isinstance(coeff, Scalar) else coeff
        if not coeff:
            return cls()
        return cls({mono(degs, to_q8(q)): coeff})

    @classmethod
    def from_items(cls, items):
        terms = {}
        for m, c in items:
            c = sc(c) if not isinstance(c, Scalar) else c
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return cls(terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, State):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            acc = c if acc is None else acc + c
            if acc:
                terms[m] = acc
            elif m in terms:
                del terms[m]
        return State(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return State({m: -c for m, c in self.terms.items()})

    def scale(self, s):
        s = sc(s) if not isinstance(s, Scalar) else s
        if not s:
            return State()
        return State({m: c * s for m, c in self.terms.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def coefficient(self, degs, q=0):
        return self.terms.get(mono(degs, to_q8(q)), ZERO)

    def charges(self):
        return sorted({Fraction(q8, 8) for (_, q8) in self.terms})

    def weight(self):
        """The common weight of all monomials; raises if inhomogeneous."""
        ws = {mono_weight(m) for m in self.terms}
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError("state is not weight homogeneous: %s" % sorted(map(Fraction, ws)))
        return ws.pop()

    def weight_pieces(self):
        out = {}
        for m, c in self.terms.items():
            out.setdefault(mono_weight(m), {})[m] = c
        return {w: State(t) for w, t in sorted(out.items(), key=lambda kv: Fraction(kv[0]))}

    def key(self):
        """A hashable fingerprint, usable as a cache key."""
        return frozenset(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        def order(m):
            degs, q8 = m
            return (-q8, degs)
        parts = []
        for m in sorted(self.terms, key=order):
            c = self.terms[m]
            if c == ONE:
                t = mono_str(m)
            elif c == -ONE:
                t = "-" + mono_str(m)
            else:
                t = "(%s) %s" % (c, mono_str(m))
            parts.append(t)
        return " + ".join(parts)

    def __repr__(self):
        return "State<%s>" % self


VACUUM = State.basis(())


def weight(v):
    return v.weight()


def theta(v):
    """The lift of the (-1)-isometry: h -> -h, e^{qb} -> e^{-qb}."""
    return State({(degs, -q8): c if len(degs) % 2 == 0 else -c
                  for (degs, q8), c in v.terms.items()})


def tau1(v):
    """The sign involution e^{na} -> (-1)^n e^{na} fixing h.

    Defined on sectors whose charges are multiples of a = b/2, that is
    q8 divisible by 4.
    """
    terms = {}
    for (degs, q8), c in v.terms.items():
        if q8 % 4:
            raise ValueError("tau1 is undefined on charge %s" % Fraction(q8, 8))
        terms[(degs, q8)] = c if (q8 // 4) % 2 == 0 else -c
    return State(terms)


def lattice_component(v, q):
    """The part of v supported on charges +q and -q (q >= 0)."""
    q8 = abs(to_q8(q))
    return State({m: c for m, c in v.terms.items() if abs(m[1]) == q8})


def sector(v):
    """A coarse label for the charge support of a state."""
    res = {q8 % 8 for (_, q8) in v.terms}
    if not res or res == {0}:
        return "V_Zb"
    if len(res) == 1:
        return "V_Zb+%d/8" % res.pop()
    if res <= {0, 4}:
        return "V_L2"
    if res <= {2, 6}:
        return "V_L2+a/2"
    return "mixed"


def partitions(n, max_part=None, min_part=1):
    """Yield the partitions of n as descending tuples."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, min_part - 1, -1):
        for rest in partitions(n - first, first, min_part):
            yield (first,) + rest


def basis_monomials(w, charges):
    """All monomials of weight w whose charge lies in the given list."""
    out = []
    for q in charges:
        q8 = to_q8(q)
        rem = Fraction(w) - Fraction(q8 * q8, 16)
        if rem < 0 or rem.denominator != 1:
            continue
        for lam in partitions(int(rem)):
            out.append((lam, q8))
    return out


def sector_charges(name, w):
    """Charges of the named sector that can carry weight <= w."""
    grids = {
        "V_Zb": (8, 0), "V_L2": (4, 0), "V_L2+a/2": (4, 2),
        "V_Zb+1/8": (8, 1), "V_Zb+2/8": (8, 2), "V_Zb+3/8": (8, 3),
        "V_Zb+4/8": (8, 4), "V_Zb+5/8": (8, 5), "V_Zb+6/8": (8, 6),
        "V_Zb+7/8": (8, 7),
    }
    if name not in grids:
        raise ValueError("unknown sector %r" % name)
    step, off = grids[name]
    w = Fraction(w)
    hi = 0
    while Fraction(hi * hi, 16) <= w:
        hi += 1
    return [Fraction(q8, 8) for q8 in range(-hi, hi + 1)
            if (q8 - off) % step == 0 and Fraction(q8 * q8, 16) <= w]


def graded_monomials(name, w):
    return basis_monomials(w, sector_charges(name, w))


def graded_states(name, w):
    return [State({m: ONE}) for m in graded_monomials(name, w)]


def theta_even_states(name, w):
    """A basis of the theta-fixed part of the named sector at weight w.

    On one-sided coset grids a reflection orbit may meet the grid in a
    single charge of either sign, so orbits are deduplicated by absolute
    charge rather than by skipping negative representatives.
    """
    monos = graded_monomials(name, w)
    have = set(monos)
    seen = set()
    out = []
    for m in monos:
        degs, q8 = m
        key = (degs, abs(q8))
        if key in seen:
            continue
        if q8 < 0 and (degs, -q8) in have:
            continue
        seen.add(key)
        v = State({m: ONE})
        if q8 == 0:
            if len(degs) % 2 == 0:
                out.append(v)
        else:
            out.append(v + theta(v))
    return out


# --------------------------------------------------------------------------
# Catalog of frequently used vectors.

_CATALOG = {}


def _half(x):
    return Fraction(x, 2)


def _build_basic():
    one = VACUUM
    h = State.basis((1,))
    omega = State.basis((1, 1), 0, Fraction(1, 2))
    J = (State.basis((1, 1, 1, 1)) + State.basis((3, 1), 0, -2)
         + State.basis((2, 2), 0, Fraction(3, 2)))
    E = State.basis((), 1) + State.basis((), -1)
    F = State.basis((), 1) - State.basis((), -1)
    E2 = State.basis((), 2) + State.basis((), -2)
    s27i = SQRT3 * I * 3
    X1 = J - E * s27i
    X2 = J + E * s27i
    inv_r2 = SQRT2 * sc(Fraction(1, 2))
    x1 = h
    x2 = (State.basis((), _half(1)) + State.basis((), _half(-1))) * inv_r2
    x3 = (State.basis((), _half(1)) - State.basis((), _half(-1))) * (inv_r2 * I)
    inv_r3 = SQRT3 * sc(Fraction(1, 3))
    y1 = (x1 + x2 * sixth_root(2) + x3 * sixth_root(1)) * inv_r3
    y2 = (x1 + x2 * sixth_root(4) + x3 * sixth_root(5)) * inv_r3
    hprime = (x1 + x2 - x3) * (SQRT6 * sc(Fraction(1, 18)))
    # weight 1/4 sector: w1, w2 span the top of the charge b/4 module
    c1 = (SQRT3 - ONE) * (ONE + I) * sc(Fraction(1, 2))
    w1 = State.basis((), Fraction(1, 4)) + State.basis((), Fraction(-1, 4)) * c1
    w2 = (State.basis((), Fraction(1, 4)) * (SQRT3 - ONE)
          - State.basis((), Fraction(-1, 4)) * (ONE + I)) * inv_r2
    # the weight 9 generator: a pure lattice-charge combination
    u9_E = {(4, 1): -15, (3, 2): -10, (2, 1, 1, 1): -10}
    u9_F = {(5,): 6, (3, 1, 1): 10, (2, 2, 1): Fraction(15, 2), (1, 1, 1, 1, 1): 1}
    terms = {}
    for degs, c in u9_E.items():
        coeff = sc(Fraction(c, 1)) * inv_r2
        terms[mono(degs, 8)] = coeff
        terms[mono(degs, -8)] = coeff
    for degs, c in u9_F.items():
        coeff = sc(Fraction(c))
        terms[mono(degs, 8)] = coeff
        terms[mono(degs, -8)] = -coeff
    u9 = State(terms)
    return {
        "one": one, "h": h, "omega": omega, "J": J, "E": E, "F": F,
        "E2": E2, "X1": X1, "X2": X2, "x1": x1, "x2": x2, "x3": x3,
        "y1": y1, "y2": y2, "hprime": hprime, "w1": w1, "w2": w2, "u9": u9,
    }


def _build_derived(name):
    # Virasoro-word combinations; imported late to avoid an import cycle.
    from .vertexengine import apply_word

    one = named_vector("one")
    J = named_vector("J")
    E = named_vector("E")

    def words(base, items):
        acc = State()
        for word, c in items:
            acc = acc + apply_word([-m for m in word], base) * sc(Fraction(c))
        return acc

    if name == "u0":
        return words(one, [((4,), Fraction(-8, 3)), ((2, 2), Fraction(112, 9))])
    if name == "u1":
        return words(one, [((5,), Fraction(-16, 9)), ((3, 2), Fraction(112, 9))])
    if name == "u2":
        return words(one, [((6,), Fraction(-1856, 135)), ((4, 2), Fraction(-2384, 135)),
                           ((3, 3), Fraction(1316, 135)), ((2, 2, 2), Fraction(1088, 135))])
    if name == "u3":
        return words(one, [((7,), Fraction(-464, 45)), ((5, 2), Fraction(-928, 45)),
                           ((4, 3), Fraction(40, 9)), ((3, 2, 2), Fraction(544, 45))])
    if name in ("v2", "v4"):
        base = J if name == "v2" else E
        return words(base, [((2,), Fraction(28, 75)), ((1, 1), Fraction(23, 300))])
    if name in ("v3", "v5"):
        base = J if name == "v3" else E
        return words(base, [((3,), Fraction(14, 75)), ((2, 1), Fraction(14, 75)),
                            ((1, 1, 1), Fraction(-1, 300))])
    if name == "W":
        from .vertexengine import mode_apply
        return mode_apply(J, -2, E) - mode_apply(E, -2, J)
    if name == "u16":
        from .structure import build_u16
        return build_u16()
    raise KeyError(name)


def named_vector(name):
    """Look up a cataloged state by name."""
    if not _CATALOG:
        _CATALOG.update(_build_basic())
    if name in _CATALOG:
        return _CATALOG[name]
    if name in ("u0", "u1", "u2", "u3", "v2", "v3", "v4", "v5", "W", "u16"):
        v = _build_derived(name)
        _CATALOG[name] = v
        return v
    raise KeyError("no cataloged vector named %r" % name)


NAMED_VECTORS = ("one", "omega", "J", "E", "F", "E2", "X1", "X2",
                 "x1", "x2", "x3", "y1", "y2", "h", "hprime",
                 "u0", "u1", "u2", "u3", "v2", "v3", "v4", "v5",
                 "u9", "u16", "w1", "w2", "W")
