"""Structure tools: invariant form, Virasoro words, decompositions.

The invariant bilinear form is normalized by (1, 1) = 1 and pairs a
monomial h(-n_1)...h(-n_s) e^{qb} with h(-n_1)...h(-n_s) e^{-qb} to the
partition factor prod_d d^{m_d} m_d!.
"""

from __future__ import annotations

from fractions import Fraction

from .exactfield import ONE, Scalar, ZERO, sc
from .fockspace import State, named_vector, lattice_component, partitions
from .linalg import SingularMatrixError, express_in_span, fixed_vectors, solve_square
from .vertexengine import apply_word, mode_apply, mode_apply_theta_even, virasoro_mode


def zlam(degs):
    """The partition normalization prod_d d^{mult_d} mult_d!."""
    out = 1
    run = 0
    prev = None
    for d in tuple(degs) + (0,):
        if d == prev:
            run += 1
        else:
            if prev is not None and prev != 0:
                f = 1
                for j in range(1, run + 1):
                    f *= prev * j
                out *= f
            prev, run = d, 1
    return out


def pair(u, v):
    """The invariant symmetric bilinear form, normalized by (1, 1) = 1.

    The adjoint of h(n) is -h(-n), so a matched pair of length-l
    monomials contributes (-1)^l zlam; a charge exponential pairs with
    its opposite and contributes the parity of its weight.
    """
    acc = ZERO
    for (degs, q8), cu in u.terms.items():
        cv = v.terms.get((degs, -q8))
        if cv is None:
            continue
        if q8 % 4:
            raise ValueError("form undefined between charge-%s/8 sectors" % q8)
        sign = -1 if (len(degs) + q8 // 4) % 2 else 1
        acc = acc + cu * cv * (sign * zlam(degs))
    return acc


def gram(vectors):
    n = len(vectors)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g = pair(vectors[i], vectors[j])
            out[i][j] = g
            out[j][i] = g
    return out


def gram_rational(vectors):
    """The Gram matrix as Fractions; raises if any entry is irrational."""
    out = []
    for row in gram(vectors):
        orow = []
        for g in row:
            if not g.is_rational():
                raise ArithmeticError("Gram entry %s is not rational" % g)
            orow.append(g.as_rational())
        out.append(orow)
    return out


def is_primary(v):
    """True when L(1) v = L(2) v = 0 (and hence all L(n) v = 0, n > 0)."""
    return not virasoro_mode(1, v) and not virasoro_mode(2, v)


# --------------------------------------------------------------------------
# Virasoro words.


class VirasoroWord:
    """An ordered product L(-p_1)...L(-p_s), p_1 >= ... >= p_s >= 1."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)
        if any(p < 1 for p in self.parts):
            raise ValueError("word parts must be positive")

    @property
    def word(self):
        return [-p for p in self.parts]

    @property
    def degree(self):
        return sum(self.parts)

    def apply(self, base):
        return apply_word(self.word, base)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, VirasoroWord) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "".join("L(-%d)" % p for p in self.parts) or "1"

    def __repr__(self):
        return "VirasoroWord(%r)" % (self.parts,)


def vacuum_words(degree, min_part=2):
    """Virasoro words of the given total degree, shortest first and in
    descending lexicographic order within one length.

    The default min_part 2 suits words applied to the vacuum, where a
    trailing L(-1) acts as zero.
    """
    lams = sorted(partitions(degree, min_part=min_part),
                  key=lambda lam: (len(lam), tuple(-p for p in lam)))
    return [VirasoroWord(lam) for lam in lams]


def word_states(words, base):
    """Apply a family of words to one base state, sharing suffixes."""
    cache = {(): base}

    def state_for(parts):
        hit = cache.get(parts)
        if hit is None:
            hit = virasoro_mode(-parts[0], state_for(parts[1:]))
            cache[parts] = hit
        return hit

    return [state_for(w.parts) for w in words]


# --------------------------------------------------------------------------
# Exact decomposition over a spanning family.


class DecompositionResult:
    """Coefficients over a flat list of vectors plus an exact residual."""

    __slots__ = ("coefficients", "residual")

    def __init__(self, coefficients, residual):
        self.coefficients = coefficients
        self.residual = residual

    @property
    def exact(self):
        return not self.residual

    def __iter__(self):
        return iter((self.coefficients, self.residual))


def decompose_over(target, vectors, blocks=None):
    """Resolve target against the given vectors, block by block.

    blocks is a list of index lists whose spans are mutually orthogonal
    (default: one block).  Within each block the component is found by
    solving the Gram system exactly; the returned residual is target
    minus the full combination, so a zero residual certifies the answer
    independently of the orthogonality assumption.
    """
    if blocks is None:
        blocks = [list(range(len(vectors)))]
    coeffs = [ZERO] * len(vectors)
    for block in blocks:
        vs = [vectors[i] for i in block]
        try:
            g = gram_rational(vs)
            rhs = []
            for v in vs:
                p = pair(target, v)
                if not p.is_rational():
                    raise ArithmeticError
                rhs.append(p.as_rational())
            sol = solve_square(g, [rhs])[0]
            for i, c in zip(block, sol):
                coeffs[i] = sc(c)
        except (ArithmeticError, SingularMatrixError):
            expr = express_in_span(vs, target)
            if expr is None:
                raise ValueError("target is not resolvable over this block")
            for i, c in zip(block, expr):
                coeffs[i] = c
    combo = State()
    for c, v in zip(coeffs, vectors):
        if c:
            combo = combo + v * c
    return DecompositionResult(coeffs, target - combo)


# --------------------------------------------------------------------------
# The weight-16 primary generator beyond the vacuum module.


def build_u16():
    """The weight-16 primary obtained by stripping the vacuum-module
    component from J_{-9} J + 27 E_{-9} E."""
    J = named_vector("J")
    E = named_vector("E")
    E2 = named_vector("E2")
    P = mode_apply(J, -9, J) + mode_apply_theta_even(E, -9, E) * 27
    words = vacuum_words(16)
    states = word_states(words, State.basis(()))
    dec = decompose_over(P, states)
    u16 = dec.residual
    if u16.weight() != 16:
        raise ArithmeticError("unexpected weight for the stripped vector")
    if not is_primary(u16):
        raise ArithmeticError("stripped vector is not primary")
    if lattice_component(u16, 2) != E2 * 27:
        raise ArithmeticError("unexpected charge-2 tail")
    for st in states:
        if pair(u16, st):
            raise ArithmeticError("stripped vector is not orthogonal to the vacuum module")
    return u16


def c_functional(v, weight=None):
    """The coefficient of h(-1)^w |0> in v, w the weight of v."""
    w = v.weight() if weight is None else weight
    if w is None:
        return ZERO
    w = int(w)
    return v.coefficient((1,) * w)


def fixed_subspace(states, ops):
    """A basis of the joint fixed space of the given operators."""
    return fixed_vectors(states, ops)
