"""Graded dimensions, characters, and module-level bookkeeping.

Includes the weight-squared primary multiplets used to decompose the
order-3-fixed subalgebra, the shifted (twisted) sector enumeration, and
the catalog of the twenty-one irreducible modules of the fixed-point
algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactfield import ONE, ZERO, sc, sqrt2_power
from .fockspace import (
    State, graded_states, named_vector, theta, theta_even_states,
)
from .exprparse import parse_scalar_expr
from .linalg import Echelon, express_in_span, rank_of
from .structure import is_primary
from .vertexengine import (
    mode_apply, twisted_mode_apply, virasoro_mode, zero_mode_decompose,
    zero_mode_eigenspaces, zero_mode_exp,
)

# --------------------------------------------------------------------------
# Partition counts and graded dimensions.

_P = [1]
_PE = [1]   # partitions with an even number of parts
_PARTS_GE2 = [1]


def _extend_partitions(n):
    """Grow the partition tables to cover n."""
    while len(_P) <= n:
        m = len(_P)
        # p(m) via the pentagonal recurrence.
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            s = 1 if k % 2 else -1
            if g1 <= m:
                total += s * _P[m - g1]
            if g2 <= m:
                total += s * _P[m - g2]
            k += 1
        _P.append(total)


def partition_count(n, min_part=1):
    if n < 0:
        return 0
    _extend_partitions(n)
    if min_part <= 1:
        return _P[n]
    if min_part == 2:
        return _P[n] - (_P[n - 1] if n >= 1 else 0)
    raise ValueError("unsupported min_part %r" % min_part)


def partition_count_even_length(n):
    """Partitions of n with an even number of parts."""
    if n < 0:
        return 0
    while len(_PE) <= n:
        m = len(_PE)
        # dp over (total, parity): count partitions with largest part <= k.
        dp = [[0, 0] for _ in range(m + 1)]
        dp[0][0] = 1
        for part in range(1, m + 1):
            for t in range(part, m + 1):
                dp[t][0] += dp[t - part][1]
                dp[t][1] += dp[t - part][0]
        _PE.append(dp[m][0])
    return _PE[n]


def graded_dim(name, w):
    """The dimension of the weight-w piece of a named graded space."""
    wf = Fraction(w)
    if name in ("M(1)", "M(1)+", "M(1)-", "V_Zb+", "V_Zb-"):
        if wf.denominator != 1 or wf < 0:
            return 0
        n = int(wf)
        if name == "M(1)":
            return partition_count(n)
        if name == "M(1)+":
            return partition_count_even_length(n)
        if name == "M(1)-":
            return partition_count(n) - partition_count_even_length(n)
        charged = 0
        m = 1
        while 4 * m * m <= n:
            charged += partition_count(n - 4 * m * m)
            m += 1
        if name == "V_Zb+":
            return partition_count_even_length(n) + charged
        return partition_count(n) - partition_count_even_length(n) + charged
    from .fockspace import graded_monomials
    return len(graded_monomials(name, w))


class QSeries:
    """A truncated integer-graded dimension series."""

    __slots__ = ("coeffs", "n_max")

    def __init__(self, coeffs, n_max=None):
        coeffs = list(coeffs)
        self.n_max = len(coeffs) - 1 if n_max is None else n_max
        self.coeffs = coeffs[: self.n_max + 1]

    def coefficient(self, n):
        if n > self.n_max:
            raise ValueError("coefficient %d beyond truncation %d" % (n, self.n_max))
        return self.coeffs[n] if 0 <= n <= self.n_max else 0

    def _align(self, other):
        n = min(self.n_max, other.n_max)
        return n, self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        n, a, b = self._align(other)
        return QSeries([x + y for x, y in zip(a, b)], n)

    def __sub__(self, other):
        n, a, b = self._align(other)
        return QSeries([x - y for x, y in zip(a, b)], n)

    def __mul__(self, k):
        return QSeries([k * x for x in self.coeffs], self.n_max)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n, a, b = self._align(other)
        return a == b

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        return " + ".join("%d q^%d" % (c, n) for n, c in enumerate(self.coeffs)
                          if c) or "0"


def char_series(name, n_max):
    return QSeries([graded_dim(name, n) for n in range(n_max + 1)], n_max)


def char_L1(n, n_max):
    """The graded dimensions of the irreducible c=1 module with lowest
    weight n^2 (n a nonnegative integer)."""
    lo = n * n
    hi = (n + 1) * (n + 1)
    return QSeries([partition_count(t - lo) - partition_count(t - hi)
                    for t in range(n_max + 1)], n_max)


# --------------------------------------------------------------------------
# Exact traces of the finite symmetries on the rank-one lattice algebra.
#
# The ambient weight-w space is a sum of Fock spaces over the charges
# q8 = 4k, so any operator that is diagonal on charges with a scalar
# depending only on the charge has trace sum_k c(k) p(w - k^2).  The
# reflection pairs opposite charges, so only charge zero contributes to
# its trace, with the length parity of the partition as sign.


def dim_full_lattice(w):
    """dim of the weight-w piece of the full rank-one lattice algebra."""
    total = partition_count(w)
    k = 1
    while k * k <= w:
        total += 2 * partition_count(w - k * k)
        k += 1
    return total


def theta_trace(w):
    """Trace of the reflection: even- minus odd-length partitions of w."""
    return 2 * partition_count_even_length(w) - partition_count(w)


def tau1_trace(w):
    """Trace of the charge-parity involution (sign (-1)^k on charge 4k)."""
    total = partition_count(w)
    k = 1
    while k * k <= w:
        total += 2 * (-1) ** k * partition_count(w - k * k)
        k += 1
    return total


def sigma_trace(w):
    """Trace of any order-3 element of the symmetry group on the full
    weight-w lattice space.

    All eight order-3 elements are conjugate to the charge rotation with
    scalar exp(2 pi i k / 3) on charge 4k, whose trace is real, so one
    integer covers them all.  sigma_trace_brute certifies this at low
    weight against the actual symmetry.
    """
    total = partition_count(w)
    k = 1
    while k * k <= w:
        total += (2 if k % 3 == 0 else -1) * partition_count(w - k * k)
        k += 1
    return total


def klein_fixed_dim(w):
    """dim of the weight-w fixed points of the Klein four-group generated
    by the reflection and the charge-parity involution, by averaging the
    four traces."""
    total = dim_full_lattice(w) + tau1_trace(w) + 2 * theta_trace(w)
    if total % 4:
        raise ArithmeticError("Klein trace average is not integral at weight %d" % w)
    return total // 4


# --------------------------------------------------------------------------
# Primary multiplets of square lowest weight.

_EMINUS_ALPHA = State.basis((), Fraction(-1, 2))


def _lower(v):
    return mode_apply(_EMINUS_ALPHA, 0, v)


_PRIMARY_BASIS = {}


def primary_space_basis(n):
    """A basis of the primary vectors of weight n^2 in the theta-fixed
    lattice algebra, built by lowering the extremal charge vector."""
    hit = _PRIMARY_BASIS.get(n)
    if hit is not None:
        return hit
    if n == 0:
        out = [State.basis(())]
        _PRIMARY_BASIS[0] = out
        return out
    out = []
    v = State.basis((), Fraction(n, 2))
    steps = 0
    for j in range(n + 1):
        if j == n:
            sign = ONE if n % 2 == 0 else -ONE
            if theta(v) != v * sign:
                raise ArithmeticError("unexpected reflection sign on the middle vector")
            if n % 2 == 0:
                out.append(v)
        elif j % 2 == n % 2:
            out.append(v + theta(v))
        if j < n:
            v = _lower(v)
            steps += 1
    for st in out:
        if st.weight() != n * n or not is_primary(st):
            raise ArithmeticError("multiplet member is not primary of weight %d" % (n * n))
    _PRIMARY_BASIS[n] = out
    return out


def primary_multiplicity(n):
    """dim of the weight n^2 primary space: floor(n/2) plus one if n is even."""
    return n // 2 + (1 if n % 2 == 0 else 0)


def sigma(v):
    """The order-3 symmetry: the exponential of the distinguished zero mode."""
    return zero_mode_exp(named_vector("hprime"), v)


def sigma_eigendims(states):
    """Dimensions of the three eigenspaces of the order-3 symmetry on
    the span of the given states, keyed by the eigenvalue exponent
    j in {0, 1, 2} (eigenvalue = exp(2 pi i j / 3))."""
    hprime = named_vector("hprime")
    buckets = {}
    for v in states:
        comps = {}
        for lam, piece in zero_mode_decompose(hprime, v).items():
            r = lam - math.floor(lam)
            if r.denominator not in (1, 3):
                raise ArithmeticError("eigenvalue %s is not a cube root of unity" % lam)
            j = int(3 * r) % 3
            acc = comps.get(j)
            comps[j] = piece if acc is None else acc + piece
        for j, piece in comps.items():
            if piece:
                buckets.setdefault(j, []).append(piece)
    dims = {0: 0, 1: 0, 2: 0}
    total = 0
    for j, rows in buckets.items():
        ech = Echelon()
        for row in rows:
            ech.insert(row)
        dims[j] = ech.rank
        total += ech.rank
    if total != rank_of(list(states)):
        raise ArithmeticError("eigenspace dimensions do not add up")
    return dims


_SIGMA_DIMS = {}


def sigma_multiplet_dims(n):
    """Eigenspace dimensions of the order-3 symmetry on the weight n^2
    primary space."""
    hit = _SIGMA_DIMS.get(n)
    if hit is None:
        basis = primary_space_basis(n)
        if len(basis) != primary_multiplicity(n):
            raise ArithmeticError("wrong multiplet size at n=%d" % n)
        hit = sigma_eigendims(basis)
        _SIGMA_DIMS[n] = hit
    return hit


def eigenspace_char(j, n_max):
    """The character of one eigenspace of the order-3 symmetry on the
    theta-fixed lattice algebra, from the exact trace formulas.

    The theta-fixed algebra is the Klein fixed-point algebra inside the
    full lattice algebra, and the order-3 symmetry extends the Klein
    group to the alternating group on four letters.  Averaging traces
    over that group picks out each eigenspace.
    """
    coeffs = []
    for w in range(n_max + 1):
        vp = klein_fixed_dim(w)
        ts = sigma_trace(w)
        num = vp + 2 * ts if j == 0 else vp - ts
        if num % 3:
            raise ArithmeticError("eigenspace trace average is not integral at weight %d" % w)
        coeffs.append(num // 3)
    return QSeries(coeffs, n_max)


def verify_fixed_algebra_decomposition(n_max=25):
    """Resolve the fixed-subalgebra character into irreducible c=1
    characters of square lowest weight and return the multiplicities.

    Also certifies that the three eigenspace characters add up to the
    character of the whole theta-fixed lattice algebra.
    """
    total = char_series("V_Zb+", n_max)
    esum = QSeries([0] * (n_max + 1), n_max)
    for j in (0, 1, 2):
        esum = esum + eigenspace_char(j, n_max)
    if esum != total:
        raise ArithmeticError("eigenspace characters do not add up to the full character")
    fixed = eigenspace_char(0, n_max)
    mults = {}
    rem = fixed
    n = 0
    while n * n <= n_max:
        a = rem.coefficient(n * n)
        if a < 0:
            raise ArithmeticError("negative multiplicity at n=%d" % n)
        mults[n] = a
        if a:
            rem = rem - char_L1(n, n_max) * a
        n += 1
    if not rem.is_zero():
        raise ArithmeticError("fixed character has a non-square remainder")
    return mults


def multiplet_spectrum_table(n_max=25):
    """Peel all three eigenspace characters into c=1 multiplicities.

    Returns {n: (m0, m1, m2)} where m_j is the multiplicity of the
    irreducible c=1 module of lowest weight n^2 inside eigenspace j.
    Certifies that every remainder vanishes and that no multiplicity
    goes negative.
    """
    rems = [eigenspace_char(j, n_max) for j in (0, 1, 2)]
    table = {}
    n = 0
    while n * n <= n_max:
        row = []
        for j in (0, 1, 2):
            a = rems[j].coefficient(n * n)
            if a < 0:
                raise ArithmeticError("negative multiplicity at n=%d, j=%d" % (n, j))
            row.append(a)
            if a:
                rems[j] = rems[j] - char_L1(n, n_max) * a
        table[n] = tuple(row)
        n += 1
    for j in (0, 1, 2):
        if not rems[j].is_zero():
            raise ArithmeticError("eigenspace %d has a non-square remainder" % j)
    return table


def sigma_trace_brute(w):
    """Trace of the actual order-3 symmetry on the full weight-w lattice
    space, summed monomial by monomial.  Must agree with sigma_trace."""
    states = graded_states("V_L2", w)
    acc = ZERO
    for b in states:
        (degs, q8), lead = next(iter(b.terms.items()))
        image = sigma(b)
        acc = acc + image.coefficient(degs, Fraction(q8, 8)) * lead.inv()
    tr = sc(sigma_trace(w))
    if acc != tr:
        raise ArithmeticError("symmetry trace mismatch at weight %d: %s vs %s" % (w, acc, tr))
    return sigma_trace(w)


def brute_fixed_dims(n_max):
    """Eigenspace-0 dimensions of the order-3 symmetry computed directly
    on a monomial basis, weight by weight (independent of the trace
    formulas)."""
    out = {}
    for n in range(n_max + 1):
        states = theta_even_states("V_Zb", n)
        if not states:
            out[n] = 0
            continue
        out[n] = sigma_eigendims(states).get(0, 0)
    return out


# --------------------------------------------------------------------------
# Top-level (lowest weight) eigenvalues in the untwisted sectors.

_TOPS = {
    "V+": ((), 0, 1),
    "V-": ((1,), 0, 1),
    "V_b/8": ((), Fraction(1, 8), 1),
    "V_b/4": ((), Fraction(1, 4), 1),
    "V_3b/8": ((), Fraction(3, 8), 1),
    "V_b/2+": ((), Fraction(1, 2), 1),
    "V_b/2-": ((), Fraction(1, 2), -1),
}


def sector_top(name):
    """The distinguished lowest weight vector of a named sector."""
    if name not in _TOPS:
        raise ValueError("unknown sector %r" % name)
    degs, q, s = _TOPS[name]
    v = State.basis(degs, q)
    if not q:
        return v
    return v + theta(v) if s > 0 else v - theta(v)


def top_level_eigenvalue(u, sector_name):
    """The scalar by which the top-degree mode of u acts on the lowest
    weight vector of the named sector."""
    top = sector_top(sector_name)
    wt = u.weight()
    if not isinstance(wt, int):
        raise ValueError("operator weight must be integral")
    img = mode_apply(u, wt - 1, top)
    if not img:
        return ZERO
    for m, c in top.terms.items():
        ci = img.terms.get(m)
        if ci is None:
            raise ArithmeticError("top vector is not an eigenvector")
        lam = ci * c.inv()
        break
    if img != top * lam:
        raise ArithmeticError("top vector is not an eigenvector")
    return lam


# --------------------------------------------------------------------------
# Shifted (twisted) sectors for the order-3 symmetry.


def _module_weights(i, w_max):
    if i == 1:
        w = Fraction(0)
    else:
        w = Fraction(1, 4)
    out = []
    while w <= w_max:
        out.append(w)
        w += 1
    return out


def _lambda_bound(i, w):
    """Largest possible magnitude of a zero-mode eigenvalue at weight w."""
    hi = 0
    q8 = 0 if i == 1 else 2
    best = Fraction(0)
    while Fraction(q8 * q8, 16) <= w:
        best = Fraction(q8, 12)
        q8 += 4
    return best


def twisted_sector(i, j, bound=None):
    """Graded data of the shifted sector built from module i in {1, 2}
    with shift sign j in {1, 2}.

    Returns a dict with the shift vector, the grading as a map
    grade -> list of states, and the lowest grade.  Grades run up to
    bound (default: enough to see the first four graded pieces).
    """
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError("sector labels must be 1 or 2")
    hprime = named_vector("hprime")
    d = 1 if j == 1 else -1
    hvec = hprime if j == 1 else -hprime
    if bound is None:
        bound = Fraction(1, 36) + Fraction(5, 3) if i == 1 else Fraction(1, 9) + Fraction(5, 3)
    bound = Fraction(bound)
    module = "V_L2" if i == 1 else "V_L2+a/2"
    graded = {}
    w = Fraction(0) if i == 1 else Fraction(1, 4)
    while w + Fraction(1, 36) - _lambda_bound(i, w) <= bound:
        basis = graded_states(module, w)
        if basis:
            for lam, sts in zero_mode_eigenspaces(hprime, basis).items():
                g = w + d * lam + Fraction(1, 36)
                if g <= bound and sts:
                    graded.setdefault(g, []).extend(sts)
        w += 1
    grades = sorted(graded)
    return {
        "module": module,
        "shift": hvec,
        "sign": d,
        "graded": {g: graded[g] for g in grades},
        "dims": {g: len(graded[g]) for g in grades},
        "lowest": grades[0] if grades else None,
        "bound": bound,
    }


def twisted_top_weight(u, n, base, hvec):
    """Apply a shifted mode and return (state, its shifted L(0) value)."""
    st = twisted_mode_apply(u, n, base, hvec)
    if not st:
        return st, None
    omega = named_vector("omega")
    img = twisted_mode_apply(omega, 1, st, hvec)
    if not img:
        return st, Fraction(0)
    ech = Echelon()
    ech.insert(st)
    dep = ech.insert(img)
    if dep is None:
        raise ArithmeticError("state is not an eigenvector of the shifted grading")
    lam = dep.get(0, ZERO)
    if not lam.is_rational():
        raise ArithmeticError("shifted weight is not rational")
    return st, lam.as_rational()


# --------------------------------------------------------------------------
# The charge b/4 module and its three irreducible pieces.


def decompose_quarter_module():
    """Split the quarter-charge lattice module under the order-3 symmetry.

    The module is realized as the reflection-even half of the doubled
    charge grid.  The orbifold splits it into a piece with lowest weight
    1/4 and two pieces with lowest weight 9/4.  The zero mode of the
    weight-9 invariant preserves every irreducible piece, so its
    eigenlines on the 2-dimensional primary plane at weight 9/4 are
    exactly the lowest-weight vectors of the two non-trivial pieces.

    Returns the weight 1/4 generator, the two weight 9/4 generators
    normalized on their h(-2) component, the extremal coefficients, and
    the layer spectra of the symmetry generator on the doubled grid.
    """
    sqrt2 = sqrt2_power(1)
    hprime = named_vector("hprime")
    w14 = theta_even_states("V_Zb+2/8", Fraction(1, 4))
    if len(w14) != 1:
        raise ArithmeticError("weight 1/4 reflection-even space is not a line")
    bottom = w14[0]
    null2 = virasoro_mode(-2, bottom) - virasoro_mode(-1, virasoro_mode(-1, bottom))
    if null2.terms:
        raise ArithmeticError("level-2 null vector does not vanish on the bottom line")

    # Layer spectra of the symmetry generator on the doubled grid.  The
    # exponentiated eigenvalues are sixth roots of unity: the symmetry
    # cubes to -1 on this coset.
    eig14 = zero_mode_eigenspaces(hprime, graded_states("V_L2+a/2", Fraction(1, 4)))
    spectrum14 = {lam: len(sts) for lam, sts in eig14.items()}
    if spectrum14 != {Fraction(1, 6): 1, Fraction(-1, 6): 1}:
        raise ArithmeticError("unexpected bottom spectrum %r" % spectrum14)
    basis = graded_states("V_L2+a/2", Fraction(9, 4))
    if len(basis) != 6:
        raise ArithmeticError("weight 9/4 space has unexpected dimension")
    eig = zero_mode_eigenspaces(hprime, basis)
    spectrum = {lam: len(sts) for lam, sts in eig.items()}
    expected = {Fraction(1, 6): 2, Fraction(-1, 6): 2,
                Fraction(1, 2): 1, Fraction(-1, 2): 1}
    if spectrum != expected:
        raise ArithmeticError("unexpected zero-mode spectrum %r" % spectrum)

    # Primary plane of the even model at weight 9/4.
    even94 = theta_even_states("V_Zb+2/8", Fraction(9, 4))
    if len(even94) != 3:
        raise ArithmeticError("weight 9/4 reflection-even space has unexpected dimension")
    q = Fraction(1, 4)
    dvec = (State.basis((2,), q) - State.basis((2,), -q)
            - State.basis((1, 1), q) * sqrt2 - State.basis((1, 1), -q) * sqrt2)
    xvec = State.basis((), 3 * q) + State.basis((), -3 * q)
    for v in (dvec, xvec):
        if not is_primary(v):
            raise ArithmeticError("expected primary vector is not primary")
        if express_in_span(even94, v) is None:
            raise ArithmeticError("primary vector is outside the even model")
    W = named_vector("W")
    wd = express_in_span([dvec, xvec], mode_apply(W, 8, dvec))
    wx = express_in_span([dvec, xvec], mode_apply(W, 8, xvec))
    if wd is None or wx is None:
        raise ArithmeticError("invariant zero mode does not preserve the primary plane")
    mu, nu = wd[1], wx[0]
    if wd[0] or wx[1] or not mu or not nu:
        raise ArithmeticError("unexpected invariant zero-mode matrix")
    asq = mu * nu.inv()
    a = parse_scalar_expr("r6*i")
    if a * a != asq:
        raise ArithmeticError("extremal coefficient squared is not -6")
    gens = {1: dvec + xvec * a, -1: dvec - xvec * a}
    for s, g in gens.items():
        lam = a * nu * sc(s)
        if mode_apply(W, 8, g) != g * lam:
            raise ArithmeticError("generator is not an invariant zero-mode eigenvector")

    # Cross-check with the symmetry eigenvectors: symmetrizing the two
    # non-degenerate weight 9/4 eigenvectors lands in the same primary
    # plane with the same leading shape (they mix the two pieces, since
    # the zero-mode generator does not commute with the fixed algebra).
    for lam in (Fraction(1, 2), Fraction(-1, 2)):
        (raw,) = eig[lam]
        g = raw + theta(raw)
        if theta(g) != g or not is_primary(g):
            raise ArithmeticError("symmetrized eigenvector is not even primary")
        coeffs = express_in_span([dvec, xvec], g)
        if coeffs is None or not coeffs[0] or not coeffs[1]:
            raise ArithmeticError("symmetrized eigenvector misses the primary plane")
    return {
        "weight_quarter": bottom,
        "generators": gens,
        "a_values": {1: a, -1: -a},
        "w8_matrix": (mu, nu),
        "spectrum": spectrum,
        "bottom_spectrum": spectrum14,
    }


def quarter_cube_is_minus_one(samples=None):
    """Check that the cube of the symmetry is -1 on the half-charge coset."""
    if samples is None:
        samples = graded_states("V_L2+a/2", Fraction(1, 4)) \
            + graded_states("V_L2+a/2", Fraction(9, 4))
    for v in samples:
        w = sigma(sigma(sigma(v)))
        if w != -v:
            return False
    return True


# --------------------------------------------------------------------------
# The catalog of the twenty-one irreducible modules.


def module_catalog():
    """The twenty-one irreducible modules of the fixed-point algebra:
    name, lowest weight, how this package realizes it, and which earlier
    entry it is isomorphic to (if any)."""
    rows = []

    def row(name, lw, realization, alias=None):
        rows.append({
            "name": name,
            "lowest_weight": Fraction(lw),
            "realization": realization,
            "alias_of": alias,
        })

    row("(V+)^0", 0, "eigenspace 0 of the symmetry on the reflection-even lattice algebra")
    row("(V+)^1", 4, "eigenspace 1 of the symmetry on the reflection-even lattice algebra")
    row("(V+)^2", 4, "eigenspace 2 of the symmetry on the reflection-even lattice algebra")
    row("V-", 1, "reflection-odd part of the integral lattice module")
    row("V_b/8", Fraction(1, 16), "charge b/8 coset module")
    row("V_3b/8", Fraction(9, 16), "charge 3b/8 coset module")
    for k, lw in enumerate((Fraction(1, 36), Fraction(25, 36), Fraction(49, 36)), 1):
        row("W^(1,T1,%d)" % k, lw, "shifted sector of the half-charge lattice module")
    for k, lw in enumerate((Fraction(1, 9), Fraction(4, 9), Fraction(16, 9)), 1):
        row("W^(2,T1,%d)" % k, lw, "shifted sector of the shifted-coset module")
    for k, lw in enumerate((Fraction(1, 36), Fraction(25, 36), Fraction(49, 36)), 1):
        row("W^(1,T2,%d)" % k, lw, "opposite-shift sector of the half-charge lattice module")
    for k, lw in enumerate((Fraction(1, 9), Fraction(4, 9), Fraction(16, 9)), 1):
        row("W^(2,T2,%d)" % k, lw, "opposite-shift sector of the shifted-coset module")
    row("(V_b/4)^0", Fraction(1, 4), "symmetry eigenspace of the charge b/4 module")
    row("(V_b/4)^1", Fraction(9, 4), "symmetry eigenspace of the charge b/4 module")
    row("(V_b/4)^2", Fraction(9, 4), "symmetry eigenspace of the charge b/4 module")

    aliases = {
        "V_b/2+": ("V-", Fraction(1), "reflection-even half-lattice coset"),
        "V_b/2-": ("V-", Fraction(1), "reflection-odd half-lattice coset"),
        "V^(T2,+)": ("V_b/8", Fraction(1, 16), "reflection-twisted module (not realized here)"),
        "V^(T1,+)": ("V_b/8", Fraction(1, 16), "reflection-twisted module (not realized here)"),
        "V^(T2,-)": ("V_3b/8", Fraction(9, 16), "reflection-twisted module (not realized here)"),
        "V^(T1,-)": ("V_3b/8", Fraction(9, 16), "reflection-twisted module (not realized here)"),
    }
    for name, (target, lw, realization) in aliases.items():
        row(name, lw, realization, alias=target)
    return rows
