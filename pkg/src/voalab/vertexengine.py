"""Mode actions of lattice vertex operators, exactly.

The central routine is `mode_apply(u, n, v)`: the n-th mode of the
vertex operator attached to u, applied to v.  Operators are built from
normally ordered products of derivative Heisenberg fields against a
lattice exponential, with all lattice two-cocycle values taken to be 1
(consistent here because every charge pairing that occurs is even).

For efficiency the expansion keeps the running amplitude as a plain
rational together with a power of sqrt2 and only promotes to a full
field element at the very end; the creation-side combinatorics are
memoized independently of the lattice charge.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactfield import RAT, Scalar, exp_two_pi_i, rat, sc
from .fockspace import State, mono_weight, named_vector, theta
from .linalg import Echelon

_R0 = rat(0)
_R1 = rat(1)


class ModeLegalityError(ValueError):
    """Raised when no charge pairing admits the requested mode index."""


def ModeIndex(n):
    """Normalize a mode index to an int or a Fraction."""
    if isinstance(n, int):
        return n
    f = Fraction(n)
    return int(f) if f.denominator == 1 else f


# --------------------------------------------------------------------------
# Creation-side combinatorics, independent of the lattice charge.

_EMINUS = {}
_CREATION = {}


def _eminus(c):
    """Partitions lam of c with weights prod_k 1/(k^{j_k} j_k!)."""
    hit = _EMINUS.get(c)
    if hit is not None:
        return hit
    out = []
    for lam in _partitions(c):
        coeff = _R1
        d = None
        run = 0
        for part in lam + (0,):
            if part == d:
                run += 1
                continue
            if d is not None:
                coeff /= rat(d) ** run * math.factorial(run)
            d, run = part, 1
        out.append((lam, len(lam), coeff))
    _EMINUS[c] = out
    return out


def _partitions(n, max_part=None):
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _creation(pending, c_target):
    """Ways to realize total creation degree c_target.

    pending: ascending tuple of derivative orders n_i assigned to the
    creation channel; each picks a degree k_i >= n_i with coefficient
    binom(k_i - 1, n_i - 1), and the remainder becomes an exponential
    cloud partition.  Returns a dict (degrees, cloud_size) -> rational.
    """
    key = (pending, c_target)
    hit = _CREATION.get(key)
    if hit is not None:
        return hit
    out = {}
    if not pending:
        for lam, s, coeff in _eminus(c_target):
            k = (lam, s)
            out[k] = out.get(k, _R0) + coeff
    else:
        n0 = pending[0]
        rest = pending[1:]
        min_rest = sum(rest)
        for k in range(n0, c_target - min_rest + 1):
            f = math.comb(k - 1, n0 - 1)
            if not f:
                continue
            for (degs, s), c in _creation(rest, c_target - k).items():
                degs2 = tuple(sorted(degs + (k,), reverse=True))
                k2 = (degs2, s)
                out[k2] = out.get(k2, _R0) + f * c
    _CREATION[key] = out
    return out


def _counts(degs):
    out = {}
    for d in degs:
        out[d] = out.get(d, 0) + 1
    return out


# Pure exponential operators (no derivative fields) recur constantly in
# zero-mode iterations over a fixed weight space, so their expansions
# are worth caching across calls.
_PURE_EXP = {}


def _pair_modes(udegs, a8, vdegs, q8, n):
    """All output contributions of one monomial pair, or None if the
    mode index is incompatible with the charge pairing.

    Returns a dict (output degrees, sqrt2 exponent) -> rational; the
    caller supplies the charge shift and the monomial coefficients.
    """
    c0f = -Fraction(n) - 1 - Fraction(a8 * q8, 8)
    if c0f.denominator != 1:
        return None
    c0 = int(c0f)
    memo_key = None
    if not udegs:
        memo_key = (a8, vdegs, q8, n)
        hit = _PURE_EXP.get(memo_key)
        if hit is not None:
            return hit
    out = {}
    vcounts = _counts(vdegs)
    distinct = sorted(vcounts)
    half_a = RAT(a8, 4)   # 2a, where the charge of u is a*b = (a8/8)*b
    half_q = RAT(q8, 4)   # 2q for the charge of v

    # Phase one: contractions of the charge exponential with v's modes.
    branches = [((), _R1, 0, 0)]  # (removed counts, amp, e2, cshift)
    for d in distinct:
        m = vcounts[d]
        jmax = m if half_a else 0
        nxt = []
        for removed, amp, e2, csh in branches:
            for j in range(jmax + 1):
                f = math.comb(m, j) * (-half_a) ** j if j else _R1
                nxt.append((removed + (j,), amp * f, e2 + j, csh + d * j))
        branches = nxt

    for removed, amp0, e20, csh0 in branches:
        rem0 = []
        for d, j in zip(distinct, removed):
            rem0.extend([d] * (vcounts[d] - j))
        rem0 = tuple(sorted(rem0, reverse=True))

        # Phase two: route each derivative field of u through one channel.
        states = {(rem0, (), csh0 + c0, e20): amp0}
        for ni in udegs:
            sgn = -1 if (ni - 1) % 2 else 1
            nxt = {}

            def put(key, val):
                acc = nxt.get(key)
                nxt[key] = val if acc is None else acc + val

            for (rem, pend, csh, e2), amp in states.items():
                put((rem, tuple(sorted(pend + (ni,))), csh, e2), amp)
                if q8:
                    put((rem, pend, csh + ni, e2 + 1), amp * sgn * half_q)
                seen = None
                for pos, d in enumerate(rem):
                    if d == seen:
                        continue
                    seen = d
                    mult = rem.count(d)
                    f = rat(sgn * math.comb(d + ni - 1, ni - 1) * d * mult)
                    put((rem[:pos] + rem[pos + 1:], pend, csh + d + ni, e2),
                        amp * f)
            states = nxt

        # Phase three: fill in creation modes and the exponential cloud.
        for (rem, pend, csh, e2), amp in states.items():
            c_target = csh + sum(pend)
            if c_target < 0 or not amp:
                continue
            for (extra, s), cx in _creation(pend, c_target).items():
                if s and not half_a:
                    continue
                degs = tuple(sorted(rem + extra, reverse=True))
                contrib = amp * cx * half_a ** s if s else amp * cx
                key = (degs, e2 + s)
                acc = out.get(key)
                out[key] = contrib if acc is None else acc + contrib
    if memo_key is not None:
        _PURE_EXP[memo_key] = out
    return out


def _mode_apply_counting(u, n, v):
    n = ModeIndex(n)
    out = {}
    legal = 0
    total = 0
    for (udegs, a8), cu in u.terms.items():
        for (vdegs, q8), cv in v.terms.items():
            total += 1
            contrib = _pair_modes(udegs, a8, vdegs, q8, n)
            if contrib is None:
                continue
            legal += 1
            cc = cu * cv
            q8out = q8 + a8
            for (degs, e), amp in contrib.items():
                if not amp:
                    continue
                coeff = cc.mul_rat_sqrt2(amp, e)
                key = (degs, q8out)
                acc = out.get(key)
                acc = coeff if acc is None else acc + coeff
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
    return State(out), legal, total


def mode_apply(u, n, v):
    """The n-th mode of u applied to v.

    Raises ModeLegalityError when u and v are nonzero but no charge
    pairing is compatible with the requested index.
    """
    result, legal, total = _mode_apply_counting(u, n, v)
    if total and not legal:
        raise ModeLegalityError("mode %s is not defined on this pair" % n)
    return result


def mode_apply_theta_even(u, n, v):
    """Fast path for theta-fixed u with no charge-zero part acting on a
    theta-fixed v: compute the positive-charge half and symmetrize."""
    pos = State({m: c for m, c in u.terms.items() if m[1] > 0})
    if theta(u) != u or theta(v) != v or len(pos.terms) * 2 != len(u.terms):
        raise ValueError("theta-even fast path preconditions not met")
    q = mode_apply(pos, n, v)
    return q + theta(q)


# --------------------------------------------------------------------------
# Virasoro modes.

_OMEGA = None


def _omega():
    global _OMEGA
    if _OMEGA is None:
        _OMEGA = named_vector("omega")
    return _OMEGA


def virasoro_mode(n, v):
    """L(n) v for the rank-one free-boson Virasoro vector (c = 1)."""
    return mode_apply(_omega(), n + 1, v)


def apply_word(word, v):
    """Apply L(m_s)...L(m_1) to v, rightmost factor first.

    word is the list [m_s, ..., m_1] of mode indices, so apply_word([-3, -1], v)
    is L(-3) L(-1) v.
    """
    for m in reversed(list(word)):
        v = virasoro_mode(m, v)
        if not v:
            break
    return v


# --------------------------------------------------------------------------
# Zero-mode spectral decomposition (Krylov based, exact).


def _rational_roots(coeffs):
    """All roots of a monic rational polynomial, assuming they are
    rational with denominator dividing 6; raises otherwise.

    coeffs: ascending list of Fractions with coeffs[-1] == 1.
    """
    roots = []
    cur = [Fraction(x) for x in coeffs]
    while len(cur) > 1:
        bound = 1 + max(abs(c) for c in cur[:-1])
        found = None
        for k6 in range(-int(6 * bound) - 6, int(6 * bound) + 7):
            r = Fraction(k6, 6)
            acc = Fraction(0)
            for c in reversed(cur):
                acc = acc * r + c
            if acc == 0:
                found = r
                break
        if found is None:
            raise ArithmeticError("zero-mode spectrum is not on the (1/6)Z grid")
        roots.append(found)
        nxt = [Fraction(0)] * (len(cur) - 1)
        carry = Fraction(0)
        for i in range(len(cur) - 1, 0, -1):
            carry = cur[i] + carry * found
            nxt[i - 1] = carry
        cur = nxt
    if len(set(roots)) != len(roots):
        raise ArithmeticError("zero mode is not semisimple on this vector")
    return roots


def zero_mode_decompose(hvec, v):
    """Split v into eigenvectors of the zero mode of hvec.

    Returns {eigenvalue (Fraction): component (State)}.  The spectrum
    must be simple on the cyclic subspace and lie in (1/6)Z.
    """
    if not v:
        return {}
    ech = Echelon()
    seq = [v]
    ech.insert(v)
    dep = None
    while dep is None:
        nxt = mode_apply(hvec, 0, seq[-1])
        dep = ech.insert(nxt)
        if dep is None:
            seq.append(nxt)
    k = len(seq)
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    for i, c in dep.items():
        if not c.is_rational():
            raise ArithmeticError("zero-mode minimal polynomial is not rational")
        coeffs[i] = -c.as_rational()
    roots = _rational_roots(coeffs)
    out = {}
    for lam in roots:
        # Lagrange projector: prod over other roots of (A - mu)/(lam - mu).
        poly = [Fraction(1)]
        denom = Fraction(1)
        for mu in roots:
            if mu == lam:
                continue
            poly = [a - mu * b for a, b in
                    zip([Fraction(0)] + poly, poly + [Fraction(0)])]
            denom *= lam - mu
        piece = State()
        for i, c in enumerate(poly):
            if c:
                piece = piece + seq[i] * sc(c / denom)
        if piece:
            out[lam] = piece
    return out


def zero_mode_eigenspaces(hvec, vectors):
    """Joint eigenspace decomposition of a list of vectors.

    Returns {eigenvalue: independent spanning states}; the dimensions
    add up to the rank of the input span.
    """
    buckets = {}
    for v in vectors:
        for lam, piece in zero_mode_decompose(hvec, v).items():
            buckets.setdefault(lam, []).append(piece)
    out = {}
    total = 0
    for lam in sorted(buckets):
        ech = Echelon()
        rows = []
        for piece in buckets[lam]:
            if ech.insert(piece) is None:
                rows.append(piece)
        out[lam] = rows
        total += len(rows)
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    if total != ech.rank:
        raise ArithmeticError("eigenspace dimensions do not add up")
    return out


def zero_mode_exp(hvec, v):
    """exp(2 pi i hvec(0)) applied to v."""
    acc = State()
    for lam, piece in zero_mode_decompose(hvec, v).items():
        acc = acc + piece * exp_two_pi_i(lam)
    return acc


# --------------------------------------------------------------------------
# Li shift operators and twisted modes.


class RationalPowerSeries:
    """A finite sum of states against rational powers of z.

    terms: ascending list of (exponent, state).  bound is None for an
    exact (complete) expansion; otherwise queries above the bound raise
    instead of silently returning zero.
    """

    def __init__(self, terms, bound=None):
        self.terms = [(Fraction(e), st) for e, st in terms if st]
        self.terms.sort(key=lambda t: t[0])
        exps = [e for e, _ in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponents in power series")
        self.bound = bound if bound is None else Fraction(bound)

    def coefficient(self, e):
        e = Fraction(e)
        if self.bound is not None and e > self.bound:
            raise ValueError("coefficient %s beyond truncation bound %s"
                             % (e, self.bound))
        for ee, st in self.terms:
            if ee == e:
                return st
        return State()

    def support(self):
        return [e for e, _ in self.terms]

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, RationalPowerSeries):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("z^(%s) [%s]" % (e, st) for e, st in self.terms)


_DELTA_VALID = {}
_DELTA_CACHE = {}


def _validate_hvec(hvec):
    key = hvec.key()
    hit = _DELTA_VALID.get(key)
    if hit is not None:
        return hit
    if hvec.weight() != 1:
        raise ValueError("shift vector must have weight 1")
    for nn in (1, 2):
        if virasoro_mode(nn, hvec):
            raise ValueError("shift vector must be primary")
    if mode_apply(hvec, 0, hvec) or mode_apply(hvec, 2, hvec) \
            or mode_apply(hvec, 3, hvec):
        raise ValueError("shift vector self-modes are not of Heisenberg type")
    lvl = mode_apply(hvec, 1, hvec)
    level = lvl.coefficient(())
    if lvl != State.basis((), 0, level) or not level.is_rational():
        raise ValueError("shift vector level must be rational")
    _DELTA_VALID[key] = level.as_rational()
    return _DELTA_VALID[key]


def delta_apply(hvec, v):
    """Li's shift operator Delta(hvec, z) applied to v.

    Returns an exact RationalPowerSeries: z^{hvec(0)} applied after the
    exponential of the positive modes sum_k ((-1)^{k+1}/k) hvec(k) z^{-k}.
    """
    _validate_hvec(hvec)
    ckey = (hvec.key(), v.key())
    hit = _DELTA_CACHE.get(ckey)
    if hit is not None:
        return hit
    pieces = {0: v}
    current = {0: v}
    j = 0
    while current:
        j += 1
        nxt = {}
        for e, st in current.items():
            wmax = max(mono_weight(m) for m in st.terms)
            k = 1
            while k <= wmax:
                img = mode_apply(hvec, k, st)
                if img:
                    img = img * sc(Fraction((-1) ** (k + 1), k * j))
                    acc = nxt.get(e - k)
                    nxt[e - k] = img if acc is None else acc + img
                k += 1
        current = {e: st for e, st in nxt.items() if st}
        for e, st in current.items():
            acc = pieces.get(e)
            pieces[e] = st if acc is None else acc + st
    out = {}
    for e, st in pieces.items():
        if not st:
            continue
        for lam, piece in zero_mode_decompose(hvec, st).items():
            key = Fraction(e) + lam
            acc = out.get(key)
            out[key] = piece if acc is None else acc + piece
    res = RationalPowerSeries(sorted(out.items()), bound=None)
    _DELTA_CACHE[ckey] = res
    return res


def twisted_mode_apply(u, n, v, hvec):
    """The n-th twisted mode of u on v, for the twist attached to hvec.

    The twisted operator is the plain one evaluated on the shifted
    vector Delta(hvec, z) u, so each shift term contributes its plain
    mode at a shifted index.  Index incompatibilities are tolerated per
    term; if nothing at all is compatible, that is an error.
    """
    n = ModeIndex(n)
    series = delta_apply(hvec, u)
    acc = State()
    legal = 0
    total = 0
    for e, w in series:
        st, lg, tt = _mode_apply_counting(w, Fraction(n) + e, v)
        acc = acc + st
        legal += lg
        total += tt
    if total and not legal:
        raise ModeLegalityError("twisted mode %s undefined on this pair" % n)
    return acc


def twisted_weight(v, hvec):
    """Apply the twisted L(0) for the hvec twist."""
    return twisted_mode_apply(_omega(), 1, v, hvec)
