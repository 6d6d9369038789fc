"""Baker-Campbell-Hausdorff machinery and the product constructions built on it.

The associative expansion of log(e^X e^Y) is computed exactly on words of two
letters; its word coefficients g_w are the Goldberg coefficients, and the
left-nested Dynkin bracketing [w] recovers the Lie form

    BCH_n(xi, eta) = sum_{|w| = n} (g_w / n) [w].

On top of that sit the bidegree components BCH_{a,b}, their polarization, the
Bernoulli-number formula for products with a linear factor, the composition
formula for the z^n coefficients C_n of the star product, and the kernel
identities used to prove the equivalence of the product constructions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .liealg import LieAlgebra, Vector, as_vector, basis_vector, bracket, nilpotency_index
from .pbw import star_pbw
from .sym import SymElement, exp_truncated, sym_mul
from .zpoly import PolyZ

MAX_TRUNCATION = 12
DEFAULT_TRUNCATION = 8

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# free associative series on the letters X, Y
# ---------------------------------------------------------------------------


class FreeSeries:
    """Truncated series in the free algebra on {X, Y}, rational coefficients."""

    __slots__ = ("truncation", "terms")

    def __init__(self, truncation: int, terms: Optional[dict[str, Fraction]] = None):
        self.truncation = truncation
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if len(w) > truncation:
                    continue
                c = Fraction(c)
                if c:
                    self.terms[w] = c

    def coefficient(self, word: str) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def slice(self, n: int) -> dict[str, Fraction]:
        return {w: c for w, c in self.terms.items() if len(w) == n}

    def bidegree_slice(self, a: int, b: int) -> dict[str, Fraction]:
        return {
            w: c
            for w, c in self.terms.items()
            if w.count("X") == a and w.count("Y") == b
        }

    def add_scaled(self, other: "FreeSeries", scale: Fraction) -> "FreeSeries":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, Fraction(0)) + c * scale
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeSeries(self.truncation, out)

    def mul(self, other: "FreeSeries") -> "FreeSeries":
        out: dict[str, Fraction] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                if len(wa) + len(wb) > self.truncation:
                    continue
                w = wa + wb
                v = out.get(w, Fraction(0)) + ca * cb
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return FreeSeries(self.truncation, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeSeries):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        n = len(self.terms)
        return f"<FreeSeries truncation={self.truncation} terms={n}>"


@lru_cache(maxsize=None)
def log_expansion(truncation: int) -> FreeSeries:
    """Coefficients of log(e^X e^Y) on all words of length <= truncation."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    if truncation > MAX_TRUNCATION:
        raise ValueError(f"truncation above the supported maximum {MAX_TRUNCATION}")
    return _log_expansion_impl(truncation)


def _series_for(n: int) -> FreeSeries:
    """A cached expansion covering degree n; buckets keep the cache small."""
    if n > MAX_TRUNCATION:
        raise ValueError(f"degree {n} above the supported truncation {MAX_TRUNCATION}")
    for bucket in (DEFAULT_TRUNCATION, 10, MAX_TRUNCATION):
        if n <= bucket:
            return log_expansion(bucket)
    raise AssertionError("unreachable")


def _log_expansion_impl(truncation: int) -> FreeSeries:
    # E = e^X e^Y - 1 has coefficient 1/(a! b!) on the word X^a Y^b.
    e_terms = {}
    for a in range(truncation + 1):
        for b in range(truncation + 1 - a):
            if a + b >= 1:
                e_terms["X" * a + "Y" * b] = Fraction(
                    1, math.factorial(a) * math.factorial(b)
                )
    E = FreeSeries(truncation, e_terms)
    log = FreeSeries(truncation)
    power = FreeSeries(truncation, {"": 1})
    for m in range(1, truncation + 1):
        power = power.mul(E)
        log = log.add_scaled(power, Fraction((-1) ** (m + 1), m))
    return log


def goldberg_coefficient(word: str, truncation: Optional[int] = None) -> Fraction:
    """g_w: the coefficient of the word in the associative log expansion."""
    if not word or set(word) - {"X", "Y"}:
        raise ValueError("word must be a nonempty string over {X, Y}")
    if truncation is None:
        return _series_for(len(word)).coefficient(word)
    if len(word) > truncation:
        raise ValueError("word exceeds the series truncation")
    return log_expansion(truncation).coefficient(word)


def thompson_sum(n: int) -> Fraction:
    """sum_{|w| = n} |g_w|; bounded by 2 for n >= 1."""
    series = _series_for(max(n, 1))
    return sum((abs(c) for c in series.slice(n).values()), Fraction(0))


def free_nested_bracket(word: str, truncation: int) -> FreeSeries:
    """Left-nested commutator [w] expanded back into associative words."""
    out = FreeSeries(truncation, {word[0]: 1})
    for ch in word[1:]:
        letter = FreeSeries(truncation, {ch: 1})
        out = out.mul(letter).add_scaled(letter.mul(out), Fraction(-1))
    return out


def dynkin_consistency_residual(n: int) -> FreeSeries:
    """Difference of sum_{|w|=n} (g_w/n) [w] and the degree-n log slice.

    Empty result certifies the left-nested orientation and the normalization
    of the Goldberg coefficients at degree n.
    """
    series = _series_for(n)
    residual = FreeSeries(n)
    for w, g in series.slice(n).items():
        residual = residual.add_scaled(free_nested_bracket(w, n), g / n)
    for w, c in series.slice(n).items():
        residual = residual.add_scaled(FreeSeries(n, {w: c}), Fraction(-1))
    return residual


# ---------------------------------------------------------------------------
# BCH on a concrete Lie algebra
# ---------------------------------------------------------------------------


def dynkin_bracket(L: LieAlgebra, word: str, xi: Sequence, eta: Sequence) -> Vector:
    """Left-nested bracket of the word with X -> xi, Y -> eta."""
    if not word or set(word) - {"X", "Y"}:
        raise ValueError("word must be a nonempty string over {X, Y}")
    xi = as_vector(L, xi)
    eta = as_vector(L, eta)
    val = xi if word[0] == "X" else eta
    for ch in word[1:]:
        val = bracket(L, val, xi if ch == "X" else eta)
    return val


_BCH_AB_CACHE: dict = {}


def bch_ab(L: LieAlgebra, a: int, b: int, xi: Sequence, eta: Sequence) -> Vector:
    """The (a, b) bidegree component of the BCH series of (xi, eta)."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    n = a + b
    if n > MAX_TRUNCATION:
        raise ValueError(f"bidegree beyond the supported truncation {MAX_TRUNCATION}")
    xi = as_vector(L, xi)
    eta = as_vector(L, eta)
    key = (L, a, b, xi, eta)
    cached = _BCH_AB_CACHE.get(key)
    if cached is not None:
        return cached
    series = _series_for(n)
    total = [Fraction(0)] * L.dim
    for w, g in series.bidegree_slice(a, b).items():
        val = dynkin_bracket(L, w, xi, eta)
        if any(val):
            scale = g / n
            for k, c in enumerate(val):
                total[k] += scale * c
    result = tuple(total)
    _BCH_AB_CACHE[key] = result
    return result


def bch_tilde(
    L: LieAlgebra, xis: Sequence[Sequence], etas: Sequence[Sequence]
) -> Vector:
    """Polarization of bch_ab: the multilinear map, symmetric in each block,
    that collapses to BCH_{a,b}(xi, eta) on equal arguments."""
    a, b = len(xis), len(etas)
    if a + b < 1:
        raise ValueError("need at least one argument")
    n = a + b
    if n > MAX_TRUNCATION:
        raise ValueError(f"bidegree beyond the supported truncation {MAX_TRUNCATION}")
    xis = tuple(as_vector(L, v) for v in xis)
    etas = tuple(as_vector(L, v) for v in etas)
    key = (L, xis, etas)
    cached = _BCH_TILDE_CACHE.get(key)
    if cached is not None:
        return cached
    series = _series_for(n)
    total = [Fraction(0)] * L.dim
    norm = Fraction(1, math.factorial(a) * math.factorial(b))
    for w, g in series.bidegree_slice(a, b).items():
        scale = g / n * norm
        for px in _permutations(xis):
            for py in _permutations(etas):
                ix = iy = 0
                letters = []
                for ch in w:
                    if ch == "X":
                        letters.append(px[ix])
                        ix += 1
                    else:
                        letters.append(py[iy])
                        iy += 1
                val = letters[0]
                for v in letters[1:]:
                    val = bracket(L, val, v)
                if any(val):
                    for k, c in enumerate(val):
                        total[k] += scale * c
    result = tuple(total)
    _BCH_TILDE_CACHE[key] = result
    return result


_BCH_TILDE_CACHE: dict = {}


def _permutations(items):
    import itertools

    return itertools.permutations(items) if items else [()]


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli_star(n_max: int) -> tuple[Fraction, ...]:
    """B*_0 .. B*_{n_max}: coefficients of z/(1 - e^{-z}) = sum B*_n/n! z^n.

    The recurrence comes from multiplying both sides with 1 - e^{-z} and
    comparing z-coefficients.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    table = [Fraction(1)]
    for j in range(2, n_max + 2):
        # coefficient of z^j:  delta_{j,1} = sum_{m=1}^{j} (-1)^{m+1}/m! * B*_{j-m}/(j-m)!
        acc = Fraction(0)
        for m in range(2, j + 1):
            acc += Fraction((-1) ** (m + 1), math.factorial(m)) * table[j - m] / math.factorial(j - m)
        table.append((Fraction(0) - acc) * math.factorial(j - 1))
    return tuple(table)


def bernoulli_first_kind(n_max: int) -> tuple[Fraction, ...]:
    """Standard first-kind Bernoulli numbers via B_n = (-1)^n B*_n."""
    return tuple((-1) ** n * b for n, b in enumerate(bernoulli_star(n_max)))


# ---------------------------------------------------------------------------
# the Bernoulli formula for a linear right factor
# ---------------------------------------------------------------------------


def star_linear(x: SymElement, eta: Sequence) -> SymElement:
    """Product of x with a vector via the Bernoulli-number formula.

    On a monomial with letter multiset alpha (|alpha| = k) the polarized form
    reads

        xi_1...xi_k * eta
          = sum_j (B*_j z^j / j!) sum_tails  N(t) xi^(alpha - t) ad_t(eta),

    where t runs over ordered j-tuples drawn without replacement from the
    multiset and N(t) is the falling-count multiplicity.  Extends Q[z]-
    linearly over the coefficients of x; equals star_pbw(x, eta).
    """
    L = x.algebra
    eta = as_vector(L, eta)
    k_max = x.max_degree
    bern = bernoulli_star(max(k_max, 0))
    out = SymElement.zero(L)
    basis = [basis_vector(L, i) for i in range(L.dim)]

    for alpha, coeff in x.items():
        contributions: list[tuple[tuple[int, ...], int, Vector, Fraction]] = []

        def walk(counts: list[int], depth: int, val: Vector, mult: Fraction):
            contributions.append((tuple(counts), depth, val, mult))
            if not any(val):
                return
            for i in range(L.dim):
                if counts[i]:
                    nxt = bracket(L, basis[i], val)
                    counts[i] -= 1
                    walk(counts, depth + 1, nxt, mult * (counts[i] + 1))
                    counts[i] += 1

        walk(list(alpha), 0, eta, Fraction(1))
        for remaining, j, val, mult in contributions:
            if bern[j] == 0 or not any(val):
                continue
            scale = coeff * PolyZ.z(power=j, coeff=bern[j] * mult / math.factorial(j))
            term = sym_mul(
                SymElement.monomial(L, remaining),
                SymElement.from_vector(L, val),
            )
            out = out + term.scale(scale)
    return out


def nfold_star(L: LieAlgebra, vectors: Sequence[Sequence]) -> SymElement:
    """Left-to-right iterated star product of linear factors."""
    if not vectors:
        raise ValueError("need at least one factor")
    acc = SymElement.from_vector(L, as_vector(L, vectors[0]))
    for v in vectors[1:]:
        acc = star_linear(acc, v)
    return acc


# ---------------------------------------------------------------------------
# the C_n operators
# ---------------------------------------------------------------------------


def cn_monomial(
    L: LieAlgebra, xi: Sequence, k: int, eta: Sequence, l: int, n: int
) -> SymElement:
    """z^n coefficient of xi^k * eta^l via the BCH composition formula.

    With r = k + l - n this is (k! l! / r!) times the sum over ordered tuples
    of bidegrees (a_i, b_i), a_i + b_i >= 1, summing to (k, l), of the
    Sym-product of the BCH_{a_i,b_i} vectors; commutativity lets us group the
    tuples into multisets, so the implementation sums

        k! l! * prod_pairs V_{a,b}^{m_ab} / m_ab!

    over multiplicity assignments.  Zero BCH components prune the whole branch.
    """
    xi = as_vector(L, xi)
    eta = as_vector(L, eta)
    if k < 0 or l < 0 or n < 0:
        raise ValueError("degrees must be nonnegative")
    if n == 0:
        return sym_mul(
            SymElement.from_vector(L, xi) ** k, SymElement.from_vector(L, eta) ** l
        )
    if n >= k + l:
        return SymElement.zero(L)

    r = k + l - n
    pairs = []
    for a in range(k + 1):
        for b in range(l + 1):
            if 1 <= a + b <= k + l:
                vec = bch_ab(L, a, b, xi, eta)
                if any(vec):
                    pairs.append((a, b, SymElement.from_vector(L, vec)))

    total = SymElement.zero(L)

    def backtrack(idx: int, slots: int, a_left: int, b_left: int, partial: SymElement):
        nonlocal total
        if slots == 0:
            if a_left == 0 and b_left == 0:
                total = total + partial
            return
        if idx == len(pairs):
            return
        a, b, vec = pairs[idx]
        m_max = slots
        if a:
            m_max = min(m_max, a_left // a)
        if b:
            m_max = min(m_max, b_left // b)
        power = partial
        fact = 1
        for m in range(0, m_max + 1):
            if m:
                fact *= m
                power = sym_mul(power, vec)
            backtrack(
                idx + 1,
                slots - m,
                a_left - m * a,
                b_left - m * b,
                power.scale(Fraction(1, fact)) if m else power,
            )

    backtrack(0, r, k, l, SymElement.unit(L))
    return total.scale(Fraction(math.factorial(k) * math.factorial(l)))


def cn_polarized(
    L: LieAlgebra, xs: Sequence[Sequence], ys: Sequence[Sequence], n: int
) -> SymElement:
    """C_n on products of linear factors via the polarized composition formula.

    Direct double-permutation sum; intended for small factor counts.
    """
    import itertools

    xs = [as_vector(L, v) for v in xs]
    ys = [as_vector(L, v) for v in ys]
    k, l = len(xs), len(ys)
    if n == 0:
        out = SymElement.unit(L)
        for v in xs + ys:
            out = sym_mul(out, SymElement.from_vector(L, v))
        return out
    if n >= k + l:
        return SymElement.zero(L)
    r = k + l - n

    compositions = [
        (aa, bb)
        for aa in _compositions(k, r)
        for bb in _compositions(l, r)
        if all(a + b >= 1 for a, b in zip(aa, bb))
    ]
    total = SymElement.zero(L)
    for sigma in itertools.permutations(range(k)):
        for tau in itertools.permutations(range(l)):
            for aa, bb in compositions:
                term = SymElement.unit(L)
                ix = iy = 0
                for a, b in zip(aa, bb):
                    vec = bch_tilde(
                        L,
                        [xs[sigma[t]] for t in range(ix, ix + a)],
                        [ys[tau[t]] for t in range(iy, iy + b)],
                    )
                    ix += a
                    iy += b
                    if not any(vec):
                        term = SymElement.zero(L)
                        break
                    term = sym_mul(term, SymElement.from_vector(L, vec))
                if term:
                    total = total + term
    return total.scale(Fraction(1, math.factorial(r)))


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def cn_general(x: SymElement, y: SymElement, n: int) -> SymElement:
    """z^n coefficient of star_pbw(x, y); inputs must be z-constant."""
    if not (x.is_z_constant and y.is_z_constant):
        raise ValueError("cn_general needs z-constant inputs")
    if n == 0:
        return sym_mul(x, y)
    return star_pbw(x, y).z_coefficient(n)


# ---------------------------------------------------------------------------
# assembled BCH-route star products
# ---------------------------------------------------------------------------


def star_bch(L: LieAlgebra, xi: Sequence, k: int, eta: Sequence, l: int) -> SymElement:
    """xi^k * eta^l assembled as sum_n z^n C_n from the composition formula.

    One backtracking pass over the multiplicity assignments covers every n at
    once: a multiset using r slots lands in the z^(k+l-r) coefficient."""
    xi = as_vector(L, xi)
    eta = as_vector(L, eta)
    if k + l == 0:
        return SymElement.unit(L)
    pairs = []
    for a in range(k + 1):
        for b in range(l + 1):
            if a + b >= 1:
                vec = bch_ab(L, a, b, xi, eta)
                if any(vec):
                    pairs.append((a, b, SymElement.from_vector(L, vec)))
    scale = Fraction(math.factorial(k) * math.factorial(l))
    out = SymElement.zero(L)

    def backtrack(idx: int, a_left: int, b_left: int, used: int, partial: SymElement):
        nonlocal out
        if a_left == 0 and b_left == 0:
            out = out + partial.scale(PolyZ.z(power=k + l - used, coeff=scale))
            return
        if idx == len(pairs):
            return
        a, b, vec = pairs[idx]
        m_max = a_left // a if a else None
        if b:
            cap = b_left // b
            m_max = cap if m_max is None else min(m_max, cap)
        power = partial
        fact = 1
        for m in range(0, m_max + 1):
            if m:
                fact *= m
                power = sym_mul(power, vec)
            backtrack(
                idx + 1,
                a_left - m * a,
                b_left - m * b,
                used + m,
                power.scale(Fraction(1, fact)) if m else power,
            )

    backtrack(0, k, l, 0, SymElement.unit(L))
    return out


def star_bch_elements(x: SymElement, y: SymElement) -> SymElement:
    """BCH-route product extended bilinearly to arbitrary z-constant elements.

    Pure powers of a single basis letter go through the composition formula;
    mixed monomials go through the polarized route, so this is intended for
    small degrees (the CLI --method bch path).
    """
    if x.algebra != y.algebra:
        raise ValueError("elements live over different algebras")
    if not (x.is_z_constant and y.is_z_constant):
        raise ValueError("the BCH route needs z-constant inputs")
    L = x.algebra
    out = SymElement.zero(L)
    for alpha, ca in x.items():
        for beta, cb in y.items():
            c = ca * cb
            if c.is_zero:
                continue
            out = out + _star_bch_monomials(L, alpha, beta).scale(c)
    return out


def _star_bch_monomials(L: LieAlgebra, alpha, beta) -> SymElement:
    xs = _letters(L, alpha)
    ys = _letters(L, beta)
    a_support = [i for i, a in enumerate(alpha) if a]
    b_support = [i for i, b in enumerate(beta) if b]
    if len(a_support) <= 1 and len(b_support) <= 1:
        xi = basis_vector(L, a_support[0]) if a_support else basis_vector(L, 0)
        eta = basis_vector(L, b_support[0]) if b_support else basis_vector(L, 0)
        return star_bch(L, xi, sum(alpha), eta, sum(beta))
    out = SymElement.zero(L)
    for n in range(0, max(sum(alpha) + sum(beta), 1)):
        part = cn_polarized(L, xs, ys, n)
        if part:
            out = out + part.scale(PolyZ.z(power=n))
    return out


def _letters(L: LieAlgebra, alpha) -> list[Vector]:
    out = []
    for i, a in enumerate(alpha):
        out.extend([basis_vector(L, i)] * a)
    return out


# ---------------------------------------------------------------------------
# kernel identities (appendix material)
# ---------------------------------------------------------------------------


def kernel_K(k: int, s: int) -> Fraction:
    """The symmetrization kernel; evaluates to delta_{s,0}.

    K(k,s) = 1/(k+1) sum_{n<=k} C(k+1,n) B*_n sum_{j<=n} (-1)^j C(n,j)
             sum_{l<=k-n} delta_{s, l+j}
    """
    if not 0 <= s <= k:
        raise ValueError("need 0 <= s <= k")
    bern = bernoulli_star(k)
    total = Fraction(0)
    for n in range(k + 1):
        if bern[n] == 0:
            continue
        inner = Fraction(0)
        for j in range(n + 1):
            l = s - j
            if 0 <= l <= k - n:
                inner += Fraction((-1) ** j * math.comb(n, j))
        total += Fraction(math.comb(k + 1, n)) * bern[n] * inner
    return total / (k + 1)


def carlitz_check(k: int, m: int) -> Fraction:
    """Residual of the Carlitz symmetry; zero when the identity holds.

    (-1)^k sum_j C(k,j) B_{m+j}  =  (-1)^m sum_i C(m,i) B_{k+i}
    with first-kind Bernoulli numbers B_n = (-1)^n B*_n.
    """
    if k < 0 or m < 0:
        raise ValueError("need k, m >= 0")
    bern = bernoulli_first_kind(k + m)
    lhs = Fraction((-1) ** k) * sum(
        (Fraction(math.comb(k, j)) * bern[m + j] for j in range(k + 1)), Fraction(0)
    )
    rhs = Fraction((-1) ** m) * sum(
        (Fraction(math.comb(m, i)) * bern[k + i] for i in range(m + 1)), Fraction(0)
    )
    return lhs - rhs


# ---------------------------------------------------------------------------
# exponential identities on nilpotent algebras
# ---------------------------------------------------------------------------


def bch_element(L: LieAlgebra, xi: Sequence, eta: Sequence, z0: Scalar) -> Vector:
    """(1/z) BCH(z xi, z eta) = sum z^{a+b-1} BCH_{a,b}(xi, eta), finite for
    nilpotent algebras."""
    idx = nilpotency_index(L)
    if idx is None:
        raise ValueError("BCH element only terminates for nilpotent algebras")
    z0 = Fraction(z0)
    xi = as_vector(L, xi)
    eta = as_vector(L, eta)
    total = [Fraction(0)] * L.dim
    for a in range(idx + 1):
        for b in range(idx + 1 - a):
            if a + b < 1:
                continue
            vec = bch_ab(L, a, b, xi, eta)
            if any(vec):
                w = z0 ** (a + b - 1)
                for i, c in enumerate(vec):
                    total[i] += w * c
    return tuple(total)


def exp_product_check(
    L: LieAlgebra, xi: Sequence, eta: Sequence, z0: Scalar, order: int
) -> SymElement:
    """Residual of exp(xi) * exp(eta) = exp((1/z) BCH(z xi, z eta)).

    Both sides are compared on all parts of degree <= order.  The left factor
    exponentials are truncated at order * nilpotency_index: a product
    C_n(xi^a, eta^b) can land as low as degree (a+b)/N, so that truncation
    captures every contribution below the comparison degree and the residual
    is exactly zero, not merely small.
    """
    idx = nilpotency_index(L)
    if idx is None:
        raise ValueError("exp product identity needs a nilpotent algebra")
    z0 = Fraction(z0)
    if z0 == 0:
        raise ValueError("z must be nonzero")
    if order < 1:
        raise ValueError("order must be >= 1")
    factor_order = order * idx
    lhs = star_pbw(
        exp_truncated(SymElement.from_vector(L, as_vector(L, xi)), factor_order),
        exp_truncated(SymElement.from_vector(L, as_vector(L, eta)), factor_order),
    ).evaluate_z(z0)
    rhs = exp_truncated(
        SymElement.from_vector(L, bch_element(L, xi, eta, z0)), order
    )
    return _truncate(lhs, order) - _truncate(rhs, order)


def one_parameter_check(
    L: LieAlgebra, xi: Sequence, t: Scalar, s: Scalar, z0: Scalar, order: int
) -> SymElement:
    """Residual of exp(t xi) * exp(s xi) = exp((t+s) xi); brackets all vanish,
    so truncation at the comparison order is already exact."""
    xi = as_vector(L, xi)
    t, s = Fraction(t), Fraction(s)
    lhs = star_pbw(
        exp_truncated(SymElement.from_vector(L, xi).scale(t), order),
        exp_truncated(SymElement.from_vector(L, xi).scale(s), order),
    ).evaluate_z(Fraction(z0))
    rhs = exp_truncated(SymElement.from_vector(L, xi).scale(t + s), order)
    return _truncate(lhs, order) - rhs


def _truncate(x: SymElement, order: int) -> SymElement:
    return SymElement(x.algebra, {a: c for a, c in x.items() if sum(a) <= order})
