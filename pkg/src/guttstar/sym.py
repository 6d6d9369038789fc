"""Graded symmetric-algebra elements and the weighted seminorm family.

Elements of Sym(g) are stored as maps from multi-indices over the chosen
basis to z-polynomial coefficients; the symmetric product is multi-index
addition.  Seminorms are weighted l1 norms on the basis.  For those, the
projective tensor power of a degree-n monomial xi^alpha is exactly
prod_i w_i^alpha_i: the symmetrized tensor splits into n!/alpha! distinct
words of weight alpha!/n! each, and distinct monomials have disjoint word
support, so the l1 value is computable in closed form.  That makes the
graded norms

    p_R = sum_n n!^R p^n

exactly evaluable on every element here (n!^R itself is taken in floating
point unless R is integral and an exact value is requested).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .liealg import LieAlgebra, Vector, as_vector, bracket
from .zpoly import CoeffLike, PolyZ

MultiIndex = tuple[int, ...]
RLike = Union[int, float, Fraction]


class SymElement:
    """Element of Sym(g) with coefficients polynomial in z."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: LieAlgebra, terms: Mapping[MultiIndex, CoeffLike] = ()):
        self.algebra = algebra
        clean: dict[MultiIndex, PolyZ] = {}
        for alpha, coeff in dict(terms).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != algebra.dim or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for dim {algebra.dim}")
            c = PolyZ.coerce(coeff)
            if not c.is_zero:
                prev = clean.get(alpha)
                c = c + prev if prev is not None else c
                if c.is_zero:
                    clean.pop(alpha, None)
                else:
                    clean[alpha] = c
        self._terms = clean

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> "SymElement":
        return cls(algebra)

    @classmethod
    def unit(cls, algebra: LieAlgebra, coeff: CoeffLike = 1) -> "SymElement":
        return cls(algebra, {(0,) * algebra.dim: coeff})

    @classmethod
    def monomial(
        cls, algebra: LieAlgebra, alpha: Sequence[int], coeff: CoeffLike = 1
    ) -> "SymElement":
        return cls(algebra, {tuple(alpha): coeff})

    @classmethod
    def from_vector(cls, algebra: LieAlgebra, v: Sequence) -> "SymElement":
        v = as_vector(algebra, v)
        return cls(
            algebra,
            {
                tuple(1 if k == i else 0 for k in range(algebra.dim)): c
                for i, c in enumerate(v)
                if c
            },
        )

    @classmethod
    def basis(cls, algebra: LieAlgebra, i: int) -> "SymElement":
        return cls.monomial(
            algebra, tuple(1 if k == i else 0 for k in range(algebra.dim))
        )

    # inspection ---------------------------------------------------------------

    def items(self) -> Iterable[tuple[MultiIndex, PolyZ]]:
        return self._terms.items()

    def coefficient(self, alpha: Sequence[int]) -> PolyZ:
        return self._terms.get(tuple(alpha), PolyZ())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_degree(self) -> int:
        """Top polynomial degree; -1 for the zero element."""
        return max((sum(a) for a in self._terms), default=-1)

    @property
    def z_degree(self) -> int:
        return max((c.degree for c in self._terms.values()), default=-1)

    @property
    def is_z_constant(self) -> bool:
        return all(c.is_constant for c in self._terms.values())

    def is_homogeneous(self) -> bool:
        degs = {sum(a) for a in self._terms}
        return len(degs) <= 1

    def degrees(self) -> list[int]:
        return sorted({sum(a) for a in self._terms})

    # algebra --------------------------------------------------------------------

    def _require_same(self, other: "SymElement") -> None:
        if self.algebra != other.algebra:
            raise ValueError("elements live over different algebras")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._require_same(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            prev = out.get(alpha)
            s = c + prev if prev is not None else c
            if s.is_zero:
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return SymElement(self.algebra, out)

    def __neg__(self) -> "SymElement":
        return SymElement(self.algebra, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def scale(self, coeff: CoeffLike) -> "SymElement":
        c = PolyZ.coerce(coeff)
        return SymElement(self.algebra, {a: v * c for a, v in self._terms.items()})

    def __mul__(self, other: Union["SymElement", CoeffLike]) -> "SymElement":
        if not isinstance(other, SymElement):
            return self.scale(other)
        return sym_mul(self, other)

    def __rmul__(self, other: CoeffLike) -> "SymElement":
        return self.scale(other)

    def __pow__(self, n: int) -> "SymElement":
        if n < 0:
            raise ValueError("negative powers are not defined in Sym(g)")
        result = SymElement.unit(self.algebra)
        for _ in range(n):
            result = sym_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def project(self, n: int) -> "SymElement":
        """Homogeneous degree-n part."""
        if n < 0:
            raise ValueError("degree must be nonnegative")
        return SymElement(
            self.algebra, {a: c for a, c in self._terms.items() if sum(a) == n}
        )

    def evaluate_z(self, z0: Union[int, Fraction]) -> "SymElement":
        """Substitute z = z0 in every coefficient."""
        z0 = Fraction(z0)
        return SymElement(
            self.algebra, {a: c.evaluate(z0) for a, c in self._terms.items()}
        )

    def z_coefficient(self, n: int) -> "SymElement":
        """The Sym-valued coefficient of z^n."""
        return SymElement(
            self.algebra, {a: c.coeff(n) for a, c in self._terms.items()}
        )

    def __str__(self) -> str:
        from .exprs import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"<SymElement {self}>"


def sym_mul(x: SymElement, y: SymElement) -> SymElement:
    """Commutative graded product: multi-index addition on monomials."""
    x._require_same(y)
    out: dict[MultiIndex, PolyZ] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            key = tuple(i + j for i, j in zip(a, b))
            c = ca * cb
            prev = out.get(key)
            if prev is not None:
                c = c + prev
            if c.is_zero:
                out.pop(key, None)
            else:
                out[key] = c
    return SymElement(x.algebra, out)


def project(x: SymElement, n: int) -> SymElement:
    return x.project(n)


def evaluate_z(x: SymElement, z0: Union[int, Fraction]) -> SymElement:
    return x.evaluate_z(z0)


def exp_truncated(x: SymElement, order: int) -> SymElement:
    """sum_{n<=order} x^n / n!"""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    total = SymElement.unit(x.algebra)
    power = SymElement.unit(x.algebra)
    fact = 1
    for n in range(1, order + 1):
        power = sym_mul(power, x)
        fact *= n
        total = total + power.scale(Fraction(1, fact))
    return total


# ---------------------------------------------------------------------------
# seminorms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Seminorm:
    """Weighted l1 norm on the basis, extended to p^n and p_R."""

    algebra: LieAlgebra
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.algebra.dim:
            raise ValueError("need one weight per basis element")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be strictly positive")

    @classmethod
    def ell1(cls, algebra: LieAlgebra, weights: Sequence = None) -> "Seminorm":
        if weights is None:
            weights = [1] * algebra.dim
        return cls(algebra, tuple(Fraction(w) for w in weights))

    def scale(self, c: Union[int, Fraction]) -> "Seminorm":
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scaling factor must be positive")
        return Seminorm(self.algebra, tuple(c * w for w in self.weights))

    def vector_norm(self, v: Sequence) -> Fraction:
        v = as_vector(self.algebra, v)
        return sum((abs(c) * w for c, w in zip(v, self.weights)), Fraction(0))

    def monomial_weight(self, alpha: MultiIndex) -> Fraction:
        out = Fraction(1)
        for w, a in zip(self.weights, alpha):
            if a:
                out *= w**a
        return out


def factorial_power(n: int, R: RLike) -> float:
    """n!^R in floating point."""
    return math.exp(float(R) * math.lgamma(n + 1))


def factorial_power_exact(n: int, R: int) -> Fraction:
    if R < 0:
        return Fraction(1, math.factorial(n) ** (-R))
    return Fraction(math.factorial(n) ** R)


def graded_term(n: int, R: RLike, part: Fraction, scale: float = 1.0) -> float:
    """scale^n * n!^R * part as a float, part >= 0 rational.

    Integral R goes through exact rational arithmetic (so e.g. n!^1 * 1/n!
    is exactly 1.0); other R is assembled in log space, which keeps huge
    factorials and tiny rational coefficients from overflowing separately.
    """
    if part == 0:
        return 0.0
    fR = float(R)
    if fR.is_integer():
        try:
            return (scale**n) * float(factorial_power_exact(n, int(fR)) * part)
        except OverflowError:
            return math.inf
    log_term = (
        fR * math.lgamma(n + 1)
        + math.log(part.numerator)
        - math.log(part.denominator)
    )
    if scale != 1.0:
        log_term += n * math.log(scale)
    if log_term > 700.0:
        return math.inf
    return math.exp(log_term)


def pn_norm(p: Seminorm, x: SymElement) -> Fraction:
    """p^n of a homogeneous, z-constant element: sum |c_alpha| prod w^alpha."""
    if not x.is_homogeneous():
        raise ValueError("pn_norm needs a homogeneous element")
    if not x.is_z_constant:
        raise ValueError("pn_norm needs z-constant coefficients; evaluate_z first")
    total = Fraction(0)
    for alpha, c in x.items():
        total += abs(c.constant_value()) * p.monomial_weight(alpha)
    return total


def pR_norm(p: Seminorm, R: RLike, x: SymElement, scale: float = 1.0) -> float:
    """(scale*p)_R(x) = sum_n scale^n n!^R p^n(x_n), in floating point.

    The scale factor is applied through the degree-homogeneity identity
    (c p)^n = c^n p^n, so irrational scales (2^R, 8e(|z|+1), ...) stay exact
    until the final float conversion.
    """
    total = 0.0
    for n in x.degrees():
        part = pn_norm(p, x.project(n))
        if part:
            total += graded_term(n, R, part, scale)
    return total


def pR_norm_exact(p: Seminorm, R: int, x: SymElement) -> Fraction:
    """p_R(x) as an exact rational, available for integral R."""
    total = Fraction(0)
    for n in x.degrees():
        total += factorial_power_exact(n, R) * pn_norm(p, x.project(n))
    return total


def scale_seminorm(c: Union[int, Fraction], p: Seminorm) -> Seminorm:
    return p.scale(c)


def submultiplicative_scale(L: LieAlgebra, p: Seminorm) -> Fraction:
    """Smallest c >= 1 so that q = c*p satisfies q([xi,eta]) <= q(xi)q(eta).

    q is then submultiplicative for the bracket, hence an asymptotic estimate
    for itself and (since q >= p) for p: any word of n letters and n-1
    brackets obeys p(word) <= q(word) <= q(letter_1) ... q(letter_n).
    """
    best = Fraction(1)
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            row = L.basis_bracket(i, j)
            if not row:
                continue
            value = sum(
                (abs(c) * p.weights[k] for k, c in row.items()), Fraction(0)
            )
            ratio = value / (p.weights[i] * p.weights[j])
            if ratio > best:
                best = ratio
    return best


def asymptotic_estimate(L: LieAlgebra, p: Seminorm) -> Seminorm:
    """The scaled seminorm from submultiplicative_scale, ready to use."""
    return p.scale(submultiplicative_scale(L, p))


def bracket_vector(L: LieAlgebra, v: Sequence, w: Sequence) -> Vector:
    return bracket(L, v, w)
