"""Universal enveloping algebra in the normal-ordered PBW basis.

The enveloping algebra of the z-scaled bracket is presented on sorted words
over the basis, with the rewriting rule

    e_j e_i = e_i e_j + z [e_j, e_i]        (j > i)

carried out by the kernel backend.  The quantization map q_z symmetrizes a
monomial over all permutations; it is computed by the equivalent first-letter
recursion

    q(xi^alpha) = (1/n) sum_i alpha_i  e_i . q(xi^(alpha - delta_i)),

obtained from grouping the permutation sum by sigma(1).  Its inverse runs a
top-down triangular elimination (q of a degree-n monomial is its sorted word
plus strictly shorter words).  ``star_pbw`` is the pull-back product and the
reference oracle for every other product construction in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .kernel import PbwKernel
from .liealg import LieAlgebra, LieHom, check_hom
from .sym import MultiIndex, SymElement, sym_mul
from .zpoly import CoeffLike, PolyZ, zp_mul, zp_scale

Word = tuple[int, ...]


class PbwElement:
    """Element of U(g_z) expanded in sorted (normal-ordered) words."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: LieAlgebra, terms: Mapping[Word, CoeffLike] = ()):
        self.algebra = algebra
        clean: dict[Word, PolyZ] = {}
        for word, coeff in dict(terms).items():
            word = tuple(word)
            if any(not 0 <= i < algebra.dim for i in word):
                raise ValueError(f"word {word} uses letters outside the basis")
            if any(word[t] > word[t + 1] for t in range(len(word) - 1)):
                raise ValueError(f"word {word} is not normal-ordered")
            c = PolyZ.coerce(coeff)
            if not c.is_zero:
                prev = clean.get(word)
                c = c + prev if prev is not None else c
                if c.is_zero:
                    clean.pop(word, None)
                else:
                    clean[word] = c
        self._terms = clean

    @classmethod
    def unit(cls, algebra: LieAlgebra, coeff: CoeffLike = 1) -> "PbwElement":
        return cls(algebra, {(): coeff})

    def items(self) -> Iterable[tuple[Word, PolyZ]]:
        return self._terms.items()

    def coefficient(self, word: Word) -> PolyZ:
        return self._terms.get(tuple(word), PolyZ())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def __add__(self, other: "PbwElement") -> "PbwElement":
        if self.algebra != other.algebra:
            raise ValueError("elements live over different algebras")
        out = dict(self._terms)
        for w, c in other._terms.items():
            prev = out.get(w)
            s = c + prev if prev is not None else c
            if s.is_zero:
                out.pop(w, None)
            else:
                out[w] = s
        return PbwElement(self.algebra, out)

    def __neg__(self) -> "PbwElement":
        return PbwElement(self.algebra, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "PbwElement") -> "PbwElement":
        return self + (-other)

    def scale(self, coeff: CoeffLike) -> "PbwElement":
        c = PolyZ.coerce(coeff)
        return PbwElement(self.algebra, {w: v * c for w, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        names = self.algebra.basis_names
        parts = [
            f"({c})*{'*'.join(names[i] for i in w) or '1'}"
            for w, c in sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))
        ]
        return "<PbwElement " + (" + ".join(parts) or "0") + ">"


# ---------------------------------------------------------------------------
# per-algebra computation contexts
# ---------------------------------------------------------------------------


class _Context:
    """Kernel plus memo tables for one algebra and one bracket weight."""

    def __init__(self, algebra: LieAlgebra, deformed: bool):
        self.algebra = algebra
        self.deformed = deformed
        rows = {}
        for i in range(algebra.dim):
            for j in range(algebra.dim):
                if i != j:
                    row = tuple(sorted(algebra.basis_bracket(i, j).items()))
                    if row:
                        rows[(i, j)] = row
        self.kernel = PbwKernel(algebra.dim, rows, deform=deformed)
        self.q_cache: dict[MultiIndex, dict] = {}
        self.star_cache: dict[tuple[MultiIndex, MultiIndex], SymElement] = {}

    # All internals speak the plain-dict coefficient representation
    # ({z_exp: Fraction}); PolyZ wrapping happens at the public boundary
    # only, which keeps the dominant elimination loops free of wrapper
    # object churn.

    def q_monomial(self, alpha: MultiIndex) -> dict[Word, dict]:
        cached = self.q_cache.get(alpha)
        if cached is not None:
            return cached
        n = sum(alpha)
        if n == 0:
            result = {(): {0: Fraction(1)}}
            self.q_cache[alpha] = result
            return result
        acc: dict[Word, dict] = {}
        for i, a in enumerate(alpha):
            if not a:
                continue
            sub = self.q_monomial(_decrement(alpha, i))
            weight = Fraction(a, n)
            for word, coeff in sub.items():
                scaled = zp_scale(coeff, weight)
                for w2, c2 in self.kernel.insert(i, word).items():
                    _raw_accumulate(acc, w2, scaled, c2)
        self.q_cache[alpha] = acc
        return acc

    def multiply_raw(self, a: dict, b: dict) -> dict:
        out: dict[Word, dict] = {}
        for u, cu in a.items():
            for v, cv in b.items():
                cuv = zp_mul(cu, cv)
                if not cuv:
                    continue
                for w, c in self.kernel.word_mul(u, v).items():
                    _raw_accumulate(out, w, cuv, c)
        return out

    def q_raw(self, terms: dict) -> dict:
        out: dict[Word, dict] = {}
        for alpha, coeff in terms.items():
            for w, c in self.q_monomial(alpha).items():
                _raw_accumulate(out, w, coeff, c)
        return out

    def q_inv_raw(self, u: dict) -> dict:
        """Exact inverse by triangular elimination on the word length."""
        result: dict[MultiIndex, dict] = {}
        remaining = {w: dict(c) for w, c in u.items()}
        while remaining:
            top_len = max(len(w) for w in remaining)
            layer = []
            for w in [w for w in remaining if len(w) == top_len]:
                coeff = remaining.pop(w)
                alpha = _word_to_multi(w, self.algebra.dim)
                result[alpha] = coeff
                layer.append((alpha, coeff))
            for alpha, coeff in layer:
                neg = zp_scale(coeff, _MINUS_ONE)
                for w, c in self.q_monomial(alpha).items():
                    if len(w) < top_len:
                        _raw_accumulate(remaining, w, neg, c)
            assert all(len(w) < top_len for w in remaining), "elimination failed"
        return result

    def star_monomials(self, alpha: MultiIndex, beta: MultiIndex) -> SymElement:
        key = (alpha, beta)
        cached = self.star_cache.get(key)
        if cached is None:
            product = self.multiply_raw(self.q_monomial(alpha), self.q_monomial(beta))
            cached = _raw_to_sym(self.algebra, self.q_inv_raw(product))
            self.star_cache[key] = cached
        return cached


_MINUS_ONE = Fraction(-1)


def _decrement(alpha: MultiIndex, i: int) -> MultiIndex:
    return alpha[:i] + (alpha[i] - 1,) + alpha[i + 1 :]


def _word_to_multi(word: Word, dim: int) -> MultiIndex:
    counts = [0] * dim
    for i in word:
        counts[i] += 1
    return tuple(counts)


def _raw_accumulate(out: dict, key, ca: dict, cb: dict) -> None:
    """out[key] += ca * cb on plain-dict z-polynomials; drops empty slots."""
    slot = out.get(key)
    if slot is None:
        slot = out[key] = {}
    for ea, va in ca.items():
        for eb, vb in cb.items():
            e = ea + eb
            cur = slot.get(e)
            if cur is None:
                slot[e] = va * vb
            else:
                cur = cur + va * vb
                if cur:
                    slot[e] = cur
                else:
                    del slot[e]
    if not slot:
        del out[key]


def _sym_to_raw(x: SymElement) -> dict:
    return {alpha: c.as_dict() for alpha, c in x.items()}


def _raw_to_sym(algebra: LieAlgebra, terms: dict) -> SymElement:
    return SymElement(
        algebra, {alpha: PolyZ._raw(c) for alpha, c in terms.items() if c}
    )


def _pbw_to_raw(u: PbwElement) -> dict:
    return {w: c.as_dict() for w, c in u.items()}


def _raw_to_pbw(algebra: LieAlgebra, terms: dict) -> PbwElement:
    return PbwElement(
        algebra, {w: PolyZ._raw(c) for w, c in terms.items() if c}
    )


_contexts: dict[tuple[LieAlgebra, bool], _Context] = {}


def _context(algebra: LieAlgebra, deformed: bool = True) -> _Context:
    key = (algebra, deformed)
    ctx = _contexts.get(key)
    if ctx is None:
        ctx = _contexts[key] = _Context(algebra, deformed)
    return ctx


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def pbw_mul(a: PbwElement, b: PbwElement) -> PbwElement:
    """Product in U(g_z), rewritten to the normal-ordered basis."""
    if a.algebra != b.algebra:
        raise ValueError("elements live over different algebras")
    ctx = _context(a.algebra)
    return _raw_to_pbw(a.algebra, ctx.multiply_raw(_pbw_to_raw(a), _pbw_to_raw(b)))


def q_z(x: SymElement) -> PbwElement:
    """PBW symmetrization map Sym(g) -> U(g_z)."""
    ctx = _context(x.algebra)
    return _raw_to_pbw(x.algebra, ctx.q_raw(_sym_to_raw(x)))


def q_z_inv(u: PbwElement) -> SymElement:
    """Exact inverse of q_z."""
    ctx = _context(u.algebra)
    return _raw_to_sym(u.algebra, ctx.q_inv_raw(_pbw_to_raw(u)))


def star_pbw(x: SymElement, y: SymElement) -> SymElement:
    """The star product q_z^{-1}(q_z(x) . q_z(y)); the oracle product."""
    if x.algebra != y.algebra:
        raise ValueError("elements live over different algebras")
    ctx = _context(x.algebra)
    out = SymElement.zero(x.algebra)
    for alpha, ca in x.items():
        for beta, cb in y.items():
            c = ca * cb
            if not c.is_zero:
                out = out + ctx.star_monomials(alpha, beta).scale(c)
    return out


def star_graded(x: SymElement, y: SymElement) -> SymElement:
    """The degree-graded construction: undeformed PBW product, with the
    degree-(k+l-n) part of each homogeneous block reweighted by z^n.

    Requires z-constant inputs.  Must coincide with star_pbw.
    """
    if x.algebra != y.algebra:
        raise ValueError("elements live over different algebras")
    if not (x.is_z_constant and y.is_z_constant):
        raise ValueError("star_graded needs z-constant inputs")
    ctx = _context(x.algebra, deformed=False)
    out = SymElement.zero(x.algebra)
    for k in x.degrees():
        xk = x.project(k)
        for l in y.degrees():
            yl = y.project(l)
            block = _raw_to_sym(
                x.algebra,
                ctx.q_inv_raw(
                    ctx.multiply_raw(
                        ctx.q_raw(_sym_to_raw(xk)), ctx.q_raw(_sym_to_raw(yl))
                    )
                ),
            )
            for d in block.degrees():
                part = block.project(d)
                out = out + part.scale(PolyZ.z(power=k + l - d))
    return out


def lift_hom(phi: LieHom, x: SymElement) -> SymElement:
    """Sym-algebra morphism induced by a Lie algebra homomorphism."""
    if x.algebra != phi.source:
        raise ValueError("element does not live over the hom's source algebra")
    report = check_hom(phi)
    if not report:
        raise ValueError(f"not a Lie algebra homomorphism: {report}")
    target = phi.target
    images = [SymElement.from_vector(target, col) for col in phi.matrix]
    out = SymElement.zero(target)
    for alpha, coeff in x.items():
        term = SymElement.unit(target, coeff)
        for i, a in enumerate(alpha):
            for _ in range(a):
                term = sym_mul(term, images[i])
        out = out + term
    return out


def star(x: SymElement, y: SymElement, method: str = "pbw") -> SymElement:
    """Uniform front end over the three product constructions."""
    if method == "pbw":
        return star_pbw(x, y)
    if method == "graded":
        return star_graded(x, y)
    if method == "bch":
        from .bch import star_bch_elements

        return star_bch_elements(x, y)
    raise ValueError(f"unknown star method {method!r}")


def clear_caches() -> None:
    """Drop all per-algebra contexts (mainly for benchmarks)."""
    _contexts.clear()
