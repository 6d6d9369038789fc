"""Polynomials in the deformation variable z over exact rationals.

Coefficients of all algebra elements live here: a ``PolyZ`` is a finitely
supported map from nonnegative z-exponents to ``fractions.Fraction``, kept in
canonical form (no stored zeros).  The compiled/pure kernels work on the plain
dict representation directly; ``PolyZ`` wraps such dicts for the public API.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
CoeffLike = Union[int, Fraction, "PolyZ"]

# ---------------------------------------------------------------------------
# plain-dict helpers (hot path; also used by the kernels)
# ---------------------------------------------------------------------------


def zp_add_into(acc: dict, other: Mapping[int, Fraction], scale: Fraction) -> None:
    """acc += scale * other, in place, dropping zeros."""
    if not scale:
        return
    for e, c in other.items():
        v = acc.get(e)
        if v is None:
            acc[e] = c * scale
        else:
            v = v + c * scale
            if v:
                acc[e] = v
            else:
                del acc[e]


def zp_mul(a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def zp_scale(a: Mapping[int, Fraction], scale: Fraction) -> dict:
    if not scale:
        return {}
    return {e: c * scale for e, c in a.items()}


def zp_shift(a: Mapping[int, Fraction], k: int) -> dict:
    """Multiply by z^k."""
    return {e + k: c for e, c in a.items()}


def zp_eval(a: Mapping[int, Fraction], z0: Fraction) -> Fraction:
    total = Fraction(0)
    for e, c in a.items():
        total += c * z0**e
    return total


# ---------------------------------------------------------------------------
# public wrapper
# ---------------------------------------------------------------------------


class PolyZ:
    """Immutable polynomial in z with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Scalar, Mapping[int, Scalar], None] = None):
        if coeffs is None:
            self._c: dict = {}
        elif isinstance(coeffs, (int, Fraction)):
            f = Fraction(coeffs)
            self._c = {0: f} if f else {}
        else:
            c = {}
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative z-exponent")
                f = Fraction(v)
                if f:
                    c[int(e)] = f
            self._c = c

    # construction helpers -------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "PolyZ":
        return cls(value)

    @classmethod
    def z(cls, power: int = 1, coeff: Scalar = 1) -> "PolyZ":
        return cls({power: coeff})

    @classmethod
    def _raw(cls, coeffs: dict) -> "PolyZ":
        p = cls.__new__(cls)
        p._c = coeffs
        return p

    @staticmethod
    def coerce(value: CoeffLike) -> "PolyZ":
        if isinstance(value, PolyZ):
            return value
        return PolyZ(value)

    # inspection ------------------------------------------------------------

    def items(self) -> Iterable[tuple[int, Fraction]]:
        return self._c.items()

    def as_dict(self) -> dict:
        return dict(self._c)

    def coeff(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"coefficient depends on z: {self}")
        return self._c.get(0, Fraction(0))

    @property
    def degree(self) -> int:
        """Degree in z; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def evaluate(self, z0: Scalar) -> Fraction:
        return zp_eval(self._c, Fraction(z0))

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: CoeffLike) -> "PolyZ":
        other = PolyZ.coerce(other)
        acc = dict(self._c)
        zp_add_into(acc, other._c, Fraction(1))
        return PolyZ._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "PolyZ":
        return PolyZ._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other: CoeffLike) -> "PolyZ":
        return self + (-PolyZ.coerce(other))

    def __rsub__(self, other: CoeffLike) -> "PolyZ":
        return PolyZ.coerce(other) + (-self)

    def __mul__(self, other: CoeffLike) -> "PolyZ":
        if isinstance(other, (int, Fraction)):
            return PolyZ._raw(zp_scale(self._c, Fraction(other)))
        return PolyZ._raw(zp_mul(self._c, PolyZ.coerce(other)._c))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyZ(other)
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self._c == other._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"PolyZ({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            c = self._c[e]
            if e == 0:
                parts.append(str(c))
            else:
                zs = "z" if e == 1 else f"z^{e}"
                if c == 1:
                    parts.append(zs)
                elif c == -1:
                    parts.append(f"-{zs}")
                else:
                    parts.append(f"({c})*{zs}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


ZERO = PolyZ()
ONE = PolyZ(1)
Z = PolyZ.z()
