"""
Exact arithmetic in the number field Q(i, sqrt2, sqrt3) and a complex float layer.

An ExactScalar stores 8 rational coordinates: a real part and an imaginary
part, each on the basis {1, sqrt2, sqrt3, sqrt6}. Every value is immutable.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple, Union

import config

logger = logging.getLogger(__name__)

BASIS_LABELS = ("1", "sqrt2", "sqrt3", "sqrt6")

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)

Quartic = Tuple[Fraction, Fraction, Fraction, Fraction]
RationalLike = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class CapacityError(OverflowError):
    """Raised when exact coefficients grow beyond the configured bit length."""


class ConsistencyError(AssertionError):
    """Raised when two independent evaluations of the same quantity disagree."""


def _check_capacity(values: Iterable[Fraction]) -> None:
    cap = config.EXACT_MAX_BITS
    for q in values:
        if q.numerator.bit_length() > cap or q.denominator.bit_length() > cap:
            raise CapacityError(
                f"Exact coefficient exceeds {cap} bits "
                f"(numerator {q.numerator.bit_length()}, denominator {q.denominator.bit_length()})"
            )


def _quartic_add(a: Quartic, b: Quartic) -> Quartic:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _quartic_sub(a: Quartic, b: Quartic) -> Quartic:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


def _quartic_mul(a: Quartic, b: Quartic) -> Quartic:
    """
    Multiply two elements of Q(sqrt2, sqrt3).

    Basis products reduce with sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3,
    sqrt3*sqrt6 = 3 sqrt2.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 + 2 * a1 * b1 + 3 * a2 * b2 + 6 * a3 * b3,
        a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    )


def _quartic_scale(a: Quartic, q: Fraction) -> Quartic:
    return (a[0] * q, a[1] * q, a[2] * q, a[3] * q)


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


class ExactScalar:
    """
    Element of Q(i, sqrt2, sqrt3).

    Coefficients are Fractions (always in lowest terms with positive
    denominator). Arithmetic with int or Fraction stays exact; arithmetic
    with float or complex promotes to a Python complex.
    """

    __slots__ = ("_re", "_im")

    def __init__(
        self,
        re: Iterable[RationalLike] = (0, 0, 0, 0),
        im: Iterable[RationalLike] = (0, 0, 0, 0),
    ):
        re_t = tuple(_as_fraction(v) for v in re)
        im_t = tuple(_as_fraction(v) for v in im)
        if len(re_t) != 4 or len(im_t) != 4:
            raise ValueError("ExactScalar needs 4 real and 4 imaginary coefficients")
        _check_capacity(re_t + im_t)
        self._re: Quartic = re_t  # type: ignore[assignment]
        self._im: Quartic = im_t  # type: ignore[assignment]

    @classmethod
    def _make(cls, re: Quartic, im: Quartic) -> "ExactScalar":
        """Build from Fractions without re-parsing (internal fast path)."""
        _check_capacity(re + im)
        obj = cls.__new__(cls)
        obj._re = re
        obj._im = im
        return obj

    # --- constructors ---

    @classmethod
    def from_rational(cls, value: RationalLike) -> "ExactScalar":
        q = _as_fraction(value)
        return cls._make((q, _ZERO, _ZERO, _ZERO), (_ZERO, _ZERO, _ZERO, _ZERO))

    @classmethod
    def coerce(cls, value: Any) -> "ExactScalar":
        """
        Convert an exact value to ExactScalar.

        Raises:
            TypeError: If value is a float, complex or other inexact type.
        """
        if isinstance(value, ExactScalar):
            return value
        return cls.from_rational(value)

    @classmethod
    def zero(cls) -> "ExactScalar":
        return cls.from_rational(0)

    @classmethod
    def one(cls) -> "ExactScalar":
        return cls.from_rational(1)

    # --- coordinates ---

    @property
    def re(self) -> Quartic:
        return self._re

    @property
    def im(self) -> Quartic:
        return self._im

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """The 8 rational coordinates, real part first."""
        return self._re + self._im

    def is_zero(self) -> bool:
        return not any(self._re) and not any(self._im)

    def is_rational(self) -> bool:
        return not any(self._re[1:]) and not any(self._im)

    def is_real(self) -> bool:
        return not any(self._im)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._re[0]

    # --- field operations ---

    def conj(self) -> "ExactScalar":
        """Complex conjugate: negates the 4 imaginary coefficients."""
        return ExactScalar._make(self._re, tuple(-v for v in self._im))  # type: ignore[arg-type]

    def galois_conjugate(self, sign_i: int, sign_sqrt2: int, sign_sqrt3: int) -> "ExactScalar":
        """
        Apply the field automorphism i -> sign_i*i, sqrt2 -> sign_sqrt2*sqrt2,
        sqrt3 -> sign_sqrt3*sqrt3.
        """
        signs = (1, sign_sqrt2, sign_sqrt3, sign_sqrt2 * sign_sqrt3)
        re = tuple(s * v for s, v in zip(signs, self._re))
        im = tuple(sign_i * s * v for s, v in zip(signs, self._im))
        return ExactScalar._make(re, im)  # type: ignore[arg-type]

    def norm(self) -> Fraction:
        """Field norm: the product of all 8 Galois conjugates (a rational)."""
        return (self * self._conjugate_cofactor()).rational_value()

    def _conjugate_cofactor(self) -> "ExactScalar":
        """Product of the 7 non-trivial Galois conjugates."""
        product = ExactScalar.one()
        for sign_i in (1, -1):
            for sign_2 in (1, -1):
                for sign_3 in (1, -1):
                    if sign_i == 1 and sign_2 == 1 and sign_3 == 1:
                        continue
                    product = product * self.galois_conjugate(sign_i, sign_2, sign_3)
        return product

    def inv(self) -> "ExactScalar":
        """
        Multiplicative inverse via the Galois-conjugate product.

        Raises:
            ZeroDivisionError: If self is zero.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2, sqrt3)")
        cofactor = self._conjugate_cofactor()
        norm = self * cofactor
        if not norm.is_rational():
            # The conjugate product is fixed by every automorphism
            raise ArithmeticError(f"Galois norm of {self!r} is not rational: {norm!r}")
        q = 1 / norm.rational_value()
        return ExactScalar._make(_quartic_scale(cofactor._re, q), _quartic_scale(cofactor._im, q))

    def abs_sq(self) -> "ExactScalar":
        """|x|^2 = x * conj(x), a real element of Q(sqrt2, sqrt3)."""
        return self * self.conj()

    # --- operators ---

    def _other(self, other: Any) -> Optional["ExactScalar"]:
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExactScalar.from_rational(other)
        return None

    def __add__(self, other: Any):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return ExactScalar._make(_quartic_add(self._re, o._re), _quartic_add(self._im, o._im))

    __radd__ = __add__

    def __sub__(self, other: Any):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return ExactScalar._make(_quartic_sub(self._re, o._re), _quartic_sub(self._im, o._im))

    def __rsub__(self, other: Any):
        return (-self) + other

    def __neg__(self) -> "ExactScalar":
        return ExactScalar._make(
            tuple(-v for v in self._re), tuple(-v for v in self._im)  # type: ignore[arg-type]
        )

    def __pos__(self) -> "ExactScalar":
        return self

    def __mul__(self, other: Any):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        # (X + iY)(Z + iW) = (XZ - YW) + i(XW + YZ)
        xz = _quartic_mul(self._re, o._re)
        yw = _quartic_mul(self._im, o._im)
        xw = _quartic_mul(self._re, o._im)
        yz = _quartic_mul(self._im, o._re)
        return ExactScalar._make(_quartic_sub(xz, yw), _quartic_add(xw, yz))

    __rmul__ = __mul__

    def __truediv__(self, other: Any):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) / other
            return NotImplemented
        if o.is_rational():
            q = o.rational_value()
            if q == 0:
                raise ZeroDivisionError("division by zero in Q(i, sqrt2, sqrt3)")
            return ExactScalar._make(_quartic_scale(self._re, 1 / q), _quartic_scale(self._im, 1 / q))
        return self * o.inv()

    def __rtruediv__(self, other: Any):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other / complex(self)
            return NotImplemented
        return o * self.inv()

    def __pow__(self, exponent: int) -> "ExactScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = ExactScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._re[0])
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        value = self.to_float()
        return complex(value.re, value.im)

    # --- conversion ---

    def to_float(self, tol: Optional[float] = None) -> "ComplexFloat":
        """
        Evaluate in double precision.

        Args:
            tol: Comparison tolerance attached to the result (default config.DEFAULT_TOL)
        """
        return ComplexFloat(_quartic_to_float(self._re), _quartic_to_float(self._im),
                            config.DEFAULT_TOL if tol is None else tol)

    def to_json(self) -> Dict[str, Any]:
        """Serialize as {"re": [4 "p/q"], "im": [4 "p/q"]} in basis order 1, sqrt2, sqrt3, sqrt6."""
        return {
            "re": [f"{q.numerator}/{q.denominator}" for q in self._re],
            "im": [f"{q.numerator}/{q.denominator}" for q in self._im],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "ExactScalar":
        """
        Parse the JSON form produced by to_json.

        Raises:
            ValueError: If the object does not have 4 rational strings per part.
        """
        try:
            re = [Fraction(str(v)) for v in data["re"]]
            im = [Fraction(str(v)) for v in data.get("im", ["0"] * 4)]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Malformed exact scalar {data!r}: {e}") from e
        return cls(re, im)

    def __repr__(self) -> str:
        return f"ExactScalar({self})"

    def __str__(self) -> str:
        terms = []
        for part, unit in ((self._re, ""), (self._im, "i")):
            for q, label in zip(part, BASIS_LABELS):
                if q == 0:
                    continue
                factor = "" if label == "1" else label
                if unit and factor:
                    factor = f"{factor}*{unit}"
                elif unit:
                    factor = unit
                if factor:
                    terms.append(f"({q})*{factor}" if q != 1 else factor)
                else:
                    terms.append(str(q))
        return " + ".join(terms) if terms else "0"


def _quartic_to_float(a: Quartic) -> float:
    return math.fsum((float(a[0]), float(a[1]) * _SQRT2, float(a[2]) * _SQRT3, float(a[3]) * _SQRT6))


@dataclass(frozen=True)
class ComplexFloat:
    """Double-precision complex value with an attached comparison tolerance."""
    re: float
    im: float = 0.0
    tol: float = config.DEFAULT_TOL

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"ComplexFloat must be finite, got {self.re} + {self.im}i")

    @classmethod
    def from_complex(cls, value: complex, tol: Optional[float] = None) -> "ComplexFloat":
        value = complex(value)
        return cls(value.real, value.imag, config.DEFAULT_TOL if tol is None else tol)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def approx_eq(self, other: Any, tol: Optional[float] = None) -> bool:
        """|x - y| <= tol * max(1, |x|, |y|)."""
        return approx_equal(complex(self), complex(other), self.tol if tol is None else tol)


def approx_equal(x: complex, y: complex, tol: Optional[float] = None) -> bool:
    """
    Relative approximate equality used across the package.

    Args:
        x, y: Values to compare
        tol: Relative tolerance (default config.DEFAULT_TOL)

    Returns:
        True if |x - y| <= tol * max(1, |x|, |y|).
    """
    tol = config.DEFAULT_TOL if tol is None else tol
    x = complex(x)
    y = complex(y)
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def exact_arith(op: str, x: ExactScalar, y: Optional[ExactScalar] = None) -> ExactScalar:
    """
    Dispatch one exact field operation by name.

    Args:
        op: One of "add", "sub", "mul", "conj", "neg", "inv"
        x: First operand
        y: Second operand for the binary operations

    Returns:
        The exact result.

    Raises:
        ValueError: For an unknown op or a missing second operand.
        ZeroDivisionError: For inv(0).
    """
    unary = {"conj": ExactScalar.conj, "neg": ExactScalar.__neg__, "inv": ExactScalar.inv}
    binary = {"add": ExactScalar.__add__, "sub": ExactScalar.__sub__, "mul": ExactScalar.__mul__}
    if op in unary:
        return unary[op](x)
    if op in binary:
        if y is None:
            raise ValueError(f"exact_arith('{op}') needs two operands")
        return binary[op](x, ExactScalar.coerce(y))
    raise ValueError(f"Unknown exact operation: {op}")


def to_float(x: ExactScalar, tol: Optional[float] = None) -> ComplexFloat:
    """Evaluate an exact scalar in double precision."""
    return x.to_float(tol)


def to_complex(value: Any) -> complex:
    """Convert an exact or float scalar to a Python complex."""
    if isinstance(value, ExactScalar):
        return complex(value)
    if isinstance(value, ComplexFloat):
        return complex(value)
    return complex(value)


def is_exact(value: Any) -> bool:
    """True for values the exact pipeline can carry (ExactScalar, int, Fraction)."""
    return isinstance(value, (ExactScalar, Fraction)) or (
        isinstance(value, int) and not isinstance(value, bool)
    )


# --- named constants ---

I = ExactScalar(im=(1, 0, 0, 0))
SQRT2 = ExactScalar(re=(0, 1, 0, 0))
SQRT3 = ExactScalar(re=(0, 0, 1, 0))
SQRT6 = ExactScalar(re=(0, 0, 0, 1))

# Primitive cube root of unity j = (-1 + i sqrt3) / 2
J = ExactScalar(re=(Fraction(-1, 2), 0, 0, 0), im=(0, 0, Fraction(1, 2), 0))

# cos and sin of pi*m/6 as (rational part, sqrt3 coefficient)
_COS_TWELFTHS = (
    (1, 0), (0, Fraction(1, 2)), (Fraction(1, 2), 0), (0, 0),
    (Fraction(-1, 2), 0), (0, Fraction(-1, 2)), (-1, 0), (0, Fraction(-1, 2)),
    (Fraction(-1, 2), 0), (0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2)),
)
_SIN_TWELFTHS = tuple(_COS_TWELFTHS[(m - 3) % 12] for m in range(12))


def root_of_unity_12(m: int) -> ExactScalar:
    """
    Exact value of exp(2*pi*i*m/12).

    Every root of unity of order 1, 2, 3, 4, 6 or 12 lies in Q(i, sqrt3).
    """
    m %= 12
    c_rat, c_sqrt3 = _COS_TWELFTHS[m]
    s_rat, s_sqrt3 = _SIN_TWELFTHS[m]
    return ExactScalar(re=(c_rat, 0, c_sqrt3, 0), im=(s_rat, 0, s_sqrt3, 0))
