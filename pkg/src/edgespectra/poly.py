"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntPoly:
    """Polynomial over the integers, coefficients stored ascending by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def linear_root(cls, r: int) -> IntPoly:
        """The monic factor ``x - r``."""
        return cls((-r, 1))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPoly:
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly.constant(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        return poly_pow(self, k)

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return poly_divrem(self, other)[0]

    def __mod__(self, other: IntPoly) -> IntPoly:
        return poly_divrem(self, other)[1]

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def compose(self, inner: IntPoly) -> IntPoly:
        """Return ``self(inner(x))`` by Horner's scheme."""
        out = IntPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPoly:
        return cls(int(c) for c in obj["coeffs"])


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return IntPoly()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return IntPoly(out)


def poly_pow(p: IntPoly, k: int) -> IntPoly:
    if k < 0:
        raise ValueError("negative exponent")
    result = IntPoly.constant(1)
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_eval(p: IntPoly, a: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def poly_divrem(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact long division by a monic divisor: ``p = q*quot + rem``."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not q.is_monic():
        raise ValueError(f"divisor must be monic, leading coefficient is {q.leading}")
    rem = list(p.coeffs)
    dq = q.degree
    if len(rem) <= dq:
        return IntPoly(), IntPoly(rem)
    quot = [0] * (len(rem) - dq)
    qc = q.coeffs
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c:
            shift = k - dq
            quot[shift] = c
            for j in range(dq + 1):
                rem[shift + j] -= c * qc[j]
    return IntPoly(quot), IntPoly(rem[:dq])


def root_multiplicity(p: IntPoly, r: int) -> int:
    """Largest ``k`` with ``(x - r)**k`` dividing ``p``."""
    if p.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    factor = IntPoly.linear_root(r)
    k = 0
    while True:
        quot, rem = poly_divrem(p, factor)
        if rem:
            return k
        p = quot
        k += 1


def root_bound(p: IntPoly) -> int:
    """Integer bound on the absolute value of every complex root of monic ``p``.

    Fujiwara's bound ``2 * max |c_{n-k}|^(1/k)``, with each k-th root rounded
    up to a power of two so it stays in integer arithmetic.
    """
    n = p.degree
    bound = 1
    for k in range(1, n + 1):
        c = abs(p.coeffs[n - k])
        if k == n:
            c = (c + 1) // 2
        if c:
            bound = max(bound, 1 << -(-c.bit_length() // k))
    return 2 * bound


def integer_spectrum(p: IntPoly) -> dict[int, int] | None:
    """Root -> multiplicity map when every root of the monic ``p`` is an integer.

    Returns None as soon as the integer roots fail to account for the full
    degree.
    """
    if p.is_zero() or not p.is_monic():
        return None
    roots: dict[int, int] = {}
    zero_mult = 0
    while p.degree > 0 and p.coeffs[0] == 0:
        p = IntPoly(p.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots[0] = zero_mult
    if p.degree > 0:
        bound = root_bound(p)
        for r in sorted(range(-bound, bound + 1), key=abs):
            if r == 0 or p.coeffs[0] % r:
                continue
            k = root_multiplicity(p, r)
            if k:
                roots[r] = k
                p = p // IntPoly.linear_root(r) ** k
                if p.degree == 0:
                    break
    if p.degree != 0:
        return None
    return dict(sorted(roots.items()))


def from_spectrum(spectrum: dict[int, int]) -> IntPoly:
    out = IntPoly.constant(1)
    for r, k in spectrum.items():
        out = out * IntPoly.linear_root(r) ** k
    return out


def format_poly(p: IntPoly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
