"""Exact scalar arithmetic: Laurent polynomials in v and the cyclotomic field Q(q).

Two scalar worlds coexist.  Graded dimensions live in Z[v, v^-1] with rational
coefficients (class:`LaurentPoly`).  Module coefficients at a root of unity
live in the cyclotomic field Q(q) = Q[x]/(Phi_n(x)) (class:`CycScalar`),
where n is the order of q and l the order of q^2.  Everything is exact; no
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class LaurentPoly:
    """A Laurent polynomial in v with Fraction coefficients.

    Stored as a map exponent -> coefficient with no zero entries.  Instances
    are immutable and hashable; all arithmetic returns new objects.

    >>> v = LaurentPoly.gen()
    >>> print(v + v**-1)
    v + v^-1
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _as_fraction(c)
                if c != 0:
                    clean[int(e)] = c
        self._coeffs = dict(sorted(clean.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def gen(cls, exponent: int = 1) -> "LaurentPoly":
        """The monomial v^exponent."""
        return cls({exponent: 1})

    @classmethod
    def from_int(cls, n) -> "LaurentPoly":
        return cls({0: n})

    def coefficient(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, Fraction(0))

    def items(self):
        return self._coeffs.items()

    def support(self):
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: invert monomials explicitly")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k (a grading shift on Poincare polynomials)."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError on a nonzero remainder.

        A nonzero remainder signals an arithmetic bug upstream: every
        division this library performs is exact by construction.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        rem = dict(self._coeffs)
        out = {}
        d_top = max(other._coeffs)
        d_lead = other._coeffs[d_top]
        while rem:
            r_top = max(rem)
            q_exp = r_top - d_top
            q_coeff = rem[r_top] / d_lead
            out[q_exp] = out.get(q_exp, Fraction(0)) + q_coeff
            for e, c in other._coeffs.items():
                e2 = e + q_exp
                nc = rem.get(e2, Fraction(0)) - c * q_coeff
                if nc == 0:
                    rem.pop(e2, None)
                else:
                    rem[e2] = nc
        return LaurentPoly(out)

    def evaluate_at_one(self) -> Fraction:
        """Total dimension: the value at v = 1."""
        return sum(self._coeffs.values(), Fraction(0))

    def to_json(self):
        """Sorted list of [exponent, numerator, denominator] triples."""
        return [[e, c.numerator, c.denominator] for e, c in sorted(self._coeffs.items())]

    @classmethod
    def from_json(cls, triples) -> "LaurentPoly":
        return cls({e: Fraction(num, den) for e, num, den in triples})

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                mono = str(c)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if c == -1:
                    mono = "-" + mono
                elif c != 1:
                    mono = f"{c}*{mono}"
            parts.append(mono)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({self._coeffs!r})"


@lru_cache(maxsize=None)
def quantum_integer(a: int) -> LaurentPoly:
    """[a] = (v^a - v^-a)/(v - v^-1) = v^(a-1) + v^(a-3) + ... + v^(-a+1).

    Negative arguments follow [-a] = -[a].
    """
    if a < 0:
        return -quantum_integer(-a)
    return LaurentPoly({a - 1 - 2 * k: 1 for k in range(a)})


@lru_cache(maxsize=None)
def quantum_factorial(b: int) -> LaurentPoly:
    """[b]! = [1][2]...[b], with [0]! = 1."""
    if b < 0:
        raise ValueError("quantum factorial needs b >= 0")
    out = LaurentPoly.one()
    for k in range(1, b + 1):
        out = out * quantum_integer(k)
    return out


@lru_cache(maxsize=None)
def quantum_binomial(a: int, b: int) -> LaurentPoly:
    """qbin(a, b) = [a][a-1]...[a-b+1] / [b]!  (exact in Z[v, v^-1])."""
    if b < 0:
        raise ValueError("quantum binomial needs b >= 0")
    num = LaurentPoly.one()
    for k in range(b):
        num = num * quantum_integer(a - k)
    return num.divide_exact(quantum_factorial(b))


def _polymul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _polydiv_exact_int(num, den):
    # Exact division of integer polynomial lists (low degree first).
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial.

    Computed by the exact recursion Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _polymul(den, list(cyclotomic_polynomial(d)))
    return tuple(_polydiv_exact_int(num, den))


@dataclass(frozen=True)
class RootOfUnitySpec:
    """A root of unity q of order n, with l the order of q^2.

    l = n for odd n and l = n/2 for even n; the library requires l > 2.
    Users normally give l plus a parity flag; the default is the generic
    even case n = 2l.
    """

    n: int
    l: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("order n of q must be at least 3")
        expected_l = self.n if self.n % 2 == 1 else self.n // 2
        if self.l != expected_l:
            raise ValueError(f"l must be the order of q^2: expected {expected_l}, got {self.l}")
        if self.l <= 2:
            raise ValueError("only l > 2 is supported")

    @classmethod
    def from_l(cls, l: int, odd: bool = False) -> "RootOfUnitySpec":
        """Spec from l; odd=True picks n = l (requires l odd), else n = 2l."""
        if odd:
            if l % 2 == 0:
                raise ValueError("odd order n = l requires odd l")
            return cls(n=l, l=l)
        return cls(n=2 * l, l=l)

    @property
    def degree(self) -> int:
        return len(cyclotomic_polynomial(self.n)) - 1

    def to_json(self):
        return {"n": self.n, "l": self.l}


class CycScalar:
    """An element of Q(q) = Q[x]/(Phi_n(x)), coefficients of q^0..q^(deg-1).

    Field operations are exact; inverses come from the extended Euclidean
    algorithm in Q[x].
    """

    __slots__ = ("spec", "_coeffs")

    def __init__(self, spec: RootOfUnitySpec, coeffs):
        self.spec = spec
        deg = spec.degree
        cl = [Fraction(0)] * deg
        for i, c in enumerate(coeffs):
            if i >= deg:
                raise ValueError("coefficient list longer than field degree")
            cl[i] = _as_fraction(c)
        self._coeffs = tuple(cl)

    @classmethod
    def zero(cls, spec):
        return cls(spec, [])

    @classmethod
    def one(cls, spec):
        return cls(spec, [1])

    @classmethod
    def from_int(cls, spec, k):
        return cls(spec, [k])

    @classmethod
    def q_power(cls, spec, k: int) -> "CycScalar":
        """q^k, for any integer k (q has order n)."""
        e = k % spec.n
        raw = [Fraction(0)] * (e + 1)
        raw[e] = Fraction(1)
        return cls(spec, _reduce_mod_cyclotomic(raw, spec))

    @property
    def coeffs(self):
        return self._coeffs

    def is_zero(self):
        return all(c == 0 for c in self._coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if self.spec != other.spec:
            raise ValueError("mixing scalars from different cyclotomic fields")

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(self.spec, other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.spec == other.spec and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.spec, self._coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(self.spec, other)
        self._check(other)
        return CycScalar(self.spec, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.spec, [-a for a in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(self.spec, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.spec, [a * other for a in self._coeffs])
        self._check(other)
        raw = [Fraction(0)] * (2 * self.spec.degree)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                raw[i + j] += a * b
        return CycScalar(self.spec, _reduce_mod_cyclotomic(raw, self.spec))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("zero element of Q(q) has no inverse")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.spec.n)]
        inv = _poly_inverse_mod(list(self._coeffs), phi)
        return CycScalar(self.spec, _reduce_mod_cyclotomic(inv, self.spec))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = CycScalar.from_int(self.spec, other)
        return self * other.inverse()

    def to_json(self):
        return {
            "coeffs": [[c.numerator, c.denominator] for c in self._coeffs],
            "n": self.spec.n,
            "l": self.spec.l,
        }

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"CycScalar(n={self.spec.n}, {list(self._coeffs)!r})"


def _reduce_mod_cyclotomic(raw, spec):
    phi = cyclotomic_polynomial(spec.n)
    deg = len(phi) - 1
    raw = list(raw) + [Fraction(0)] * max(0, deg - len(raw))
    for i in range(len(raw) - 1, deg - 1, -1):
        c = raw[i]
        if c == 0:
            continue
        raw[i] = Fraction(0)
        for j in range(deg):
            raw[i - deg + j] -= c * phi[j]
    return raw[:deg]


def _poly_divmod(a, b):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for j, bc in enumerate(b):
            a[d + j] -= c * bc
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _poly_inverse_mod(a, modulus):
    # Extended Euclid in Q[x]: returns u with u*a = 1 mod modulus.
    r0, r1 = list(modulus), list(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while True:
        while r1 and r1[-1] == 0:
            r1.pop()
        if len(r1) == 1:
            c = r1[0]
            return [x / c for x in s1]
        q, r = _poly_divmod(r0, r1)
        s = _poly_sub(s0, _polymul_frac(q, s1))
        r0, r1 = r1, r
        s0, s1 = s1, s


def _polymul_frac(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return [a - b for a, b in zip(p, q)]


def specialize(p: LaurentPoly, spec: RootOfUnitySpec) -> CycScalar:
    """Evaluate a Laurent polynomial at v = q, reduced mod Phi_n."""
    out = CycScalar.zero(spec)
    for e, c in p.items():
        out = out + CycScalar.q_power(spec, e) * c
    return out
