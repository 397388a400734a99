"""Exact arithmetic in prime-power Galois fields GF(p^m).

Elements are encoded as plain integers in [0, q), q = p^m: the base-p digits
of the integer are the polynomial-basis coefficients, least significant digit
first, so value = sum(c_i * p**i) represents c_0 + c_1 x + ... + c_{m-1} x^{m-1}.
Arithmetic is polynomial arithmetic modulo a monic irreducible polynomial of
degree m over GF(p).

Default moduli are Conway polynomials for the shipped extension fields, so the
integer encoding of every element is stable across runs and machines.  Prime
fields (m = 1) use the degenerate modulus x and need no table entry.  Moduli
supplied by the caller are verified irreducible by trial division against all
monic polynomials of degree <= m/2; q is capped at 2**20.

Scalar operations work on (and return) plain ints.  The v*-prefixed methods
are vectorized counterparts on numpy integer arrays; they are exact as well
(table- or digit-based, never floating point) and exist so that matrix kernels
can run at array speed.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NoBuiltinModulus,
    NotIrreducible,
    NotPrime,
)

MAX_FIELD_SIZE = 1 << 20

# Full multiplication tables are only built for small fields; beyond this the
# vectorized path falls back to discrete-log arrays.
_TABLE_CAP = 512
_EXPLOG_CAP = 1 << 18

# Conway polynomials, coefficient tuples (c0, ..., cm) with cm = 1, indexed by
# (p, m).  Covers every shipped extension field.
_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Factor q as p^m with p prime, or return None."""
    if q < 2:
        return None
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            return (p, m) if r == 1 else None
    return (q, 1)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num mod den over GF(p); den must be monic."""
    r = list(num)
    dd = len(den) - 1
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dd + 1):
                r[i - dd + j] = (r[i - dd + j] - c * den[j]) % p
    return _poly_trim([x % p for x in r[:dd]])


def _monic_polys(p: int, deg: int):
    """All monic polynomials of the given degree over GF(p), as coeff lists."""
    lows = [[]]
    for _ in range(deg):
        lows = [lo + [c] for lo in lows for c in range(p)]
    for lo in lows:
        yield lo + [1]


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False  # divisible by x
    poly = list(coeffs)
    for deg in range(1, m // 2 + 1):
        for g in _monic_polys(p, deg):
            if not _poly_rem(poly, g, p):
                return False
    return True


class FieldSpec:
    """Immutable description of GF(p^m) with concrete arithmetic."""

    __slots__ = ("p", "m", "q", "modulus", "_modulus_int", "_cache")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"p must be prime, got {p!r}")
        if not isinstance(m, int) or m < 1:
            raise NotIrreducible(f"extension degree must be a positive integer, got {m!r}")
        q = p ** m
        if q > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"p^m = {q} exceeds the cap {MAX_FIELD_SIZE}")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                try:
                    modulus = _BUILTIN_MODULI[(p, m)]
                except KeyError:
                    raise NoBuiltinModulus(
                        f"no built-in modulus for GF({p}^{m}); pass one explicitly"
                    ) from None
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise NotIrreducible(
                f"modulus must be monic of degree {m}, got coefficients {modulus}"
            )
        if any(not 0 <= c < p for c in modulus):
            raise NotIrreducible("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(modulus, p):
            raise NotIrreducible(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._modulus_int = sum(c * p ** i for i, c in enumerate(modulus))
        self._cache = {}

    # --- identity ---

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    # --- encoding helpers ---

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, length m, least significant first."""
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p) if self.p != 2 else (a >> 1, a & 1)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + c % self.p
        return v

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self):
        return range(self.q)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # --- scalar arithmetic (ints in [0, q)) ---

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p, out, pw = self.p, 0, 1
        for _ in range(self.m):
            out += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p, out, pw = self.p, 0, 1
        for _ in range(self.m):
            out += ((p - a % p) % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        if self.p == 2:
            # carry-less multiply, then reduce by the modulus bit pattern
            r = 0
            x, y = a, b
            while y:
                if y & 1:
                    r ^= x
                y >>= 1
                x <<= 1
            mod = self._modulus_int
            mbits = self.m + 1
            while r.bit_length() >= mbits:
                r ^= mod << (r.bit_length() - mbits)
            return r
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = self.coeffs(a)
        db = self.coeffs(b)
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    conv[i + j] += ai * bj
        f = self.modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = conv[i] % p
            if c:
                for j in range(m):
                    conv[i - m + j] = (conv[i - m + j] - c * f[j]) % p
        return self.from_coeffs(conv[:m])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, x = 1, a
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int, q0: int) -> int:
        """a -> a^q0, for elements of GF(q0^2); fixes the GF(q0) subfield."""
        if self.q != q0 * q0:
            raise FieldMismatch(f"{self!r} is not a quadratic extension of GF({q0})")
        return self.pow(a, q0)

    # --- lazy tables for vectorized work ---

    def _explog(self):
        tabs = self._cache.get("explog")
        if tabs is not None:
            return tabs
        if self.q > _EXPLOG_CAP:
            raise FieldTooLarge(
                f"discrete-log tables not built for q = {self.q} > {_EXPLOG_CAP}"
            )
        q = self.q
        n = q - 1
        factors = []
        r = n
        d = 2
        while d * d <= r:
            if r % d == 0:
                factors.append(d)
                while r % d == 0:
                    r //= d
            d += 1
        if r > 1:
            factors.append(r)
        gen = None
        for g in range(2, q):
            if all(self.pow(g, n // f) != 1 for f in factors):
                gen = g
                break
        if gen is None:  # q == 2
            gen = 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self.mul(v, gen)
        tabs = (exp, log)
        self._cache["explog"] = tabs
        return tabs

    def _mul_table(self):
        t = self._cache.get("mul_table")
        if t is None:
            exp, log = self._explog()
            q = self.q
            t = np.zeros((q, q), dtype=np.int64)
            if q > 2:
                li = log[1:]
                t[1:, 1:] = exp[(li[:, None] + li[None, :]) % (q - 1)]
            else:
                t[1, 1] = 1
            t.setflags(write=False)
            self._cache["mul_table"] = t
        return t

    def _frob_table(self, q0: int):
        t = self._cache.get(("frob", q0))
        if t is None:
            if self.q != q0 * q0:
                raise FieldMismatch(f"{self!r} is not a quadratic extension of GF({q0})")
            t = np.array([self.pow(a, q0) for a in range(self.q)], dtype=np.int64)
            t.setflags(write=False)
            self._cache[("frob", q0)] = t
        return t

    # --- vectorized arithmetic on numpy int arrays ---

    def vadd(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            out += ((a // pw + b // pw) % self.p) * pw
            pw *= self.p
        return out

    def vneg(self, a):
        if self.p == 2:
            return np.asarray(a)
        if self.m == 1:
            return (self.p - np.asarray(a)) % self.p
        out = np.zeros(np.shape(a), dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            out += ((self.p - (a // pw) % self.p) % self.p) * pw
            pw *= self.p
        return out

    def vsub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if self.m == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        if self.q <= _TABLE_CAP:
            return self._mul_table()[a, b]
        exp, log = self._explog()
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out[nz] = exp[(log[a[nz]] + log[b[nz]]) % (self.q - 1)]
        return out

    def vsum(self, arr, axis):
        """Field sum along an axis (exact reduction of vadd)."""
        if self.p == 2:
            return np.bitwise_xor.reduce(arr, axis=axis)
        if self.m == 1:
            return arr.sum(axis=axis) % self.p
        out = None
        pw = 1
        for _ in range(self.m):
            digit = ((arr // pw) % self.p).sum(axis=axis) % self.p
            out = digit * pw if out is None else out + digit * pw
            pw *= self.p
        return out

    def vfrobenius(self, a, q0: int):
        return self._frob_table(q0)[a]


class FieldElement:
    """A field value bound to its FieldSpec; thin wrapper over the int encoding."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        if not isinstance(value, int) or not 0 <= value < spec.q:
            raise ValueError(f"value {value!r} not in [0, {spec.q})")
        self.spec = spec
        self.value = value

    def _coerce(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldMismatch(f"{self.spec!r} vs {other.spec!r}")
        return other.value

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(
            self.spec, self.spec.mul(self.value, self.spec.inv(self._coerce(other)))
        )

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.spec == self.spec
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.spec, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}:{self.spec!r}"


def field_new(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Construct GF(p^m), validating p, m, and the modulus."""
    return FieldSpec(p, m, modulus)


def field_of_order(q: int, modulus=None) -> FieldSpec:
    """Construct GF(q) from the field size, factoring q = p^m."""
    pm = prime_power(q)
    if pm is None:
        raise NotPrime(f"{q} is not a prime power")
    return FieldSpec(pm[0], pm[1], modulus)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.value))


def frobenius_q(a: FieldElement, q0: int) -> FieldElement:
    """The conjugation x -> x^q0 on GF(q0^2)."""
    return FieldElement(a.spec, a.spec.frobenius(a.value, q0))
