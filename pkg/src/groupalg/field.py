"""Exact arithmetic in finite fields GF(p^m) with integer-encoded elements.

An element sum_i c_i x^i of GF(p^m), written in the polynomial basis modulo
a fixed monic irreducible modulus, is encoded as the integer sum_i c_i p^i
in [0, p^m).  Encodings 0 and 1 are the additive and multiplicative
identities, and the natural integer order on encodings is the deterministic
element order used everywhere (interpolation nodes, root searches,
reproducible random draws).

All arithmetic methods accept plain ints or numpy int64 arrays, broadcast
like numpy ufuncs, and are exact.  There is no floating point anywhere.

Extension fields (m > 1) are backed by discrete log/antilog tables, so their
order is capped at 2**20.  Prime fields have no such cap beyond int64
safety.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import SpecError

_EXT_ORDER_LIMIT = 1 << 20   # extension fields need full log/exp tables
_DIGIT_TABLE_LIMIT = 1 << 16  # precompute digit decompositions up to this order
_PRIME_TABLE_LIMIT = 1 << 16  # inverse tables for prime fields
_PRIME_LOG_LIMIT = 1 << 12    # log tables for prime fields (cumulative products)
_MAX_PRIME = (1 << 31) - 1    # keeps a*b exact in int64


def _ret(x):
    """Collapse 0-d arrays back to plain ints so scalars round-trip."""
    if isinstance(x, np.ndarray) and x.ndim == 0:
        return int(x)
    return x


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- small polynomial helpers over F_p (coefficient tuples, low-to-high) --

def _ptrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(tuple(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                        for i in range(n)))


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(tuple(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                        for i in range(n)))


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df])


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a, e, f, p):
    r = (1,)
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            r = _pmulmod(r, a, f, p)
        a = _pmulmod(a, a, f, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        # make b monic, then reduce a mod b
        lead = b[-1]
        if lead != 1:
            linv = pow(lead, p - 2, p)
            b = _ptrim(tuple((c * linv) % p for c in b))
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(coeffs, p) -> bool:
    # monic degree-m polynomial; standard power test:
    # x^(p^m) == x mod f, and x^(p^(m/l)) - x coprime to f for prime l | m
    m = len(coeffs) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = (0, 1)
    if _ppowmod(x, p ** m, coeffs, p) != x:
        return False
    for l in set(_prime_factors(m)):
        t = _ppowmod(x, p ** (m // l), coeffs, p)
        if len(_pgcd(_psub(t, x, p), coeffs, p)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple:
    """Smallest monic irreducible of degree m over F_p.

    "Smallest" compares the low-to-high coefficient list (c_0, ..., c_{m-1})
    lexicographically, constant term first.
    """
    if m == 1:
        return (0, 1)
    for code in range(p ** m):
        # decode with c_0 as the most significant position so ascending
        # code order is ascending lex order on (c_0, ..., c_{m-1})
        digits = []
        rest = code
        for _ in range(m):
            digits.append(rest % p)
            rest //= p
        coeffs = tuple(reversed(digits)) + (1,)
        if coeffs[0] != 0 and _is_irreducible(coeffs, p):
            return coeffs
    raise SpecError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


def _primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // l, p) != 1 for l in factors):
            return g
    raise SpecError(f"no primitive root mod {p}")  # unreachable for prime p


class Field:
    """GF(p^m) with a fixed monic irreducible modulus.

    Elements are integer encodings in [0, q).  Use make_field to construct
    (it validates and caches); arithmetic methods broadcast over numpy
    arrays and return plain ints for scalar inputs.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise SpecError(f"field characteristic must be prime, got {p!r}")
        if p > _MAX_PRIME:
            raise SpecError(f"prime {p} exceeds the supported limit {_MAX_PRIME}")
        if not isinstance(m, int) or m < 1:
            raise SpecError(f"extension degree must be a positive integer, got {m!r}")
        if m > 1 and p ** m > _EXT_ORDER_LIMIT:
            raise SpecError(
                f"extension field order {p}^{m} exceeds the table limit 2^20")
        if modulus is None:
            modulus = _default_modulus(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1:
                raise SpecError(
                    f"modulus must have degree {m} ({m + 1} coefficients), "
                    f"got {len(modulus)}")
            if modulus[-1] != 1:
                raise SpecError("modulus must be monic")
            if any(c < 0 or c >= p for c in modulus):
                raise SpecError(f"modulus coefficients must lie in [0, {p})")
            if not _is_irreducible(modulus, p):
                raise SpecError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._pow_vec = p ** np.arange(m, dtype=np.int64)
        self._exp = None
        self._log = None
        self._inv_table = None
        self._neg_table = None
        self._digit_table = None
        if m == 1:
            if p <= _PRIME_TABLE_LIMIT:
                self._inv_table = self._build_prime_inv()
            if 2 < p <= _PRIME_LOG_LIMIT:
                self._build_prime_logs()
        else:
            self._build_ext_tables()
            if self.q <= _DIGIT_TABLE_LIMIT:
                self._digit_table = self._digits_raw(np.arange(self.q, dtype=np.int64))

    # -- construction helpers --

    def _build_prime_inv(self):
        p = self.p
        inv = np.zeros(p, dtype=np.int64)
        if p > 1:
            inv[1] = 1
        for a in range(2, p):
            inv[a] = (-(p // a) * inv[p % a]) % p
        return inv

    def _build_prime_logs(self):
        p = self.p
        g = _primitive_root(p)
        exp = np.zeros(p - 1, dtype=np.int64)
        acc = 1
        for i in range(p - 1):
            exp[i] = acc
            acc = (acc * g) % p
        log = np.zeros(p, dtype=np.int64)  # log[0] is a masked sentinel
        log[exp] = np.arange(p - 1)
        self._exp, self._log = exp, log

    def _build_ext_tables(self):
        p, m, q, f = self.p, self.m, self.q, self.modulus
        # primitive element: smallest encoding whose order is q-1
        factors = _prime_factors(q - 1)
        gen = None
        for enc in range(2, q):
            cand = self._enc_to_poly(enc)
            if all(_ppowmod(cand, (q - 1) // l, f, p) != (1,) for l in factors):
                gen = cand
                break
        if gen is None:
            raise SpecError("no primitive element found")  # unreachable
        # antilog table in digit form, built in blocks: a block of successive
        # powers, then one matmul by the matrix of multiplication by gen^B
        block = min(1024, q - 1)
        digits = np.zeros((q - 1, m), dtype=np.int64)
        acc = (1,)
        for i in range(block):
            digits[i, :len(acc)] = acc
            acc = _pmulmod(acc, gen, f, p)
        if q - 1 > block:
            g_block = _ppowmod(gen, block, f, p)
            mul_mat = np.zeros((m, m), dtype=np.int64)  # row i = x^i * g_block mod f
            row = g_block
            for i in range(m):
                mul_mat[i, :len(row)] = row
                row = _pmulmod((0, 1), row, f, p) if i + 1 < m else row
        start = block
        while start < q - 1:
            step = min(block, q - 1 - start)
            prev = digits[start - block:start - block + step]
            digits[start:start + step] = (prev @ mul_mat) % p
            start += step
        exp = digits @ self._pow_vec
        log = np.zeros(q, dtype=np.int64)  # log[0] is a masked sentinel
        log[exp] = np.arange(q - 1)
        inv = np.zeros(q, dtype=np.int64)
        inv[exp] = exp[(q - 1 - np.arange(q - 1)) % (q - 1)]
        self._exp, self._log, self._inv_table = exp, log, inv
        if p > 2:
            d = self._digits_raw(np.arange(q, dtype=np.int64))
            self._neg_table = ((p - d) % p) @ self._pow_vec

    def _enc_to_poly(self, enc: int) -> tuple:
        out = []
        while enc:
            out.append(enc % self.p)
            enc //= self.p
        return tuple(out)

    def _digits_raw(self, a):
        # base-p digit planes, trailing axis of length m
        out = np.empty(a.shape + (self.m,), dtype=np.int64)
        rest = a
        for i in range(self.m):
            out[..., i] = rest % self.p
            rest = rest // self.p
        return out

    def _digits(self, a):
        if self._digit_table is not None:
            return self._digit_table[a]
        return self._digits_raw(a)

    # -- arithmetic (broadcasts over int64 arrays, exact) --

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return _ret((a + b) % self.p)
        if self.p == 2:
            return _ret(a ^ b)
        s = (self._digits(a) + self._digits(b)) % self.p
        return _ret(s @ self._pow_vec)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return _ret(a.copy())
        if self.m == 1:
            return _ret((self.p - a) % self.p)
        return _ret(self._neg_table[a])

    def sub(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return _ret((a - b) % self.p)
        if self.p == 2:
            return _ret(a ^ b)
        s = (self._digits(a) - self._digits(b)) % self.p
        return _ret(s @ self._pow_vec)

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return _ret((a * b) % self.p)
        t = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return _ret(np.where((a == 0) | (b == 0), 0, t))

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inversion of zero field element")
        if self._inv_table is not None:
            return _ret(self._inv_table[a])
        p = self.p  # large prime field, elementwise exact pow
        out = np.asarray(np.frompyfunc(lambda v: pow(int(v), p - 2, p), 1, 1)(a))
        return _ret(out.astype(np.int64))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return _ret(np.ones_like(a))
        if self.m > 1:
            t = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
            return _ret(np.where(a == 0, 0, t))
        p = self.p
        out = np.asarray(np.frompyfunc(lambda v: pow(int(v), e, p), 1, 1)(a))
        return _ret(out.astype(np.int64))

    def sum(self, a, axis=None):
        """Field sum along an axis (exact, unlike raw integer sums mod p only
        for prime fields; extension fields reduce digit-wise)."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            # (p-1) * a.size stays well inside int64 at desk scale
            return _ret(np.asarray(a.sum(axis=axis) % self.p))
        d = self._digits(a)
        if axis is None:
            s = d.reshape(-1, self.m).sum(axis=0) % self.p
        else:
            s = d.sum(axis=axis % a.ndim) % self.p
        return _ret(s @ self._pow_vec)

    def cummul(self, v):
        """Cumulative products of a 1-d vector (used by charpoly)."""
        v = np.asarray(v, dtype=np.int64)
        if self.p == 2 and self.m == 1:
            return np.cumprod(v)
        if self._log is not None and self._exp is not None:
            out = np.empty_like(v)
            zeros = np.nonzero(v == 0)[0]
            cut = int(zeros[0]) if zeros.size else v.size
            out[:cut] = self._exp[np.cumsum(self._log[v[:cut]]) % (self.q - 1)]
            out[cut:] = 0
            return out
        out = np.empty_like(v)
        acc = 1
        for i, x in enumerate(v.tolist()):
            acc = (acc * x) % self.p
            out[i] = acc
        return out

    # -- encoding helpers --

    def from_coeffs(self, coeffs) -> int:
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > self.m:
            raise SpecError(f"too many coefficients for degree-{self.m} field")
        if any(c < 0 or c >= self.p for c in coeffs):
            raise SpecError(f"coefficients must be integers in [0, {self.p})")
        return sum(c * self.p ** i for i, c in enumerate(coeffs))

    def to_coeffs(self, a: int) -> tuple:
        a = int(a)
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def format_value(self, a) -> str:
        if self.m == 1:
            return str(int(a))
        return ",".join(str(c) for c in self.to_coeffs(a))

    def parse_value(self, text: str) -> int:
        parts = text.split(",")
        try:
            coeffs = [int(t) for t in parts]
        except ValueError:
            raise SpecError(f"bad field element {text!r}") from None
        return self.from_coeffs(coeffs)

    def check_range(self, a) -> None:
        a = np.asarray(a)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise SpecError(f"element encoding out of range [0, {self.q})")

    # -- identity / ordering --

    @property
    def order(self) -> int:
        return self.q

    def elements(self, count=None):
        """First `count` elements (all, if omitted) in deterministic order."""
        stop = self.q if count is None else min(count, self.q)
        return np.arange(stop, dtype=np.int64)

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def _field_cached(p, m, modulus):
    return Field(p, m, modulus)


def make_field(p: int, m: int = 1, modulus=None) -> Field:
    """Construct (and cache) GF(p^m).

    Args:
        p: prime characteristic.
        m: extension degree, >= 1.
        modulus: optional monic irreducible coefficient list, low-to-high,
            of length m+1.  Omitted: the smallest monic irreducible in
            lexicographic coefficient order is chosen deterministically.

    Returns:
        A Field instance; repeated calls with equal arguments share it.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    if not isinstance(p, int) or not isinstance(m, int):
        raise SpecError("field parameters must be integers")
    return _field_cached(p, m, modulus)


class Embedding:
    """Field homomorphism GF(p^m) -> GF(p^(m*t)) as a lookup table.

    The image of the source generator is the smallest root (in the
    deterministic element order) of the source modulus in the destination.
    """

    def __init__(self, src: Field, dst: Field):
        if src.p != dst.p or dst.m % src.m != 0:
            raise SpecError(
                f"{dst!r} is not an extension of {src!r}")
        self.src = src
        self.dst = dst
        xs = np.arange(dst.q, dtype=np.int64)
        val = np.zeros(dst.q, dtype=np.int64)
        for c in reversed(src.modulus):
            val = dst.add(dst.mul(val, xs), c)
        roots = np.nonzero(val == 0)[0]
        if roots.size == 0:
            raise SpecError("modulus has no root in the destination field")
        self.root = int(roots[0])
        digits = src._digits(np.arange(src.q, dtype=np.int64))
        table = np.zeros(src.q, dtype=np.int64)
        rpow = 1
        for i in range(src.m):
            table = dst.add(table, dst.mul(digits[:, i], rpow))
            rpow = dst.mul(rpow, self.root)
        self._table = table

    def __call__(self, a):
        return _ret(self._table[np.asarray(a, dtype=np.int64)])


@functools.lru_cache(maxsize=None)
def embedding(src: Field, dst: Field) -> Embedding:
    return Embedding(src, dst)


def embed(src: Field, dst: Field, a):
    """Map an element (or array) of src into dst through the cached embedding."""
    return embedding(src, dst)(a)


def parse_field_spec(spec: str) -> Field:
    """Parse `gf:p`, `gf:p^m`, or `gf:p^m:c0,c1,...,cm` into a Field.

    Args:
        spec: field spec string; modulus coefficients are low-to-high.

    Returns:
        The corresponding (cached) Field.
    """
    parts = spec.split(":")
    if len(parts) < 2 or parts[0] != "gf":
        raise SpecError(f"bad field spec {spec!r} (expected gf:p or gf:p^m)")
    size = parts[1]
    try:
        if "^" in size:
            p_text, m_text = size.split("^", 1)
            p, m = int(p_text), int(m_text)
        else:
            p, m = int(size), 1
    except ValueError:
        raise SpecError(f"bad field size {size!r} in spec {spec!r}") from None
    modulus = None
    if len(parts) == 3:
        try:
            modulus = [int(t) for t in parts[2].split(",")]
        except ValueError:
            raise SpecError(f"bad modulus {parts[2]!r} in spec {spec!r}") from None
    elif len(parts) > 3:
        raise SpecError(f"bad field spec {spec!r} (too many ':' sections)")
    return make_field(p, m, modulus)


def format_field_spec(field: Field) -> str:
    if field.m == 1:
        return f"gf:{field.p}"
    mod = ",".join(str(c) for c in field.modulus)
    return f"gf:{field.p}^{field.m}:{mod}"
