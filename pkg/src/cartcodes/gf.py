"""Exact arithmetic in finite fields GF(p^e).

Elements are represented by their canonical integer encoding in [0, q):
the integer sum(c_i * p**i) of the polynomial-basis coefficient vector
(c_0, ..., c_{e-1}).  For prime fields (e = 1) this is just the residue
mod p.  The encoding is a bijection onto [0, q), which gives every field
a canonical total order on elements with 0 first.

Extension-field multiplication reduces coefficient vectors modulo a monic
irreducible polynomial of degree e.  When no modulus is supplied, the
lexicographically smallest monic irreducible (by low-to-high coefficient
encoding) is selected, so fields are identical across runs.
"""

from __future__ import annotations

from typing import Iterator, Sequence

#: Largest field cardinality accepted by the constructor.  Several
#: operations in this package enumerate field elements exhaustively, so
#: unbounded q would turn small mistakes into runaway computations.
DESK_SCALE_CAP = 2**20

#: Fields with q below this bound precompute full multiplication and
#: inverse tables; larger fields fall back to direct computation.
_TABLE_MAX_Q = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mod(num: list[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num by monic den, coefficients low-first over GF(p)."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    del num[dd:]
    return num


def _poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = _int_digits(enc, p, d) + [1]
            if not any(_poly_mod(list(coeffs), div, p)):
                return False
    return True


def _int_digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e, by coefficient encoding."""
    if e == 1:
        return (0, 1)
    for enc in range(p**e):
        cand = _int_digits(enc, p, e) + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class GF:
    """A finite field GF(p^e) together with its element arithmetic.

    Parameters
    ----------
    p : prime characteristic.
    e : extension degree, at least 1.
    modulus : optional monic irreducible polynomial of degree e over
        GF(p), as a low-first coefficient list.  Chosen deterministically
        when omitted.
    cap : reject fields with more than this many elements.

    Elements are plain ints in [0, q).  All methods are pure; instances
    are immutable after construction and safe to share across threads.
    """

    def __init__(
        self,
        p: int,
        e: int = 1,
        modulus: Sequence[int] | None = None,
        *,
        cap: int = DESK_SCALE_CAP,
    ) -> None:
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > cap:
            raise ValueError(f"field size {p}^{e} = {q} exceeds the cap {cap}")
        if modulus is None:
            modulus = _default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1:
                raise ValueError(
                    f"modulus must have degree {e}, got degree {len(modulus) - 1}"
                )
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if e > 1 and not _poly_is_irreducible(modulus, p):
                raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = q
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        if e > 1 and q <= _TABLE_MAX_Q:
            self._build_tables()

    # -- construction helpers ------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            row = mul[a]
            for b in range(a, q):
                row[b] = mul[b][a] = self._mul_direct(a, b)
        inv = [0] * q
        for a in range(1, q):
            if inv[a]:
                continue
            b = self._pow_direct(a, q - 2)
            inv[a] = b
            inv[b] = a
        self._mul_table = mul
        self._inv_table = inv

    # -- encoding ------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Polynomial-basis coefficient vector of x, low degree first."""
        self._check(x)
        return tuple(_int_digits(x, self.p, self.e))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        """Encode a coefficient vector (length e, entries mod p)."""
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + (int(c) % self.p)
        return x

    def _check(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element encoding of GF({self.q})")

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        x, out, shift = 0, 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * shift
            shift *= p
        return out + x

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out, shift = 0, 1
        while a:
            a, r = divmod(a, p)
            out += ((-r) % p) * shift
            shift *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_direct(a, b)

    def _mul_direct(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da = _int_digits(a, p, e)
        db = _int_digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] += ca * cb
        rem = _poly_mod(prod, self.modulus, p)
        x = 0
        for c in reversed(rem):
            x = x * p + c
        return x

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_direct(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        """a**n; negative n inverts first (a must be nonzero then)."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.e == 1:
            return pow(a, n, self.p)
        return self._pow_direct(a, n)

    def _pow_direct(self, a: int, n: int) -> int:
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    # -- iteration and identity ----------------------------------------

    def elements(self) -> list[int]:
        """All q elements in canonical encoding order, zero first."""
        return list(range(self.q))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.q))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}


def make_field(
    p: int, e: int = 1, modulus: Sequence[int] | None = None, *, cap: int = DESK_SCALE_CAP
) -> GF:
    """Construct GF(p^e); thin functional alias for the GF constructor."""
    return GF(p, e, modulus, cap=cap)
