"""Exact arithmetic in GF(p**m) and dense linear algebra over it.

Field elements are plain ints in ``range(q)``.  For a prime field the int is
the residue itself; for GF(p**m) with m > 1 the int packs the coefficient
vector (c0, ..., c_{m-1}) of the residue polynomial in base p, c0 being the
constant term.  Keeping elements as ints makes exhaustive sweeps over F_q^n
cheap and makes equality/hashing trivial.

Polynomials over a field are tuples of ints, constant term first, with
trailing zeros trimmed (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence as Seq

from .errors import (
    BadModulusError,
    BadParamsError,
    FieldMismatchError,
    NotPrimeError,
)

MAX_CHARACTERISTIC = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (intended for n < 2**16)."""
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


def _poly_rem_modp(dividend: list[int], divisor: Seq[int], p: int) -> list[int]:
    """Remainder of dividend by monic divisor, coefficients mod p, in place."""
    rem = dividend
    d = len(divisor) - 1
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            for j in range(d + 1):
                rem[i - d + j] = (rem[i - d + j] - c * divisor[j]) % p
    del rem[d:]
    return rem


def _is_irreducible(modulus: Seq[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2 over GF(p)."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_rem_modp(list(modulus), divisor, p)):
                return False
    return True


class Field:
    """Finite field GF(p**m); construct through :func:`GF`.

    Subclasses provide the arithmetic; this base carries the shared shape
    (sizes, canonical-form checks, coefficient packing) and value equality.
    """

    __slots__ = ("p", "m", "q", "modulus")

    p: int
    m: int
    q: int
    modulus: tuple[int, ...] | None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus or ())})"

    def validate(self, x: int) -> int:
        """Return x unchanged if it is a canonical element, else raise."""
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.q:
            raise BadParamsError(f"{x!r} is not an element of {self}")
        return x

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        """The nonzero elements, in canonical ascending order."""
        return range(1, self.q)

    def coeffs_of(self, x: int) -> tuple[int, ...]:
        """Base-p digit vector of x, length m, constant term first."""
        self.validate(x)
        digits = []
        for _ in range(self.m):
            x, r = divmod(x, self.p)
            digits.append(r)
        return tuple(digits)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        digits = list(coeffs)
        if len(digits) != self.m:
            raise BadParamsError(f"expected {self.m} residues, got {len(digits)}")
        x = 0
        for c in reversed(digits):
            if not isinstance(c, int) or not 0 <= c < self.p:
                raise BadParamsError(f"residue {c!r} out of range for GF({self.p})")
            x = x * self.p + c
        return x

    # Arithmetic interface; a and b must already be canonical.
    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; negative e inverts first."""
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


class PrimeField(Field):
    """GF(p): residue arithmetic mod p."""

    __slots__ = ()

    def __init__(self, p: int):
        self.p = p
        self.m = 1
        self.q = p
        self.modulus = None

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if a == 0 and e < 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return pow(a, e, self.p)


class ExtensionField(Field):
    """GF(p**m), m > 1, residues mod a caller-supplied irreducible modulus."""

    __slots__ = ()

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.m):
            out += (a + b) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.m):
            out += (a - b) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = self.coeffs_of(a)
        db = self.coeffs_of(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        _poly_rem_modp(prod, self.modulus, p)
        x = 0
        for c in reversed(prod + [0] * (m - len(prod))):
            x = x * p + c
        return x

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        # q is small enough that the Fermat route beats extended Euclid here.
        return self.pow(a, self.q - 2)


def GF(p: int, m: int = 1, modulus: Seq[int] | None = None) -> Field:
    """Construct GF(p**m), validating p, m, and the modulus.

    modulus is the coefficient list (constant term first) of a monic
    irreducible polynomial of degree m over GF(p).  It is required exactly
    when m > 1; prime fields take none.
    """
    if not isinstance(p, int) or p < 2:
        raise NotPrimeError(f"characteristic must be an integer >= 2, got {p!r}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p >= MAX_CHARACTERISTIC:
        raise BadParamsError(f"characteristic {p} exceeds supported bound 2**16")
    if not isinstance(m, int) or m < 1:
        raise BadParamsError(f"extension degree must be an integer >= 1, got {m!r}")
    if m == 1:
        if modulus is not None:
            raise BadModulusError("prime fields take no modulus")
        return PrimeField(p)
    if modulus is None:
        raise BadModulusError(f"GF({p}^{m}) needs an explicit irreducible modulus")
    mod = tuple(int(c) for c in modulus)
    if len(mod) != m + 1:
        raise BadModulusError(f"modulus must have degree {m}, got degree {len(mod) - 1}")
    if any(not 0 <= c < p for c in mod):
        raise BadModulusError(f"modulus coefficients must lie in [0, {p})")
    if mod[-1] != 1:
        raise BadModulusError("modulus must be monic")
    if not _is_irreducible(mod, p):
        raise BadModulusError(f"modulus {list(mod)} is reducible over GF({p})")
    return ExtensionField(p, m, mod)


def same_field(a: Field, b: Field) -> Field:
    if a != b:
        raise FieldMismatchError(f"{a} vs {b}")
    return a


# ---------------------------------------------------------------------------
# Polynomials as int tuples, constant term first.


def poly_trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(coeffs: Seq[int]) -> int:
    """Degree of a trimmed polynomial; the zero polynomial gets -1."""
    return len(poly_trim(coeffs)) - 1


def poly_eval(field: Field, coeffs: Seq[int], x: int) -> int:
    """Horner evaluation of sum(coeffs[i] * x**i)."""
    field.validate(x)
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), field.validate(c))
    return acc


def poly_add(field: Field, a: Seq[int], b: Seq[int]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return poly_trim(out)


def poly_scale(field: Field, a: Seq[int], s: int) -> tuple[int, ...]:
    return poly_trim(field.mul(c, s) for c in a)


def poly_mul(field: Field, a: Seq[int], b: Seq[int], trunc: int | None = None) -> tuple[int, ...]:
    """Product of two coefficient tuples, optionally truncated below degree trunc."""
    if not a or not b:
        return ()
    size = len(a) + len(b) - 1
    if trunc is not None:
        size = min(size, trunc)
    out = [0] * size
    for i, ca in enumerate(a):
        if ca == 0 or i >= size:
            continue
        for j, cb in enumerate(b):
            if i + j >= size:
                break
            if cb:
                out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return poly_trim(out)


# ---------------------------------------------------------------------------


class Matrix:
    """Dense matrix over a Field, rows of canonical ints."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]]):
        data = [list(r) for r in rows]
        if not data:
            raise BadParamsError("matrix needs at least one row")
        width = len(data[0])
        for r in data:
            if len(r) != width:
                raise BadParamsError("ragged rows")
            for x in r:
                field.validate(x)
        self.field = field
        self.rows = data
        self.nrows = len(data)
        self.ncols = width

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:  # pragma: no cover - matrices are not dict keys here
        return hash((self.field, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.rows})"

    def drop_last_row(self) -> "Matrix":
        if self.nrows < 2:
            raise BadParamsError("cannot drop the only row")
        return Matrix(self.field, self.rows[:-1])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise BadParamsError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        out = []
        for row in self.rows:
            new = []
            for j in range(other.ncols):
                acc = 0
                for k, a in enumerate(row):
                    if a:
                        acc = f.add(acc, f.mul(a, other.rows[k][j]))
                new.append(acc)
            out.append(new)
        return Matrix(f, out)

    def rank(self) -> int:
        """Rank by exact Gaussian elimination, first nonzero pivot per column."""
        f = self.field
        work = [row[:] for row in self.rows]
        rank = 0
        for col in range(self.ncols):
            pivot = None
            for i in range(rank, self.nrows):
                if work[i][col]:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            inv = f.inv(work[rank][col])
            work[rank] = [f.mul(inv, x) for x in work[rank]]
            prow = work[rank]
            for i in range(rank + 1, self.nrows):
                c = work[i][col]
                if c:
                    work[i] = [f.sub(x, f.mul(c, px)) for x, px in zip(work[i], prow)]
            rank += 1
            if rank == self.nrows:
                break
        return rank


def mat_rank(matrix: Matrix) -> int:
    return matrix.rank()
