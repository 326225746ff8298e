"""Linear-feedback shift registers and the linear-complexity metric.

A register of order l over GF(q) is given by taps (c0, ..., c_{l-1}) and an
initial state of l elements; it extends any prefix by

    a[i + l] = c0*a[i] + c1*a[i+1] + ... + c_{l-1}*a[i+l-1].

The linear complexity L(s) of a finite sequence s is the smallest order of a
register reproducing it (0 for the zero sequence), computed here by
Berlekamp-Massey and cross-checkable against an exhaustive register search.
The distance between equal-length sequences is L(a - b).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BadParamsError,
    DegreeExceedsOrderError,
    FieldMismatchError,
    LengthMismatchError,
    OracleTooLargeError,
)
from .field import Field, poly_mul, poly_trim, same_field

DEFAULT_ORACLE_GUARD = 1 << 20


@dataclass(frozen=True)
class Sequence:
    """A finite ordered list of field elements."""

    field: Field
    elems: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        for x in self.elems:
            self.field.validate(x)

    @property
    def n(self) -> int:
        return len(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def is_zero(self) -> bool:
        return not any(self.elems)

    def first_nonzero(self) -> int | None:
        for i, x in enumerate(self.elems):
            if x:
                return i
        return None

    def _aligned(self, other: "Sequence") -> None:
        same_field(self.field, other.field)
        if len(self) != len(other):
            raise LengthMismatchError(f"lengths {len(self)} vs {len(other)}")

    def __add__(self, other: "Sequence") -> "Sequence":
        self._aligned(other)
        add = self.field.add
        return Sequence(self.field, tuple(add(a, b) for a, b in zip(self.elems, other.elems)))

    def __sub__(self, other: "Sequence") -> "Sequence":
        self._aligned(other)
        sub = self.field.sub
        return Sequence(self.field, tuple(sub(a, b) for a, b in zip(self.elems, other.elems)))

    def __neg__(self) -> "Sequence":
        neg = self.field.neg
        return Sequence(self.field, tuple(neg(a) for a in self.elems))


@dataclass(frozen=True)
class LfsrSpec:
    """A feedback register: taps c0..c_{l-1} plus an initial state of l elements."""

    field: Field
    coeffs: tuple[int, ...]
    init: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "init", tuple(self.init))
        if len(self.coeffs) != len(self.init):
            raise LengthMismatchError(
                f"{len(self.coeffs)} taps but {len(self.init)} initial elements"
            )
        for x in self.coeffs + self.init:
            self.field.validate(x)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def feedback_poly(self) -> tuple[int, ...]:
        """z**l - sum(c_j z**j) as a coefficient tuple, constant term first."""
        neg = self.field.neg
        return tuple(neg(c) for c in self.coeffs) + (1,)


@dataclass(frozen=True)
class BmResult:
    """Berlekamp-Massey output.

    connection has constant term 1 and degree <= complexity; feedback is its
    reversal within a window of length complexity + 1, hence monic of degree
    exactly complexity.  taps are the register coefficients matching feedback,
    so an LfsrSpec(field, taps, s[:complexity]) regenerates the input.
    """

    field: Field
    complexity: int
    connection: tuple[int, ...]
    feedback: tuple[int, ...]

    @property
    def taps(self) -> tuple[int, ...]:
        neg = self.field.neg
        return tuple(neg(c) for c in self.feedback[: self.complexity])

    def register(self, s: Sequence) -> LfsrSpec:
        """The minimal register seeded with the first L terms of s."""
        return LfsrSpec(self.field, self.taps, s.elems[: self.complexity])


def lfsr_generate(spec: LfsrSpec, n: int) -> Sequence:
    """Run the register for n steps; order 0 yields the all-zero sequence."""
    if n < 0:
        raise BadParamsError(f"length must be >= 0, got {n}")
    l = spec.order
    out = list(spec.init[:n]) + [0] * max(0, n - l)
    f = spec.field
    add, mul = f.add, f.mul
    cs = spec.coeffs
    for i in range(n - l):
        acc = 0
        for j, c in enumerate(cs):
            if c:
                acc = add(acc, mul(c, out[i + j]))
        out[i + l] = acc
    return Sequence(spec.field, tuple(out))


def reciprocal_poly(coeffs: Iterable[int], order: int) -> tuple[int, ...]:
    """Reverse a coefficient tuple within a window of length order + 1.

    This realizes z**order * f(1/z) for deg(f) <= order.
    """
    cs = poly_trim(coeffs)
    if order < 0:
        raise BadParamsError(f"window order must be >= 0, got {order}")
    if len(cs) - 1 > order:
        raise DegreeExceedsOrderError(f"degree {len(cs) - 1} exceeds window {order}")
    padded = list(cs) + [0] * (order + 1 - len(cs))
    return poly_trim(reversed(padded))


def _bm_core(field: Field, s: tuple[int, ...]) -> tuple[int, list[int]]:
    """Berlekamp-Massey over an arbitrary field; returns (L, connection coeffs)."""
    n = len(s)
    add, mul, sub, inv = field.add, field.mul, field.sub, field.inv
    conn = [1] + [0] * n
    prev = [1] + [0] * n
    big_l = 0
    last_change = -1
    last_diff = 1
    for i in range(n):
        d = s[i]
        for j in range(1, big_l + 1):
            cj = conn[j]
            if cj:
                d = add(d, mul(cj, s[i - j]))
        if d == 0:
            continue
        coef = mul(d, inv(last_diff))
        shift = i - last_change
        if 2 * big_l <= i:
            snapshot = conn[:]
            for k in range(n + 1 - shift):
                pk = prev[k]
                if pk:
                    conn[k + shift] = sub(conn[k + shift], mul(coef, pk))
            big_l = i + 1 - big_l
            last_change = i
            prev = snapshot
            last_diff = d
        else:
            for k in range(n + 1 - shift):
                pk = prev[k]
                if pk:
                    conn[k + shift] = sub(conn[k + shift], mul(coef, pk))
    return big_l, conn[: big_l + 1]


def _lc(field: Field, s: tuple[int, ...]) -> int:
    """Linear complexity of a raw element tuple (hot path for sweeps)."""
    return _bm_core(field, s)[0]


def berlekamp_massey(s: Sequence) -> BmResult:
    """Synthesize the shortest register reproducing s."""
    big_l, conn = _bm_core(s.field, s.elems)
    connection = poly_trim(conn)
    if not connection:
        connection = (1,)
    feedback = reciprocal_poly(connection, big_l)
    return BmResult(s.field, big_l, connection, feedback)


def linear_complexity(s: Sequence) -> int:
    """Smallest register order reproducing s; 0 for empty or all-zero input."""
    return _bm_core(s.field, s.elems)[0]


def lc_distance(a: Sequence, b: Sequence) -> int:
    """Distance between equal-length sequences: linear complexity of a - b."""
    same_field(a.field, b.field)
    if len(a) != len(b):
        raise LengthMismatchError(f"lengths {len(a)} vs {len(b)}")
    f = a.field
    sub = f.sub
    return _lc(f, tuple(sub(x, y) for x, y in zip(a.elems, b.elems)))


def min_lfsr_oracle(s: Sequence, max_states: int = DEFAULT_ORACLE_GUARD) -> int:
    """Smallest register order reproducing s, by exhaustive tap enumeration.

    Independent of Berlekamp-Massey: for l = 0, 1, ... try every tap vector in
    F_q^l against the defining recurrence.  Orders l >= n constrain nothing,
    so the search always terminates by l = n.
    """
    field = s.field
    q = field.q
    elems = s.elems
    n = len(elems)
    add, mul = field.add, field.mul
    for l in range(n + 1):
        if l >= n:
            return l
        if q**l > max_states:
            raise OracleTooLargeError(f"{q}**{l} tap vectors exceed guard {max_states}")
        checks = n - l
        for taps in itertools.product(range(q), repeat=l):
            for i in range(checks):
                acc = 0
                for j in range(l):
                    c = taps[j]
                    if c:
                        acc = add(acc, mul(c, elems[i + j]))
                if acc != elems[i + l]:
                    break
            else:
                return l
    return n  # unreachable; the l == n case above is vacuous


def generating_function_check(spec: LfsrSpec, n: int) -> bool:
    """Power-series identity test for a generated prefix.

    Multiplies the prefix's generating polynomial by the reversed feedback
    polynomial and checks that every coefficient from z**l up to z**(n-1)
    cancels, i.e. the product is a polynomial of degree at most l - 1.
    """
    l = spec.order
    if n < 2 * l:
        raise BadParamsError(f"need n >= 2*order, got n={n}, order={l}")
    seq = lfsr_generate(spec, n)
    rev_feedback = reciprocal_poly(spec.feedback_poly(), l)
    product = poly_mul(spec.field, seq.elems, rev_feedback, trunc=n)
    return all(c == 0 for c in product[l:])
