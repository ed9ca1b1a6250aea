"""Finite ring core: indexed elements, base rings, and structural caches.

Elements of a ring of order n are the integers 0..n-1.  Each construction
supplies encode/decode maps between indices and its natural element shape
(residues, matrices, coefficient vectors, ...), so the deciders only ever
see indices.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

import numpy as np

from .errors import CapExceededError

# Order caps.  Exhaustive classification is O(order^2) per element in the
# worst case; arithmetic-only use tolerates larger rings.
CLASSIFY_CAP = 4096
ARITH_CAP = 65536

# Full op tables above this order cost too much memory; fall back to the
# scalar evaluators.
TABLE_LIMIT = 1024

# Axiom checking: exhaustive below the limit, sampled above.
EXHAUSTIVE_LAW_LIMIT = 256
LAW_SAMPLES = 10_000


class RingCaches:
    """Structural sets populated by freeze()."""

    __slots__ = ("units", "unit_inverse", "idempotents", "nilpotents", "jacobson")

    def __init__(self, units, unit_inverse, idempotents, nilpotents, jacobson):
        self.units = frozenset(units)
        self.unit_inverse = dict(unit_inverse)
        self.idempotents = frozenset(idempotents)
        self.nilpotents = frozenset(nilpotents)
        self.jacobson = frozenset(jacobson)


class Ring:
    """A fully materialized finite ring.

    `add`, `mul`, `neg` are total evaluators on indices.  After freeze()
    the caches are populated, op tables are installed for small orders,
    and the ring must be treated as immutable.
    """

    def __init__(
        self,
        order: int,
        add: Callable[[int, int], int],
        mul: Callable[[int, int], int],
        neg: Callable[[int], int],
        one: int,
        label: str,
        kind: str = "opaque",
        decode: Optional[Callable[[int], object]] = None,
        encode: Optional[Callable[[object], int]] = None,
        fmt: Optional[Callable[[int], str]] = None,
        mul_table_builder: Optional[Callable[[], np.ndarray]] = None,
        add_table_builder: Optional[Callable[[], np.ndarray]] = None,
        meta: Optional[dict] = None,
    ):
        if order < 1:
            raise ValueError("ring order must be >= 1")
        self.order = order
        self.zero = 0
        self.one = one
        self.add = add
        self.mul = mul
        self.neg = neg
        self.label = label
        self.kind = kind
        self._decode = decode or (lambda i: i)
        self._encode = encode or (lambda v: int(v))
        self._fmt = fmt or (lambda i: str(i))
        self._mul_table_builder = mul_table_builder
        self._add_table_builder = add_table_builder
        self.meta = meta or {}
        self.caches: Optional[RingCaches] = None
        self._add_np: Optional[np.ndarray] = None
        self._mul_np: Optional[np.ndarray] = None
        self._neg_np: Optional[np.ndarray] = None
        self._morphic: Optional[tuple] = None

    # -- basic derived ops -------------------------------------------------

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.order)

    def decode(self, i: int):
        return self._decode(i)

    def encode(self, value) -> int:
        return self._encode(value)

    def format_element(self, i: int) -> str:
        return self._fmt(i)

    @property
    def frozen(self) -> bool:
        return self.caches is not None

    def __repr__(self):
        state = "frozen" if self.frozen else "raw"
        return f"<Ring {self.label} order={self.order} {state}>"


def _build_tables(R: Ring) -> None:
    """Install numpy op tables and table-backed evaluators (order <= TABLE_LIMIT)."""
    if R._mul_np is not None or R.order > TABLE_LIMIT:
        return
    n = R.order
    mul_np = R._mul_table_builder() if R._mul_table_builder is not None else None
    if mul_np is None:
        mul_np = np.fromiter(
            (R.mul(a, b) for a in range(n) for b in range(n)), dtype=np.int64, count=n * n
        ).reshape(n, n)
    else:
        mul_np = np.asarray(mul_np, dtype=np.int64)
    add_np = R._add_table_builder() if R._add_table_builder is not None else None
    if add_np is None:
        add_np = np.fromiter(
            (R.add(a, b) for a in range(n) for b in range(n)), dtype=np.int64, count=n * n
        ).reshape(n, n)
    else:
        add_np = np.asarray(add_np, dtype=np.int64)
    neg_np = np.fromiter((R.neg(a) for a in range(n)), dtype=np.int64, count=n)
    R._mul_np = mul_np
    R._add_np = add_np
    R._neg_np = neg_np
    mt = mul_np.tolist()
    at = add_np.tolist()
    nt = neg_np.tolist()
    R.mul = lambda a, b: mt[a][b]
    R.add = lambda a, b: at[a][b]
    R.neg = lambda a: nt[a]


def _compute_units(R: Ring):
    n, one = R.order, R.one
    inverse = {}
    if R._mul_np is not None:
        rows = R._mul_np.tolist()
        for u in range(n):
            row = rows[u]
            try:
                v = row.index(one)
            except ValueError:
                continue
            if rows[v][u] == one:
                inverse[u] = v
    else:
        mul = R.mul
        for u in range(n):
            for v in range(n):
                if mul(u, v) == one and mul(v, u) == one:
                    inverse[u] = v
                    break
    return inverse


def _compute_nilpotents(R: Ring):
    # x is nilpotent iff x^(2^k) = 0 for 2^k >= order (nilpotency index
    # is at most the order in a finite ring).
    n = R.order
    squarings = max(1, (n - 1).bit_length())
    mul = R.mul
    out = set()
    for x in range(n):
        y = x
        for _ in range(squarings):
            y = mul(y, y)
            if y == 0:
                break
        if y == 0:
            out.add(x)
    return out


def _compute_jacobson(R: Ring, units):
    # J(R) = { x : 1 - yx is a unit for all y }; one-sided quasi-regularity
    # suffices in a finite ring.
    n, one = R.order, R.one
    mul, sub = R.mul, R.sub
    jac = set()
    for x in range(n):
        if all(sub(one, mul(y, x)) in units for y in range(n)):
            jac.add(x)
    return jac


def freeze(R: Ring, cap: int = CLASSIFY_CAP) -> Ring:
    """Populate the structural caches; idempotent; returns the same ring."""
    if R.caches is not None:
        return R
    if R.order > cap:
        raise CapExceededError(
            f"freezing {R.label} (order {R.order}) exceeds cap {cap}"
        )
    _build_tables(R)
    inverse = _compute_units(R)
    units = frozenset(inverse)
    idempotents = frozenset(e for e in range(R.order) if R.mul(e, e) == e)
    nilpotents = frozenset(_compute_nilpotents(R))
    jacobson = frozenset(_compute_jacobson(R, units))
    R.caches = RingCaches(units, inverse, idempotents, nilpotents, jacobson)
    return R


def ring_pow(R: Ring, x: int, k: int) -> int:
    """k-fold product, x^0 = one."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    result = R.one
    base = x
    while k:
        if k & 1:
            result = R.mul(result, base)
        base = R.mul(base, base)
        k >>= 1
    return result


def is_nilpotent(R: Ring, x: int) -> bool:
    """Iterate powers of x until zero or a repeat; independent of the cache."""
    seen = set()
    y = x
    while y not in seen:
        if y == 0:
            return True
        seen.add(y)
        y = R.mul(y, x)
    return False


def make_zmod(n: int, cap: int = ARITH_CAP) -> Ring:
    """The ring of residues modulo n."""
    if n == 0:
        raise ValueError("Z(0) is not a ring here; n must be >= 1")
    if n > cap:
        raise CapExceededError(f"Z({n}) exceeds cap {cap}")
    return Ring(
        order=n,
        add=lambda a, b: (a + b) % n,
        mul=lambda a, b: (a * b) % n,
        neg=lambda a: (-a) % n,
        one=1 % n,
        label=f"Z({n})",
        kind="zmod",
        mul_table_builder=lambda: np.multiply.outer(np.arange(n), np.arange(n)) % n,
        add_table_builder=lambda: np.add.outer(np.arange(n), np.arange(n)) % n,
        meta={"n": n},
    )


def direct_product(R: Ring, S: Ring, cap: int = ARITH_CAP) -> Ring:
    """Componentwise ring on pairs; index = a * |S| + b."""
    n = R.order * S.order
    if n > cap:
        raise CapExceededError(f"{R.label} x {S.label} exceeds cap {cap}")
    s = S.order

    def add(a, b):
        return R.add(a // s, b // s) * s + S.add(a % s, b % s)

    def mul(a, b):
        return R.mul(a // s, b // s) * s + S.mul(a % s, b % s)

    def builder(tables):
        tr, ts = tables
        hi = np.arange(n) // s
        lo = np.arange(n) % s
        return tr[hi[:, None], hi[None, :]] * s + ts[lo[:, None], lo[None, :]]

    def mul_builder():
        _build_tables(R)
        _build_tables(S)
        if R._mul_np is None or S._mul_np is None:
            return None
        return builder((R._mul_np, S._mul_np))

    def add_builder():
        _build_tables(R)
        _build_tables(S)
        if R._add_np is None or S._add_np is None:
            return None
        return builder((R._add_np, S._add_np))

    can_build = R.order <= TABLE_LIMIT and S.order <= TABLE_LIMIT
    return Ring(
        order=n,
        add=add,
        mul=mul,
        neg=lambda a: R.neg(a // s) * s + S.neg(a % s),
        one=R.one * s + S.one,
        label=f"{R.label} x {S.label}",
        kind="product",
        decode=lambda i: (R.decode(i // s), S.decode(i % s)),
        encode=lambda v: R.encode(v[0]) * s + S.encode(v[1]),
        fmt=lambda i: f"({R.format_element(i // s)}, {S.format_element(i % s)})",
        mul_table_builder=mul_builder if can_build else None,
        add_table_builder=add_builder if can_build else None,
        meta={"factors": (R, S)},
    )


# -- axiom verification ----------------------------------------------------


def _check_assoc_np(T: np.ndarray) -> Optional[tuple]:
    """Chunked exhaustive associativity check on an op table."""
    n = T.shape[0]
    for a in range(n):
        row = T[a]
        left = T[row][:, :]          # left[b, c] = T[T[a, b], c]
        right = row[T]               # right[b, c] = T[a, T[b, c]]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            return (a, int(b), int(c))
    return None


def verify_ring_axioms(R: Ring, rng: Optional[random.Random] = None) -> None:
    """Raise AssertionError on the first violated ring axiom.

    Exhaustive for order <= EXHAUSTIVE_LAW_LIMIT (table-backed), sampled
    on LAW_SAMPLES random triples otherwise.
    """
    n = R.order
    add, mul, neg = R.add, R.mul, R.neg
    zero, one = R.zero, R.one
    if n == 1:
        assert add(0, 0) == 0 and mul(0, 0) == 0
        return
    assert zero != one, f"{R.label}: zero == one with order > 1"

    for x in range(min(n, 4096)):
        assert add(x, zero) == x, f"{R.label}: additive identity fails at {x}"
        assert add(x, neg(x)) == zero, f"{R.label}: inverse fails at {x}"
        assert mul(x, one) == x and mul(one, x) == x, (
            f"{R.label}: multiplicative identity fails at {x}"
        )

    if n <= EXHAUSTIVE_LAW_LIMIT:
        _build_tables(R)
        A, M = R._add_np, R._mul_np
        assert np.array_equal(A, A.T), f"{R.label}: addition not commutative"
        bad = _check_assoc_np(A)
        assert bad is None, f"{R.label}: addition not associative at {bad}"
        bad = _check_assoc_np(M)
        assert bad is None, f"{R.label}: multiplication not associative at {bad}"
        for a in range(n):
            mrow = M[a]
            left = mrow[A]                       # a*(b+c)
            right = A[mrow[:, None], mrow[None, :]]  # a*b + a*c
            assert np.array_equal(left, right), f"{R.label}: left distributivity fails at a={a}"
            mcol = M[:, a]
            left = mcol[A]                       # (b+c)*a
            right = A[mcol[:, None], mcol[None, :]]  # b*a + c*a
            assert np.array_equal(left, right), f"{R.label}: right distributivity fails at a={a}"
    else:
        rng = rng or random.Random(0)
        for _ in range(LAW_SAMPLES):
            a, b, c = (rng.randrange(n) for _ in range(3))
            assert add(a, b) == add(b, a)
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            assert mul(add(b, c), a) == add(mul(b, a), mul(c, a))
