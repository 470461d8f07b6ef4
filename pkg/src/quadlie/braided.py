"""Braided vector spaces: basis conventions, slot lifts, Yang-Baxter.

Tensor bases are ordered little-endian in the first factor: the word
(i1, ..., ik) over {1..n} has index sum_t (i_t - 1) * n**(t-1).  For
n = 2, k = 2 this is x1(x)x1, x2(x)x1, x1(x)x2, x2(x)x2, so published
4x4 braiding matrices paste in verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, Scalar
from .linalg import Mat, Poly, Subspace, eval_poly_at, kernel, minimal_polynomial


class NotYangBaxter(ValueError):
    """The proposed braiding fails the Yang-Baxter equation."""


class MinusOneNotSimple(ValueError):
    """-1 is a multiple root of the braiding's minimal polynomial."""


class IndexOutOfRange(IndexError):
    """Slot index incompatible with the number of tensor factors."""


def word_index(word, n):
    """Index of a word (tuple over {1..n}) in the fixed tensor basis."""
    idx = 0
    for t, i in enumerate(word):
        idx += (i - 1) * n**t
    return idx


def index_word(idx, n, length):
    """Inverse of word_index for a given word length."""
    w = []
    for _ in range(length):
        w.append(idx % n + 1)
        idx //= n
    return tuple(w)


def all_words(n, length):
    """All words of one length, in tensor-basis order."""
    return [index_word(i, n, length) for i in range(n**length)]


def vec_tensor(field, u, v):
    """Tensor product of coordinate vectors, u in the first factors."""
    out = []
    for y in v:
        for x in u:
            out.append(x * y)
    return tuple(out)


def mat_tensor(field, a: Mat, b: Mat) -> Mat:
    """Matrix of (a on the leading factors) tensor (b on the trailing ones)."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    z = field.zero
    out = [[z] * cols for _ in range(rows)]
    for o2 in range(b.rows):
        for i2 in range(b.cols):
            s = b.a[o2][i2]
            if not s:
                continue
            for o1 in range(a.rows):
                ro = out[o1 + a.rows * o2]
                ra = a.a[o1]
                for i1 in range(a.cols):
                    if ra[i1]:
                        ro[i1 + a.cols * i2] = ra[i1] * s
    return Mat(field, out)


def lift_to_slot(op: Mat, slot: int, total: int, n: int, in_factors: int, out_factors: int | None = None) -> Mat:
    """Lift a map on V^(x)l (acting from the given 1-based slot) to V^(x)total.

    The lifted map is Id^(slot-1) (x) op (x) Id^(total-slot-l+1); its input
    has ``total`` factors, its output total - l + m where op maps l factors
    to m.
    """
    l = in_factors
    m = out_factors if out_factors is not None else (l if op.rows == op.cols else None)
    if m is None:
        raise ValueError("out_factors required for a rectangular lift")
    if op.cols != n**l or op.rows != n**m:
        raise ValueError("operator shape does not match the declared factor counts")
    if slot < 1 or slot + l - 1 > total:
        raise IndexOutOfRange(f"slot {slot} with {l} factors does not fit in {total}")
    lo = n ** (slot - 1)
    hi = n ** (total - slot - l + 1)
    field = op.field
    z = field.zero
    rows = lo * op.rows * hi
    cols = lo * op.cols * hi
    out = [[z] * cols for _ in range(rows)]
    for h in range(hi):
        for om in range(op.rows):
            base_r = lo * (om + op.rows * h)
            for im in range(op.cols):
                s = op.a[om][im]
                if not s:
                    continue
                base_c = lo * (im + op.cols * h)
                for lo_i in range(lo):
                    out[base_r + lo_i][base_c + lo_i] = s
    return Mat(field, out)


class BraidedSpace:
    """A finite-dimensional vector space with a Yang-Baxter operator.

    The braiding need not be invertible.  The Yang-Baxter identity is
    verified at construction unless ``check=False`` (enumeration paths
    filter candidates first and check lazily).
    """

    __slots__ = (
        "field",
        "dim",
        "c",
        "_block_cache",
        "_coproduct_cache",
        "_minpoly",
        "_e2",
        "_e2bar",
    )

    def __init__(self, field: Field, dim: int, c: Mat, *, check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if c.rows != dim**2 or c.cols != dim**2:
            raise ValueError("braiding matrix must be n^2 x n^2")
        if c.field is not field:
            raise ValueError("braiding over the wrong field")
        self.field = field
        self.dim = dim
        self.c = c
        self._block_cache = {}
        self._coproduct_cache = {}
        self._minpoly = None
        self._e2 = None
        self._e2bar = None
        if check and not self.check_yang_baxter():
            raise NotYangBaxter("braiding fails the Yang-Baxter equation")

    def braiding_at(self, slot: int, total: int) -> Mat:
        """The braiding acting on adjacent factors (slot, slot+1) of V^(x)total."""
        key = ("slot", slot, total)
        cached = self._block_cache.get(key)
        if cached is None:
            cached = lift_to_slot(self.c, slot, total, self.dim, 2, 2)
            self._block_cache[key] = cached
        return cached

    def check_yang_baxter(self) -> bool:
        c1 = self.braiding_at(1, 3)
        c2 = self.braiding_at(2, 3)
        return c1 @ c2 @ c1 == c2 @ c1 @ c2

    def minpoly(self) -> Poly:
        if self._minpoly is None:
            self._minpoly = minimal_polynomial(self.c)
        return self._minpoly

    def e2(self) -> Subspace:
        """Degree-two primitives: the kernel of c + Id on V^(x)2."""
        if self._e2 is None:
            eye = Mat.identity(self.field, self.dim**2)
            self._e2 = kernel(self.c + eye)
        return self._e2

    def e2bar(self) -> Subspace:
        """Vectors of V^(x)3 sent to their negative by both adjacent braidings."""
        if self._e2bar is None:
            eye = Mat.identity(self.field, self.dim**3)
            c1 = self.braiding_at(1, 3)
            c2 = self.braiding_at(2, 3)
            self._e2bar = kernel((c1 + eye).stack(c2 + eye))
        return self._e2bar

    def __repr__(self):
        return f"BraidedSpace(dim {self.dim} over {self.field!r})"


@dataclass(frozen=True)
class MinpolySplit:
    """Factorisation f = (X+1) h of the braiding's minimal polynomial."""

    f: Poly
    h: Poly
    h_at_minus1: Scalar


def split_minpoly(space: BraidedSpace):
    """Split off the simple root -1 of the minimal polynomial of c.

    Returns None when -1 is not a root at all (then the degree-two
    primitives vanish and the enveloping algebra is the free algebra);
    raises MinusOneNotSimple when -1 is a repeated root.
    """
    f = space.minpoly()
    minus1 = -space.field.one
    if f.eval_scalar(minus1):
        return None
    xplus1 = Poly(space.field, [1, 1])
    h, r = divmod(f, xplus1)
    assert r.is_zero()
    h_m1 = h.eval_scalar(minus1)
    if not h_m1:
        raise MinusOneNotSimple("-1 is a repeated root of the minimal polynomial")
    return MinpolySplit(f=f, h=h, h_at_minus1=h_m1)


def h_of_c(space: BraidedSpace, split: MinpolySplit) -> Mat:
    return eval_poly_at(split.h, space.c)


def e2(space: BraidedSpace) -> Subspace:
    return space.e2()


def e2bar(space: BraidedSpace) -> Subspace:
    return space.e2bar()


def check_yang_baxter(space: BraidedSpace) -> bool:
    return space.check_yang_baxter()


def _slot_tensor_space(space, left_basis, right_basis, left_len, right_len):
    """Span of {u (x) v} inside V^(x)(left_len+right_len)."""
    n = space.dim
    vecs = [vec_tensor(space.field, u, v) for v in right_basis for u in left_basis]
    return Subspace(space.field, n ** (left_len + right_len), vecs)


def is_categorical(space: BraidedSpace, sub: Subspace) -> bool:
    """Whether c(L(x)V) <= V(x)L and c(V(x)L) <= L(x)V for L = sub."""
    if sub.ambient_dim != space.dim:
        raise ValueError("subspace must live in V")
    n = space.dim
    if sub.dim == 0:
        return True
    eye_basis = [tuple(r) for r in Mat.identity(space.field, n).a]
    lv = [vec_tensor(space.field, l, e) for e in eye_basis for l in sub.basis]
    vl = [vec_tensor(space.field, e, l) for l in sub.basis for e in eye_basis]
    span_lv = Subspace(space.field, n**2, lv)
    span_vl = Subspace(space.field, n**2, vl)
    for v in lv:
        if not span_vl.contains(space.c.apply(v)):
            return False
    for v in vl:
        if not span_lv.contains(space.c.apply(v)):
            return False
    return True
