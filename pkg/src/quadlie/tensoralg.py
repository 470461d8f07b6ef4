"""The braided tensor algebra at bounded degree.

Elements are finitely supported maps from words over {1..n} to scalars;
the empty word is the unit.  The coproduct is the unique algebra map
T -> T (x) T sending letters x to x (x) 1 + 1 (x) x, where T (x) T
multiplies through the block braiding of the middle factors; its (1,1)
component is Id + c, so degree-two primitives agree with ker(c + Id).
"""

from __future__ import annotations

from .braided import BraidedSpace, all_words, index_word, lift_to_slot, word_index
from .linalg import Mat, Subspace, kernel


class DegreeMismatch(ValueError):
    """Element is not homogeneous of the expected degree."""


class TensorElem:
    """A finitely supported linear combination of words (filtered element)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: BraidedSpace, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = space.field(c)
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def unit(cls, space):
        return cls(space, {(): space.field.one})

    @classmethod
    def letter(cls, space, i):
        if not 1 <= i <= space.dim:
            raise ValueError(f"letter {i} out of range")
        return cls(space, {(i,): space.field.one})

    @classmethod
    def word(cls, space, w, coeff=1):
        return cls(space, {tuple(w): space.field(coeff)})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return TensorElem(self.space, out)

    def __sub__(self, other):
        return self + other.scale(-self.space.field.one)

    def scale(self, s):
        s = self.space.field(s)
        if not s:
            return TensorElem(self.space)
        return TensorElem(self.space, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product of the tensor algebra."""
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                s = out.get(w)
                s = a * b if s is None else s + a * b
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return TensorElem(self.space, out)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def top_degree(self):
        return max((len(w) for w in self.terms), default=0)

    def homogeneous_part(self, d):
        return TensorElem(self.space, {w: c for w, c in self.terms.items() if len(w) == d})

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.space is other.space and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.space), tuple(sorted((w, c.v) for w, c in self.terms.items()))))

    def sorted_terms(self):
        n = self.space.dim
        return sorted(self.terms.items(), key=lambda it: (len(it[0]), word_index(it[0], n)))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "1" if not w else "".join(f"x{i}" for i in w)
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class SplitTensorElem:
    """An element of T (x) T: a map from pairs of words to scalars."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for (u, v), c in terms.items():
                c = space.field(c)
                if c:
                    self.terms[(tuple(u), tuple(v))] = c

    @classmethod
    def unit(cls, space):
        return cls(space, {((), ()): space.field.one})

    @classmethod
    def pure(cls, space, u, v, coeff=1):
        return cls(space, {(tuple(u), tuple(v)): space.field(coeff)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SplitTensorElem(self.space, out)

    def __sub__(self, other):
        return self + other.scale(-self.space.field.one)

    def scale(self, s):
        s = self.space.field(s)
        if not s:
            return SplitTensorElem(self.space)
        return SplitTensorElem(self.space, {k: c * s for k, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SplitTensorElem):
            return NotImplemented
        return self.space is other.space and self.terms == other.terms

    def bidegree_part(self, a, b):
        return SplitTensorElem(
            self.space,
            {(u, v): c for (u, v), c in self.terms.items() if len(u) == a and len(v) == b},
        )

    def sorted_terms(self):
        n = self.space.dim
        return sorted(
            self.terms.items(),
            key=lambda it: (
                len(it[0][0]) + len(it[0][1]),
                len(it[0][1]),
                word_index(it[0][0], n),
                word_index(it[0][1], n),
            ),
        )

    def __repr__(self):
        if not self.terms:
            return "0"

        def mono(w):
            return "1" if not w else "".join(f"x{i}" for i in w)

        return " + ".join(f"{c}*{mono(u)}(x){mono(v)}" for (u, v), c in self.sorted_terms())

    def __mul__(self, other):
        return braided_mul_split(self, other)


def block_braiding(space: BraidedSpace, m: int, n: int) -> Mat:
    """The braid lift moving the first m tensor factors past the last n.

    Recursion: c^(0,n) = c^(m,0) = Id; c^(1,n) = c_n ... c_1;
    c^(m,n) = (c^(m-1,n) (x) Id) o (Id^(m-1) (x) c^(1,n)).
    """
    if m < 0 or n < 0:
        raise ValueError("negative block sizes")
    key = (m, n)
    cached = space._block_cache.get(key)
    if cached is not None:
        return cached
    d = space.dim
    if m == 0 or n == 0:
        out = Mat.identity(space.field, d ** (m + n))
    elif m == 1:
        out = Mat.identity(space.field, d ** (1 + n))
        for i in range(1, n + 1):
            out = space.braiding_at(i, 1 + n) @ out
    else:
        inner = lift_to_slot(block_braiding(space, 1, n), m, m + n, d, 1 + n, 1 + n)
        outer = lift_to_slot(block_braiding(space, m - 1, n), 1, m + n, d, m - 1 + n, m - 1 + n)
        out = outer @ inner
    space._block_cache[key] = out
    return out


def _crossing_columns(space, m, n):
    """Sparse columns of c^(m,n): word -> list of (word, coeff)."""
    key = ("cols", m, n)
    cached = space._block_cache.get(key)
    if cached is not None:
        return cached
    mat = block_braiding(space, m, n)
    d = space.dim
    cols = {}
    for j in range(d ** (m + n)):
        w = index_word(j, d, m + n)
        col = []
        for i in range(d ** (m + n)):
            s = mat.a[i][j]
            if s:
                col.append((index_word(i, d, m + n), s))
        cols[w] = col
    space._block_cache[key] = cols
    return cols


def braided_mul_split(x: SplitTensorElem, y: SplitTensorElem) -> SplitTensorElem:
    """Product on T (x) T: braid the inner factors, then multiply legwise."""
    if x.space is not y.space:
        raise ValueError("operands over different spaces")
    space = x.space
    out = {}
    for (u, v), a in x.terms.items():
        for (u2, v2), b in y.terms.items():
            ab = a * b
            if not v or not u2:
                w = (u + u2, v + v2)
                s = out.get(w)
                s = ab if s is None else s + ab
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
                continue
            cols = _crossing_columns(space, len(v), len(u2))
            for w, coeff in cols[v + u2]:
                left = u + w[: len(u2)]
                right = w[len(u2):] + v2
                s = out.get((left, right))
                s = ab * coeff if s is None else s + ab * coeff
                if s:
                    out[(left, right)] = s
                else:
                    out.pop((left, right), None)
    return SplitTensorElem(space, out)


def _word_coproduct(space, w):
    cached = space._coproduct_cache.get(w)
    if cached is not None:
        return cached
    if not w:
        out = SplitTensorElem.unit(space)
    else:
        head = _word_coproduct(space, w[:-1])
        i = w[-1]
        xi = SplitTensorElem(space, {((i,), ()): space.field.one, ((), (i,)): space.field.one})
        out = braided_mul_split(head, xi)
    space._coproduct_cache[w] = out
    return out


def coproduct(t: TensorElem) -> SplitTensorElem:
    """The braided-bialgebra coproduct, extended word by word."""
    out = SplitTensorElem(t.space)
    for w, c in t.terms.items():
        out = out + _word_coproduct(t.space, w).scale(c)
    return out


def delta_component(t: TensorElem, a: int, b: int) -> SplitTensorElem:
    """Projection of the coproduct onto V^(x)a (x) V^(x)b."""
    degs = t.degrees()
    if degs and degs != [a + b]:
        raise DegreeMismatch(f"element has degrees {degs}, expected pure degree {a + b}")
    return coproduct(t).bidegree_part(a, b)


def delta_component_matrix(space: BraidedSpace, a: int, b: int) -> Mat:
    """Matrix of the (a,b) coproduct component on V^(x)(a+b).

    Output coordinates run over pairs (u, v) indexed little-endian with u
    fastest: row = index(u) + n^a * index(v).
    """
    d = space.dim
    rows = d ** (a + b)
    cols = d ** (a + b)
    z = space.field.zero
    out = [[z] * cols for _ in range(rows)]
    for j, w in enumerate(all_words(d, a + b)):
        comp = _word_coproduct(space, w).bidegree_part(a, b)
        for (u, v), c in comp.terms.items():
            out[word_index(u, d) + d**a * word_index(v, d)][j] = c
    return Mat(space.field, out)


def en_space(space: BraidedSpace, n: int) -> Subspace:
    """Degree-n primitives of T: joint kernel of all proper coproduct components."""
    if n < 2:
        raise ValueError("primitives are defined from degree 2 on")
    stacked = None
    for a in range(1, n):
        m = delta_component_matrix(space, a, n - a)
        stacked = m if stacked is None else stacked.stack(m)
    return kernel(stacked)


def tensor_elem_from_vector(space, vec, length) -> TensorElem:
    """Interpret an n^length coordinate vector as a homogeneous element."""
    d = space.dim
    terms = {}
    for i, c in enumerate(vec):
        if c:
            terms[index_word(i, d, length)] = c
    return TensorElem(space, terms)


def vector_from_tensor_elem(t: TensorElem, length):
    """Coordinates of a homogeneous element in the fixed tensor basis."""
    d = t.space.dim
    vec = [t.space.field.zero] * d**length
    for w, c in t.terms.items():
        if len(w) != length:
            raise DegreeMismatch("element is not homogeneous of the requested degree")
        vec[word_index(w, d)] = c
    return tuple(vec)
