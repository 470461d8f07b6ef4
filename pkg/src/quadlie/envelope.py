"""Enveloping-algebra presentations and degree-truncated ideal computation.

The two-sided ideal of an inhomogeneous quadratic presentation is
approximated by the span of monomial sandwiches u r v up to a working
degree N + buffer; raising the buffer must leave the dimensions of the
degree slices up to N unchanged, which certifies the truncation
(top-degree cancellations can leak relations into lower degrees).

Coordinates are ordered with longer words first, so the rows of the
reduced echelon span whose pivot has degree <= k form a canonical basis
of (ideal) intersect T^{<=k}, and normal forms of bounded-degree
elements are canonical coset representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .braided import BraidedSpace, MinpolySplit, all_words, h_of_c
from .brackets import QuadraticLieAlgebra
from .linalg import SparseEchelon
from .tensoralg import (
    SplitTensorElem,
    TensorElem,
    coproduct,
    tensor_elem_from_vector,
    vector_from_tensor_elem,
)


class Unstabilized(RuntimeError):
    """Ideal slice dimensions kept changing as the buffer grew."""


class EliminationOrder:
    """Bijection between words of length <= cap and coordinate integers,
    longer words first, tensor-basis order within a length."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self._words = []
        for length in range(cap, -1, -1):
            self._words.extend(all_words(n, length))
        self._index = {w: i for i, w in enumerate(self._words)}
        self.size = len(self._words)

    def coord(self, w):
        return self._index[w]

    def word(self, coord):
        return self._words[coord]

    def degree_of(self, coord):
        return len(self._words[coord])

    def to_coords(self, t: TensorElem):
        return {self._index[w]: c for w, c in t.terms.items()}

    def to_elem(self, space, coords) -> TensorElem:
        return TensorElem(space, {self._words[c]: v for c, v in coords.items()})


class Presentation:
    """A braided space with canonicalized relation generators of degree <= 2."""

    __slots__ = ("space", "relations")

    def __init__(self, space: BraidedSpace, generators):
        self.space = space
        order = EliminationOrder(space.dim, 2)
        ech = SparseEchelon(space.field)
        for g in generators:
            if g.top_degree() > 2:
                raise ValueError("relations must have filtration degree <= 2")
            ech.insert(order.to_coords(g))
        rows = [order.to_elem(space, ech.rows[p]) for p in sorted(ech.rows)]
        self.relations = tuple(rows)

    def is_homogeneous_quadratic(self):
        return all(r.degrees() == [2] for r in self.relations)

    def __repr__(self):
        return f"Presentation({len(self.relations)} relations over dim {self.space.dim})"


def uq_relations(q: QuadraticLieAlgebra, split: MinpolySplit) -> Presentation:
    """Generators h(c)(z) - b(z) over the degree-two basis words."""
    space = q.space
    hc = h_of_c(space, split)
    gens = []
    for j in range(space.dim**2):
        quad = tensor_elem_from_vector(space, hc.col(j), 2)
        lin = tensor_elem_from_vector(space, q.beta.col(j), 1)
        gens.append(quad - lin)
    return Presentation(space, gens)


def sq_presentation(space: BraidedSpace) -> Presentation:
    """Degree-two primitives as homogeneous relations (zero bracket case)."""
    gens = [tensor_elem_from_vector(space, v, 2) for v in space.e2().basis]
    return Presentation(space, gens)


def presentation_for(q: QuadraticLieAlgebra, split) -> Presentation:
    """U-presentation when -1 splits off the minimal polynomial, else the
    free algebra (no relations, empty primitive space)."""
    if split is None:
        return Presentation(q.space, [])
    return uq_relations(q, split)


def relation_span_equal(pres: Presentation, expected_term_dicts) -> bool:
    """Compare the canonical relation span against raw word->coeff dicts."""
    space = pres.space
    other = Presentation(space, [TensorElem(space, d) for d in expected_term_dicts])
    return pres.relations == other.relations


@dataclass
class IdealTruncation:
    """Echelonized slices of a two-sided ideal up to degree N."""

    presentation: Presentation
    degree_cap: int
    buffer_used: int
    order: EliminationOrder
    echelon: SparseEchelon
    slice_dims: list  # dim(ideal intersect T^{<=k}) for k = 0..N
    _nf_cache: dict = dc_field(default_factory=dict)

    @property
    def space(self):
        return self.presentation.space

    def dim_slice(self, k):
        return self.slice_dims[k]

    def slice_basis(self, k):
        """Canonical basis of ideal intersect T^{<=k}, k <= degree cap."""
        rows = [
            self.order.to_elem(self.space, row)
            for p, row in sorted(self.echelon.rows.items())
            if self.order.degree_of(p) <= k
        ]
        return rows

    def nf_word(self, w) -> TensorElem:
        cached = self._nf_cache.get(w)
        if cached is None:
            coords = self.echelon.reduce({self.order.coord(w): self.space.field.one})
            cached = self.order.to_elem(self.space, coords)
            self._nf_cache[w] = cached
        return cached

    def nf(self, t: TensorElem) -> TensorElem:
        out = TensorElem(self.space)
        for w, c in t.terms.items():
            out = out + self.nf_word(w).scale(c)
        return out

    def nf_split(self, s: SplitTensorElem) -> SplitTensorElem:
        out = {}
        for (u, v), c in s.terms.items():
            nu = self.nf_word(u)
            nv = self.nf_word(v)
            for wu, cu in nu.terms.items():
                for wv, cv in nv.terms.items():
                    k = (wu, wv)
                    val = out.get(k)
                    add = c * cu * cv
                    val = add if val is None else val + add
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return SplitTensorElem(self.space, out)

    def quotient_words(self, k):
        """Coset-representative words of degree <= k (non-pivot coordinates)."""
        out = []
        for length in range(0, k + 1):
            for w in all_words(self.space.dim, length):
                if self.order.coord(w) not in self.echelon.rows:
                    out.append(w)
        return out


def _insert_sandwiches(ech, order, pres, degree):
    """Insert all u r v with |u| + top(r) + |v| == degree."""
    n = pres.space.dim
    for r in pres.relations:
        top = r.top_degree()
        pad = degree - top
        if pad < 0:
            continue
        for a in range(pad + 1):
            b = pad - a
            for u in all_words(n, a):
                ue = TensorElem.word(pres.space, u)
                for v in all_words(n, b):
                    elem = ue * r * TensorElem.word(pres.space, v)
                    ech.insert(order.to_coords(elem))


def ideal_truncation(pres: Presentation, N: int, buffer: int = 2) -> IdealTruncation:
    """Certified slices of the two-sided ideal up to degree N.

    Builds the sandwich span at working degree N + buffer, then keeps
    raising the buffer (at most twice) until the slice dimensions up to N
    stop changing; raises Unstabilized otherwise.
    """
    if N < 0 or buffer < 1:
        raise ValueError("need N >= 0 and buffer >= 1")
    max_extra = 2
    cap = N + buffer + max_extra
    order = EliminationOrder(pres.space.dim, cap)
    ech = SparseEchelon(pres.space.field)
    for d in range(0, N + buffer + 1):
        _insert_sandwiches(ech, order, pres, d)

    def dims():
        out = [0] * (N + 1)
        for p in ech.rows:
            deg = order.degree_of(p)
            if deg <= N:
                out[deg] += 1
        # cumulative: dim(ideal intersect T^{<=k})
        acc = []
        total = 0
        for k in range(N + 1):
            total += out[k]
            acc.append(total)
        return acc

    current = dims()
    used = buffer
    for extra in range(1, max_extra + 1):
        if pres.is_homogeneous_quadratic():
            break  # graded ideal: slices cannot leak downward
        _insert_sandwiches(ech, order, pres, N + buffer + extra)
        nxt = dims()
        if nxt == current:
            used = buffer + extra - 1
            break
        current = nxt
        if extra == max_extra:
            raise Unstabilized(
                f"ideal slice dimensions kept changing up to buffer {buffer + max_extra}"
            )
    return IdealTruncation(
        presentation=pres,
        degree_cap=N,
        buffer_used=used,
        order=order,
        echelon=ech,
        slice_dims=current,
    )


def filtration_dims(pres: Presentation, N: int, buffer: int = 2, trunc=None):
    """Dimensions of the standard-filtration layers of the quotient.

    Entry k is dim of (image of T^{<=k}) modulo (image of T^{<=k-1}).
    """
    if trunc is None:
        trunc = ideal_truncation(pres, N, buffer)
    n = pres.space.dim
    cum = []
    total_words = 0
    for k in range(N + 1):
        total_words += n**k
        cum.append(total_words - trunc.dim_slice(k))
    out = []
    prev = 0
    for k in range(N + 1):
        out.append(cum[k] - prev)
        prev = cum[k]
    return out


def sq_graded_dims(space: BraidedSpace, N: int):
    """Graded dimensions of the quadratic symmetric algebra.

    Degree m: dim V^(x)m minus the span of all slot placements of the
    degree-two primitives.
    """
    n = space.dim
    e2 = space.e2()
    out = []
    for m in range(N + 1):
        if m < 2 or e2.dim == 0:
            out.append(n**m)
            continue
        ech = SparseEchelon(space.field)
        e_elems = [tensor_elem_from_vector(space, v, 2) for v in e2.basis]
        for i in range(m - 1):
            for u in all_words(n, i):
                ue = TensorElem.word(space, u)
                for v in all_words(n, m - 2 - i):
                    ve = TensorElem.word(space, v)
                    for e in e_elems:
                        vec = vector_from_tensor_elem(ue * e * ve, m)
                        ech.insert({j: x for j, x in enumerate(vec) if x})
        out.append(n**m - ech.rank)
    return out


def bg_conditions(pres: Presentation):
    """The two PBW-type span conditions for an inhomogeneous quadratic
    presentation P: (I) P meets T^{<=1} trivially; (J) sandwiching by
    T^{<=1} on both sides creates nothing new in T^{<=2}."""
    space = pres.space
    order = EliminationOrder(space.dim, 4)
    p_ech = SparseEchelon(space.field)
    for r in pres.relations:
        p_ech.insert(order.to_coords(r))
    cond_i = all(order.degree_of(p) >= 2 for p in p_ech.rows)

    big = SparseEchelon(space.field)
    letters = [TensorElem.unit(space)] + [
        TensorElem.letter(space, i) for i in range(1, space.dim + 1)
    ]
    for r in pres.relations:
        for u in letters:
            for v in letters:
                big.insert(order.to_coords(u * r * v))
    low_rows = {p: row for p, row in big.rows.items() if order.degree_of(p) <= 2}
    cond_j = low_rows == p_ech.rows
    return {"I": cond_i, "J": cond_j}


def pbw_check(pres: Presentation, N: int, buffer: int = 2, trunc=None) -> bool:
    """Filtration layer dimensions match the graded dimensions of the
    quadratic symmetric algebra up to degree N."""
    return filtration_dims(pres, N, buffer, trunc=trunc) == sq_graded_dims(pres.space, N)


def coproduct_descends(trunc: IdealTruncation) -> bool:
    """The coproduct of every relation lies in ideal (x) T + T (x) ideal,
    checked at truncation level via two-sided normal forms."""
    for r in trunc.presentation.relations:
        if not trunc.nf_split(coproduct(r)).is_zero():
            return False
    return True
