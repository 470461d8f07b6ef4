"""Dense exact linear algebra and univariate polynomials over Q or GF(p).

Everything is computed by fraction-free-free, plain Gaussian elimination
on exact scalars; canonical answers (reduced echelon bases) make
subspace equality a representation equality.
"""

from __future__ import annotations

from .fields import Scalar


class HypothesisViolated(ValueError):
    """A caller-supplied hypothesis fails (detected from its consequences)."""


class Mat:
    """A dense rows x cols matrix of scalars over one field.

    Treated as immutable: operations return fresh matrices.
    """

    __slots__ = ("field", "rows", "cols", "a")

    def __init__(self, field, a):
        self.field = field
        self.a = [list(row) for row in a]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        for row in self.a:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.a[i][j]

    def row(self, i):
        return tuple(self.a[i])

    def col(self, j):
        return tuple(self.a[i][j] for i in range(self.rows))

    def __add__(self, other):
        return Mat(self.field, [[x + y for x, y in zip(r, s)] for r, s in zip(self.a, other.a)])

    def __sub__(self, other):
        return Mat(self.field, [[x - y for x, y in zip(r, s)] for r, s in zip(self.a, other.a)])

    def __neg__(self):
        return Mat(self.field, [[-x for x in r] for r in self.a])

    def scale(self, s):
        s = self.field(s)
        return Mat(self.field, [[s * x for x in r] for r in self.a])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        z = self.field.zero
        bt = list(zip(*other.a))
        out = []
        for r in self.a:
            out.append([sum((x * y for x, y in zip(r, c) if x and y), z) for c in bt])
        return Mat(self.field, out)

    def apply(self, vec):
        """Matrix times column vector (tuple of scalars)."""
        z = self.field.zero
        return tuple(sum((x * y for x, y in zip(r, vec) if x and y), z) for r in self.a)

    def transpose(self):
        return Mat(self.field, [list(c) for c in zip(*self.a)])

    def is_zero(self):
        return all(not x for r in self.a for x in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field is other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and all(x == y for r, s in zip(self.a, other.a) for x, y in zip(r, s))
        )

    def __hash__(self):
        return hash((id(self.field), self.rows, self.cols, tuple(x.v for r in self.a for x in r)))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.a)
        return f"Mat[{body}]"

    def rref(self):
        """Reduced row echelon form: (matrix, pivot column list)."""
        m = [row[:] for row in self.a]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Mat(self.field, m), pivots

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a nonsquare matrix")
        n = self.rows
        aug = Mat(self.field, [self.a[i] + Mat.identity(self.field, n).a[i] for i in range(n)])
        red, piv = aug.rref()
        if piv != list(range(n)):
            raise HypothesisViolated("matrix is not invertible")
        return Mat(self.field, [red.a[i][n:] for i in range(n)])

    def stack(self, other):
        """Rows of self above rows of other."""
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Mat(self.field, self.a + other.a)

    def hjoin(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Mat(self.field, [r + s for r, s in zip(self.a, other.a)])


def solve(a: Mat, b):
    """One solution x of a x = b (b a tuple), or None if inconsistent."""
    aug = Mat(a.field, [list(row) + [bv] for row, bv in zip(a.a, b)])
    red, piv = aug.rref()
    if a.cols in piv:
        return None
    x = [a.field.zero] * a.cols
    for r, c in enumerate(piv):
        x[c] = red.a[r][a.cols]
    return tuple(x)


class Subspace:
    """A subspace of K^ambient_dim with its unique reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim, vectors):
        self.field = field
        self.ambient_dim = ambient_dim
        vecs = [v for v in vectors if any(v)]
        if vecs:
            red, piv = Mat(field, vecs).rref()
            self.basis = tuple(tuple(red.a[i]) for i in range(len(piv)))
        else:
            self.basis = ()

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Mat.identity(field, ambient_dim).a)

    @property
    def dim(self):
        return len(self.basis)

    def basis_matrix(self):
        """Matrix whose columns are the basis vectors."""
        return Mat(self.field, [list(col) for col in zip(*self.basis)]) if self.basis else Mat.zero(self.field, self.ambient_dim, 0)

    def coords(self, vec):
        """Coordinates of vec in the echelon basis, or None if outside."""
        vec = list(vec)
        out = []
        piv = [next(j for j, x in enumerate(b) if x) for b in self.basis]
        for b, p in zip(self.basis, piv):
            c = vec[p]
            out.append(c)
            if c:
                vec = [x - c * y for x, y in zip(vec, b)]
        if any(vec):
            return None
        return tuple(out)

    def contains(self, vec):
        return self.coords(vec) is not None

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((id(self.field), self.ambient_dim, tuple(tuple(x.v for x in b) for b in self.basis)))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def kernel(m: Mat) -> Subspace:
    """Canonical echelon basis of the right null space of m."""
    red, piv = m.rref()
    free = [c for c in range(m.cols) if c not in piv]
    vecs = []
    for fc in free:
        v = [m.field.zero] * m.cols
        v[fc] = m.field.one
        for r, pc in enumerate(piv):
            v[pc] = -red.a[r][fc]
        vecs.append(v)
    return Subspace(m.field, m.cols, vecs)


def column_space(m: Mat) -> Subspace:
    return Subspace(m.field, m.rows, [list(c) for c in zip(*m.a)] if m.a else [])


class Poly:
    """A univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Poly(self.field, [c * other for c in self.coeffs])
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j, d in enumerate(other.coeffs):
                if d:
                    out[i + j] = out[i + j] + c * d
        return Poly(self.field, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly(self.field, [])
        r = self
        inv = other.coeffs[-1].inverse()
        while not r.is_zero() and r.degree >= other.degree:
            shift = r.degree - other.degree
            c = r.coeffs[-1] * inv
            t = Poly(self.field, [self.field.zero] * shift + [c])
            q = q + t
            r = r - t * other
        return q, r

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), tuple(c.v for c in self.coeffs)))

    def monic(self):
        if self.is_zero():
            return self
        inv = self.coeffs[-1].inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def eval_scalar(self, x: Scalar) -> Scalar:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mon and cs == "1":
                cs = ""
            body = f"{cs}{mon}" if not (cs and mon) else f"{cs}*{mon}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def poly_gcd_bezout(a: Poly, b: Poly):
    """(g, u, v) with g = gcd(a, b) monic and u a + v b = g."""
    field = a.field
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    r0, r1 = a, b
    u0, u1 = Poly(field, [1]), Poly(field, [])
    v0, v1 = Poly(field, []), Poly(field, [1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = r0.coeffs[-1].inverse()
    return r0 * lead, u0 * lead, v0 * lead


def eval_poly_at(p: Poly, m: Mat) -> Mat:
    """p(m) by Horner's rule over matrices."""
    if m.rows != m.cols:
        raise ValueError("polynomial evaluation needs a square matrix")
    acc = Mat.zero(m.field, m.rows, m.cols)
    eye = Mat.identity(m.field, m.rows)
    for c in reversed(p.coeffs):
        acc = acc @ m + eye.scale(c)
    return acc


def minimal_polynomial(m: Mat) -> Poly:
    """Least-degree monic annihilator of m, via dependence among powers."""
    if m.rows != m.cols:
        raise ValueError("minimal polynomial of a nonsquare matrix")
    field = m.field
    n = m.rows
    flat = lambda mm: [mm.a[i][j] for i in range(n) for j in range(n)]
    powers = [Mat.identity(field, n)]
    rows = [flat(powers[0])]
    while True:
        k = len(powers)
        nxt = powers[-1] @ m
        stacked = Mat(field, rows + [flat(nxt)])
        if stacked.rank() <= k:
            break
        powers.append(nxt)
        rows.append(flat(nxt))
    # m^k is a combination of lower powers: solve for the coefficients.
    k = len(powers)
    target = flat(powers[-1] @ m)
    a = Mat(field, [list(col) for col in zip(*rows)])
    x = solve(a, tuple(target))
    coeffs = [-c for c in x] + [field.one]
    return Poly(field, coeffs)


def complement_split(m_alpha: Mat, m_beta: Mat):
    """Images of two commuting annihilating evaluations split the space.

    Given A = alpha(c) and B = beta(c) with A B = 0 and gcd(alpha, beta) = 1,
    returns (Im A, Im B) and checks Im A = ker B and Im A + Im B is a direct
    sum filling the whole space.  A failed check means the caller's gcd or
    annihilation hypothesis was wrong.
    """
    if not (m_alpha @ m_beta).is_zero():
        raise HypothesisViolated("product of the evaluated matrices is nonzero")
    im_a = column_space(m_alpha)
    im_b = column_space(m_beta)
    if im_a != kernel(m_beta):
        raise HypothesisViolated("image of the first factor is not the kernel of the second")
    if im_a.dim + im_b.dim != m_alpha.rows:
        raise HypothesisViolated("images do not span complementarily")
    joint = Subspace(m_alpha.field, m_alpha.rows, [list(v) for v in im_a.basis + im_b.basis])
    if joint.dim != m_alpha.rows:
        raise HypothesisViolated("images are not complementary")
    return im_a, im_b


class SparseEchelon:
    """Incremental reduced echelon structure over integer coordinates.

    Rows are sparse dicts coord -> scalar; the pivot of a row is its
    smallest coordinate and rows are kept fully reduced (tails contain no
    pivot of any other row), which makes normal forms canonical.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot coord -> {coord: scalar}, monic at pivot
        self._col_index = {}  # coord -> set of pivots whose row touches it

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return self.rows.keys()

    def reduce(self, vec):
        """Fully reduce a sparse dict against the stored rows."""
        vec = {k: v for k, v in vec.items() if v}
        while True:
            hits = [c for c in vec if c in self.rows]
            if not hits:
                return vec
            c = min(hits)
            f = vec[c]
            for k, x in self.rows[c].items():
                nv = vec.get(k)
                nv = -f * x if nv is None else nv - f * x
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)

    def insert(self, vec):
        """Reduce and add a vector; returns the new pivot or None."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = v[p].inverse()
        row = {k: x * inv for k, x in v.items()}
        # Keep existing rows reduced against the new pivot.
        for q in list(self._col_index.get(p, ())):
            r = self.rows[q]
            f = r[p]
            for k, x in row.items():
                nv = r.get(k)
                nv = -f * x if nv is None else nv - f * x
                if nv:
                    r[k] = nv
                    if k != q:
                        self._col_index.setdefault(k, set()).add(q)
                else:
                    r.pop(k, None)
                    if k != q:
                        s = self._col_index.get(k)
                        if s:
                            s.discard(q)
        self.rows[p] = row
        for k in row:
            if k != p:
                self._col_index.setdefault(k, set()).add(p)
        return p

    def contains(self, vec):
        return not self.reduce(vec)
