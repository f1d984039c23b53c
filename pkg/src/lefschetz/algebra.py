"""Standard graded Artinian algebras over an exact field.

An algebra is built from the base field by two kinds of steps:

* monic extension: B = A[x]/(f) with f = x^d + a_1 x^{d-1} + ... + a_d,
  each a_i homogeneous of degree i in A.  B is a free A-module with basis
  1, x, ..., x^{d-1}, so the degree-t component decomposes as
  B_t = A_t + A_{t-1} x + ... + A_{t-d+1} x^{d-1}.
* quotient by a nonzero homogeneous form g: B_t = A_t / g*A_{t-deg g},
  with stored projection/section matrices relative to A.

All element and matrix arithmetic is exact.  Degrees above the socle degree
are genuine zero spaces: their elements have empty coefficient vectors and
maps into or out of them are empty matrices.
"""

from __future__ import annotations

import hashlib
from typing import Sequence

from .fields import Field
from .linalg import Matrix


class HomogeneousElement:
    """A homogeneous element: a degree plus a coefficient vector over the
    degree-d basis of its algebra."""

    __slots__ = ("algebra", "degree", "coeffs")

    def __init__(self, algebra: "GradedAlgebra", degree: int, coeffs: tuple):
        self.algebra = algebra
        self.degree = degree
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "HomogeneousElement") -> "HomogeneousElement":
        _require_same_algebra(self, other)
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")
        add = self.algebra.field.add
        return HomogeneousElement(
            self.algebra, self.degree, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "HomogeneousElement") -> "HomogeneousElement":
        return self + (-other)

    def __neg__(self) -> "HomogeneousElement":
        neg = self.algebra.field.neg
        return HomogeneousElement(self.algebra, self.degree, tuple(neg(a) for a in self.coeffs))

    def scale(self, c) -> "HomogeneousElement":
        f = self.algebra.field
        c = f.validate(c)
        return HomogeneousElement(self.algebra, self.degree, tuple(f.mul(c, a) for a in self.coeffs))

    def __mul__(self, other: "HomogeneousElement") -> "HomogeneousElement":
        _require_same_algebra(self, other)
        return self.algebra.multiply(self, other)

    def __pow__(self, r: int) -> "HomogeneousElement":
        if r < 0:
            raise ValueError("negative powers are undefined")
        out = self.algebra.one()
        for _ in range(r):
            out = self.algebra.multiply(out, self)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousElement)
            and self.algebra is other.algebra
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.algebra), self.degree, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        f = self.algebra.field
        labels = self.algebra.basis_labels(self.degree)
        terms = []
        for c, label in zip(self.coeffs, labels):
            if f.is_zero(c):
                continue
            if label == "1":
                terms.append(f.to_str(c))
            elif f.eq(c, f.one):
                terms.append(label)
            else:
                terms.append(f"{f.to_str(c)}*{label}")
        return " + ".join(terms)

    def __repr__(self):
        return f"<{self} : degree {self.degree}>"


def _require_same_algebra(u: HomogeneousElement, v: HomogeneousElement) -> None:
    if u.algebra is not v.algebra:
        raise ValueError("elements belong to different algebras")


class MonicPoly:
    """A monic homogeneous polynomial x^d + a_1 x^{d-1} + ... + a_d over an
    algebra, with deg(a_i) = i."""

    __slots__ = ("algebra", "d", "lower")

    def __init__(self, algebra: "GradedAlgebra", d: int, lower: Sequence[HomogeneousElement]):
        if d < 1:
            raise ValueError("monic degree must be >= 1")
        if len(lower) != d:
            raise ValueError(f"expected {d} lower coefficients, got {len(lower)}")
        for i, a in enumerate(lower):
            if a.algebra is not algebra:
                raise ValueError("lower coefficient from a different algebra")
            if a.degree != i + 1:
                raise ValueError(f"lower coefficient {i + 1} has degree {a.degree}, expected {i + 1}")
        self.algebra = algebra
        self.d = d
        self.lower = tuple(lower)

    @classmethod
    def pure_power(cls, algebra: "GradedAlgebra", d: int) -> "MonicPoly":
        return cls(algebra, d, tuple(algebra.zero(i + 1) for i in range(d)))

    def evaluate(self, at: HomogeneousElement) -> HomogeneousElement:
        """Substitute a degree-1 element for the monic variable."""
        if at.algebra is not self.algebra:
            raise ValueError("evaluation point from a different algebra")
        if at.degree != 1:
            raise ValueError("evaluation point must have degree 1")
        out = at**self.d
        for i, a in enumerate(self.lower, start=1):
            out = out + self.algebra.multiply(a, at ** (self.d - i))
        return out

    def scaled(self, c) -> "MonicPoly":
        """The polynomial x^d + sum c^i a_i x^{d-i}."""
        f = self.algebra.field
        c = f.validate(c)
        return MonicPoly(
            self.algebra,
            self.d,
            tuple(a.scale(f.pow(c, i)) for i, a in enumerate(self.lower, start=1)),
        )

    def is_pure_power(self) -> bool:
        return all(a.is_zero() for a in self.lower)

    def __repr__(self):
        return f"MonicPoly(degree {self.d})"


class GradedAlgebra:
    """Shared interface: dims, elements, multiplication and derived data."""

    field: Field
    dims: tuple[int, ...]

    @property
    def sigma(self) -> int:
        """Socle degree: the largest t with a nonzero degree-t component."""
        return len(self.dims) - 1

    def dim(self, t: int) -> int:
        if 0 <= t <= self.sigma:
            return self.dims[t]
        return 0

    def multiplicity(self) -> int:
        return sum(self.dims)

    def hilbert_function(self) -> list[int]:
        return list(self.dims)

    # -- elements -------------------------------------------------------

    def element(self, degree: int, coeffs: Sequence) -> HomogeneousElement:
        n = self.dim(degree)
        coeffs = tuple(self.field.validate(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"degree-{degree} component has dimension {n}, got {len(coeffs)} coefficients")
        return HomogeneousElement(self, degree, coeffs)

    def zero(self, degree: int) -> HomogeneousElement:
        return HomogeneousElement(self, degree, (self.field.zero,) * self.dim(degree))

    def one(self) -> HomogeneousElement:
        return HomogeneousElement(self, 0, (self.field.one,))

    def basis_element(self, degree: int, index: int) -> HomogeneousElement:
        n = self.dim(degree)
        if not 0 <= index < n:
            raise IndexError("basis index out of range")
        f = self.field
        coeffs = tuple(f.one if i == index else f.zero for i in range(n))
        return HomogeneousElement(self, degree, coeffs)

    def random_element(self, degree: int, rng) -> HomogeneousElement:
        """Random coefficients over the degree-d basis; deterministic per rng state."""
        n = self.dim(degree)
        if n == 0:
            raise ValueError(f"no nonzero elements in degree {degree}")
        return HomogeneousElement(self, degree, tuple(self.field.random(rng) for _ in range(n)))

    # -- construction steps ----------------------------------------------

    def extend(self, var: str, f: MonicPoly) -> "ExtensionAlgebra":
        if f.algebra is not self:
            raise ValueError("monic polynomial defined over a different algebra")
        if var in self.variable_names():
            raise ValueError(f"variable name {var!r} already in use")
        return ExtensionAlgebra(self, var, f)

    def quotient(self, g: HomogeneousElement) -> "QuotientAlgebra":
        if g.algebra is not self:
            raise ValueError("form defined over a different algebra")
        return QuotientAlgebra(self, g)

    # -- core operations (overridden) -------------------------------------

    def multiply(self, u: HomogeneousElement, v: HomogeneousElement) -> HomogeneousElement:
        raise NotImplementedError

    def variable_names(self) -> tuple[str, ...]:
        raise NotImplementedError

    def generators(self) -> tuple[HomogeneousElement, ...]:
        """Classes of the tower variables, in adjunction order."""
        raise NotImplementedError

    def basis_labels(self, degree: int) -> tuple[str, ...]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    # -- derived data ------------------------------------------------------

    def generator(self, name: str) -> HomogeneousElement:
        for n, g in zip(self.variable_names(), self.generators()):
            if n == name:
                return g
        raise KeyError(f"no variable named {name!r}")

    def mult_map_matrix(self, w: HomogeneousElement, i: int) -> Matrix:
        """Matrix of multiplication by w from the degree-i to the degree-(i+deg w)
        component, in the stored bases."""
        if w.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        t_out = i + w.degree
        nr, nc = self.dim(t_out), self.dim(i)
        if nr == 0 or nc == 0:
            return Matrix.zeros(self.field, nr, nc)
        cols = [self.multiply(w, self.basis_element(i, idx)).coeffs for idx in range(nc)]
        # entries come straight from field arithmetic, no re-validation needed
        return Matrix(self.field, nr, nc, tuple(zip(*cols)))

    def socle_dimensions(self) -> tuple[list[int], bool]:
        """Per-degree dimension of the common kernel of all degree-1 generator
        multiplications; the algebra is Gorenstein iff the socle is a line."""
        gens = self.generators()
        socle = []
        for t in range(self.sigma + 1):
            n = self.dim(t)
            if not gens:
                socle.append(n)
                continue
            mats = [self.mult_map_matrix(g, t) for g in gens]
            stacked = Matrix.vstack(self.field, mats, n)
            socle.append(n - stacked.rank())
        return socle, sum(socle) == 1

    def fingerprint(self) -> str:
        return hashlib.sha256(self.describe().encode()).hexdigest()[:16]

    def __repr__(self):
        return f"<{self.describe()}>"


class TrivialAlgebra(GradedAlgebra):
    """The base field itself, concentrated in degree 0."""

    def __init__(self, field: Field):
        self.field = field
        self.dims = (1,)

    def multiply(self, u, v):
        _require_same_algebra(u, v)
        t = u.degree + v.degree
        if t > 0:
            return self.zero(t)
        return HomogeneousElement(self, 0, (self.field.mul(u.coeffs[0], v.coeffs[0]),))

    def variable_names(self):
        return ()

    def generators(self):
        return ()

    def basis_labels(self, degree):
        return ("1",) if degree == 0 else ()

    def describe(self):
        return repr(self.field)


def trivial_algebra(field: Field) -> TrivialAlgebra:
    return TrivialAlgebra(field)


class ExtensionAlgebra(GradedAlgebra):
    """B = A[x]/(f) for a monic homogeneous f, as a free A-module on
    1, x, ..., x^{d-1}."""

    def __init__(self, base: GradedAlgebra, var: str, f: MonicPoly):
        self.field = base.field
        self.base = base
        self.var = var
        self.relation = f
        self.d = f.d
        sigma = base.sigma + f.d - 1
        self.dims = tuple(
            sum(base.dim(t - j) for j in range(f.d)) for t in range(sigma + 1)
        )
        self._layout_cache: dict[int, list[tuple[int, int, int]]] = {}
        # x^m = sum_j rep[m][j] x^j with rep[m][j] in A_{m-j}; rows built on demand.
        self._powers: list[dict[int, HomogeneousElement]] = []

    # -- component layout --------------------------------------------------

    def _layout(self, t: int) -> list[tuple[int, int, int]]:
        """Segments (x-power j, start, end) of the degree-t coefficient vector."""
        seg = self._layout_cache.get(t)
        if seg is None:
            seg = []
            lo = 0
            for j in range(self.d):
                w = self.base.dim(t - j)
                if w:
                    seg.append((j, lo, lo + w))
                    lo += w
            self._layout_cache[t] = seg
        return seg

    def _split(self, u: HomogeneousElement) -> list[tuple[int, HomogeneousElement]]:
        parts = []
        for j, lo, hi in self._layout(u.degree):
            seg = u.coeffs[lo:hi]
            if any(seg):
                parts.append((j, HomogeneousElement(self.base, u.degree - j, seg)))
        return parts

    def _from_parts(self, degree: int, parts: dict[int, HomogeneousElement]) -> HomogeneousElement:
        coeffs: list = []
        for j, lo, hi in self._layout(degree):
            p = parts.get(j)
            if p is None:
                coeffs.extend((self.field.zero,) * (hi - lo))
            else:
                coeffs.extend(p.coeffs)
        return HomogeneousElement(self, degree, tuple(coeffs))

    # -- power reduction -----------------------------------------------------

    def _power_rep(self, m: int) -> dict[int, HomogeneousElement]:
        """x^m expressed over the module basis: slot j holds an element of
        A_{m-j}.  Built iteratively from x^d = -(a_1 x^{d-1} + ... + a_d)."""
        d = self.d
        if m < d:
            return {m: self.base.one()}
        while len(self._powers) <= m - d:
            mm = len(self._powers) + d
            prev = self._power_rep(mm - 1)
            new: dict[int, HomogeneousElement] = {}
            for jj, w in prev.items():
                if jj + 1 < d:
                    _acc_part(new, jj + 1, w)
                else:
                    for i, a in enumerate(self.relation.lower, start=1):
                        if a.is_zero():
                            continue
                        prod = self.base.multiply(w, a)
                        if not prod.is_zero():
                            _acc_part(new, d - i, -prod)
            self._powers.append(new)
        return self._powers[m - d]

    # -- ring structure ------------------------------------------------------

    def multiply(self, u, v):
        _require_same_algebra(u, v)
        if u.algebra is not self:
            raise ValueError("elements belong to a different algebra")
        t = u.degree + v.degree
        if t > self.sigma:
            return self.zero(t)
        parts: dict[int, HomogeneousElement] = {}
        for i, ub in self._split(u):
            for j, vb in self._split(v):
                prod = self.base.multiply(ub, vb)
                if prod.is_zero():
                    continue
                m = i + j
                if m < self.d:
                    _acc_part(parts, m, prod)
                else:
                    for jj, w in self._power_rep(m).items():
                        if w.is_zero():
                            continue
                        term = self.base.multiply(prod, w)
                        if not term.is_zero():
                            _acc_part(parts, jj, term)
        return self._from_parts(t, parts)

    def include(self, u: HomogeneousElement) -> HomogeneousElement:
        """Image of a base-algebra element under the inclusion into the extension."""
        if u.algebra is not self.base:
            raise ValueError("element does not belong to the base algebra")
        return self._from_parts(u.degree, {0: u})

    def variable_names(self):
        return self.base.variable_names() + (self.var,)

    def generators(self):
        lifted = tuple(self._from_parts(1, {0: g}) for g in self.base.generators())
        return lifted + (self._from_parts(1, dict(self._power_rep(1))),)

    def basis_labels(self, degree):
        labels = []
        for j, lo, hi in self._layout(degree):
            if j == 0:
                power = ""
            elif j == 1:
                power = self.var
            else:
                power = f"{self.var}^{j}"
            for bl in self.base.basis_labels(degree - j):
                if not power:
                    labels.append(bl)
                elif bl == "1":
                    labels.append(power)
                else:
                    labels.append(f"{bl}*{power}")
        return tuple(labels)

    def describe(self):
        f = self.field
        lows = ";".join(",".join(f.to_str(c) for c in a.coeffs) for a in self.relation.lower)
        return f"{self.base.describe()}[{self.var}:deg {self.d}:low {lows}]"


def _acc_part(parts: dict[int, HomogeneousElement], j: int, elem: HomogeneousElement) -> None:
    cur = parts.get(j)
    parts[j] = elem if cur is None else cur + elem


class QuotientAlgebra(GradedAlgebra):
    """B = A/(g) for a nonzero homogeneous form g of degree >= 1.

    The degree-t basis consists of the parent basis coordinates not needed to
    span g*A_{t-deg g}; projection (pi) and section (iota) matrices relative
    to the parent are stored per degree, with pi o iota = identity.
    """

    def __init__(self, parent: GradedAlgebra, g: HomogeneousElement):
        if g.is_zero():
            raise ValueError("cannot divide by the zero form")
        if g.degree < 1:
            raise ValueError("quotient form must have degree >= 1")
        self.field = parent.field
        self.parent = parent
        self.form = g
        d = g.degree
        pi: dict[int, Matrix] = {}
        iota: dict[int, Matrix] = {}
        kept: dict[int, tuple[int, ...]] = {}
        dims = []
        for t in range(parent.sigma + 1):
            n = parent.dim(t)
            if t < d:
                pi[t] = iota[t] = Matrix.identity(self.field, n)
                kept[t] = tuple(range(n))
                dims.append(n)
                continue
            image = parent.mult_map_matrix(g, t - d)
            red, pivots = image.transpose().rref()
            keep = tuple(c for c in range(n) if c not in set(pivots))
            if not keep:
                break
            f = self.field
            pi_rows = []
            for q in keep:
                row = [f.zero] * n
                row[q] = f.one
                for row_i, pc in enumerate(pivots):
                    row[pc] = f.neg(red.rows[row_i][q])
                pi_rows.append(tuple(row))
            pi[t] = Matrix(f, len(keep), n, tuple(pi_rows))
            iota_rows = tuple(
                tuple(f.one if keep[j] == r else f.zero for j in range(len(keep)))
                for r in range(n)
            )
            iota[t] = Matrix(f, n, len(keep), iota_rows)
            kept[t] = keep
            dims.append(len(keep))
        self.dims = tuple(dims)
        self._pi = pi
        self._iota = iota
        self._kept = kept

    def projection_matrix(self, t: int) -> Matrix:
        return self._pi[t]

    def section_matrix(self, t: int) -> Matrix:
        return self._iota[t]

    def lift(self, u: HomogeneousElement) -> HomogeneousElement:
        """Coset representative in the parent algebra."""
        if u.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        return self.parent.element(u.degree, self._iota[u.degree].mul_vec(u.coeffs))

    def project(self, pu: HomogeneousElement) -> HomogeneousElement:
        """Class of a parent element."""
        if pu.algebra is not self.parent:
            raise ValueError("element does not belong to the parent algebra")
        t = pu.degree
        if t > self.sigma:
            return self.zero(t)
        return HomogeneousElement(self, t, self._pi[t].mul_vec(pu.coeffs))

    def multiply(self, u, v):
        _require_same_algebra(u, v)
        if u.algebra is not self:
            raise ValueError("elements belong to a different algebra")
        t = u.degree + v.degree
        if t > self.sigma:
            return self.zero(t)
        return self.project(self.parent.multiply(self.lift(u), self.lift(v)))

    def mult_map_matrix(self, w, i):
        if w.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        t_out = i + w.degree
        nr, nc = self.dim(t_out), self.dim(i)
        if nr == 0 or nc == 0:
            return Matrix.zeros(self.field, nr, nc)
        inner = self.parent.mult_map_matrix(self.lift(w), i)
        return self._pi[t_out] @ inner @ self._iota[i]

    def variable_names(self):
        return self.parent.variable_names()

    def generators(self):
        return tuple(self.project(g) for g in self.parent.generators())

    def basis_labels(self, degree):
        if degree > self.sigma:
            return ()
        parent_labels = self.parent.basis_labels(degree)
        return tuple(parent_labels[i] for i in self._kept[degree])

    def describe(self):
        f = self.field
        coeffs = ",".join(f.to_str(c) for c in self.form.coeffs)
        return f"{self.parent.describe()}/(deg {self.form.degree}: {coeffs})"


def monomial_complete_intersection(field: Field, exponents: Sequence[int], var_prefix: str = "x") -> GradedAlgebra:
    """K[x_1, ..., x_n]/(x_1^{a_1}, ..., x_n^{a_n}) as an iterated pure-power
    extension."""
    algebra: GradedAlgebra = trivial_algebra(field)
    for i, a in enumerate(exponents, start=1):
        if a < 1:
            raise ValueError("exponents must be >= 1")
        algebra = algebra.extend(f"{var_prefix}{i}", MonicPoly.pure_power(algebra, a))
    return algebra


def check_symmetric_unimodal(h: Sequence[int]) -> tuple[bool, bool]:
    """Whether a Hilbert function is symmetric (h_i = h_{sigma-i}) and
    unimodal (nondecreasing, then nonincreasing)."""
    n = len(h)
    symmetric = all(h[i] == h[n - 1 - i] for i in range(n))
    i = 0
    while i + 1 < n and h[i] <= h[i + 1]:
        i += 1
    unimodal = all(h[j] >= h[j + 1] for j in range(i, n - 1))
    return symmetric, unimodal
