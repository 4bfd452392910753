"""Exact graded linear algebra: reduced echelon forms, ranks, kernels.

Rows are sparse ``{column: coefficient}`` dicts.  Over GF(p) the engine
does ordinary monic elimination; over the rationals it is fraction-free
(Bareiss-style cross-multiplication with content stripping), so all
intermediate entries are integers.  Reduced form is maintained
incrementally, which keeps stored rows supported on their pivot plus the
current non-pivot columns only.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .fields import Field, QQ
from .poly import Polynomial, monomials_of_degree, poly_to_row


class Echelon:
    """Incremental reduced row echelon form over an exact field.

    ``aug_base``, when set, marks columns >= aug_base as bookkeeping-only:
    rows whose support falls entirely in the augmented range are collected
    in ``kernel_rows`` instead of becoming pivots.
    """

    def __init__(self, field: Field, aug_base: int | None = None):
        self.field = field
        self.p = field.characteristic
        self.aug_base = aug_base
        self.rows: dict[int, dict] = {}
        self.touch: dict[int, set] = {}
        self.kernel_rows: list[dict] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    # -- elimination primitives --------------------------------------------
    def _eliminate(self, row: dict, c: int) -> None:
        """Remove column c from row using the stored pivot row, in place."""
        prow = self.rows[c]
        p = self.p
        if p == 0:
            a = row.pop(c)
            b = prow[c]
            g = gcd(a, b)
            a //= g
            b //= g
            if b != 1:
                for k in row:
                    row[k] *= b
            for k, v in prow.items():
                if k == c:
                    continue
                nv = row.get(k, 0) - a * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    for k in row:
                        row[k] //= g
        else:
            a = row.pop(c)
            for k, v in prow.items():
                if k == c:
                    continue
                nv = (row.get(k, 0) - a * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)

    def _normalize(self, row: dict, pivot: int) -> None:
        p = self.p
        if p == 0:
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                for k in row:
                    row[k] //= g
            if row[pivot] < 0:
                for k in row:
                    row[k] = -row[k]
        else:
            inv = pow(row[pivot], p - 2, p)
            if inv != 1:
                for k in row:
                    row[k] = row[k] * inv % p

    def _prepare(self, row: dict) -> dict:
        """Copy a row, coercing coefficients (integers over QQ)."""
        p = self.p
        if p == 0:
            lcm = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    d = v.denominator
                    lcm = lcm * d // gcd(lcm, d)
            out = {}
            for k, v in row.items():
                iv = int(v * lcm) if lcm != 1 or isinstance(v, Fraction) else v
                if iv:
                    out[k] = iv
            return out
        out = {}
        for k, v in row.items():
            iv = self.field.of(v)
            if iv:
                out[k] = iv
        return out

    # -- public operations ----------------------------------------------------
    def reduce(self, row: dict) -> dict:
        """Fully reduced residual of a row; does not modify the engine."""
        r = self._prepare(row)
        for c in sorted(k for k in r if k in self.rows):
            if c in r:
                self._eliminate(r, c)
        return r

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def insert(self, row: dict) -> int | None:
        """Insert a row; returns its pivot column, or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        pivot = min(r)
        if self.aug_base is not None and pivot >= self.aug_base:
            self.kernel_rows.append(r)
            return None
        self._normalize(r, pivot)
        affected = self.touch.get(pivot)
        if affected:
            self.rows[pivot] = r  # register first so _eliminate sees it
            for qpiv in list(affected):
                q = self.rows[qpiv]
                old = set(q)
                self._eliminate(q, pivot)
                new = set(q)
                for k in old - new:
                    s = self.touch.get(k)
                    if s:
                        s.discard(qpiv)
                for k in new - old:
                    self.touch.setdefault(k, set()).add(qpiv)
        else:
            self.rows[pivot] = r
        for k in r:
            self.touch.setdefault(k, set()).add(pivot)
        return pivot

    def insert_many(self, rows) -> None:
        for row in rows:
            self.insert(row)

    def monic_rows(self) -> dict[int, dict]:
        """Canonical reduced rows: pivot coefficient 1 (Fractions over QQ)."""
        out = {}
        if self.p == 0:
            for piv, row in self.rows.items():
                lead = row[piv]
                out[piv] = {
                    k: Fraction(v, lead) if v % lead else v // lead
                    for k, v in row.items()
                }
        else:
            out = {piv: dict(row) for piv, row in self.rows.items()}
        return out

    def reduce_exact(self, row: dict) -> dict:
        """Normal form with true field coefficients (no row rescaling)."""
        p = self.p
        if p != 0:
            return self.reduce(row)
        r = {k: v if isinstance(v, Fraction) else Fraction(v) for k, v in row.items() if v}
        for c in sorted(k for k in r if k in self.rows):
            if c not in r:
                continue
            prow = self.rows[c]
            factor = r.pop(c) / prow[c]
            for k, v in prow.items():
                if k == c:
                    continue
                nv = r.get(k, 0) - factor * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r


def span_and_kernel(rows: list[dict], field: Field, ncols: int) -> tuple[Echelon, list[dict]]:
    """Echelon of the span plus a basis of the left-kernel.

    Kernel rows are combinations over the *row index* space: a returned
    ``{i: c}`` means ``sum_i c * rows[i] == 0``.
    """
    ech = Echelon(field, aug_base=ncols)
    one = 1
    for i, row in enumerate(rows):
        r = dict(row)
        r[ncols + i] = one
        ech.insert(r)
    kernel = [
        {k - ncols: v for k, v in krow.items()} for krow in ech.kernel_rows
    ]
    return ech, kernel


class GradedBasis:
    """Reduced-echelon basis of a subspace of the degree-d component.

    Vectors are homogeneous of degree ``degree``; leading monomials are
    strictly decreasing and each leading monomial occurs in exactly one
    vector (reduced form), which makes the representation canonical.
    """

    def __init__(self, nvars: int, degree: int, field: Field, rows: dict[int, dict]):
        self.nvars = nvars
        self.degree = degree
        self.field = field
        self.rows = rows  # pivot column -> monic reduced row

    @staticmethod
    def from_echelon(ech: Echelon, nvars: int, degree: int) -> "GradedBasis":
        return GradedBasis(nvars, degree, ech.field, ech.monic_rows())

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def pivot_columns(self) -> list[int]:
        return sorted(self.rows)

    def vectors(self) -> list[Polynomial]:
        monos = monomials_of_degree(self.nvars, self.degree)
        out = []
        for piv in sorted(self.rows):
            terms = {monos[j]: c for j, c in self.rows[piv].items()}
            out.append(Polynomial(self.nvars, self.field, terms))
        return out

    def _row_of(self, p: Polynomial) -> dict:
        if p.nvars != self.nvars:
            raise ValueError("ring dimension mismatch")
        return poly_to_row(p.map_field(self.field), self.degree)

    def reduce_poly(self, p: Polynomial) -> Polynomial:
        """Canonical normal form of p modulo this subspace."""
        ech = self._as_field_echelon()
        row = ech.reduce_exact(self._row_of(p))
        monos = monomials_of_degree(self.nvars, self.degree)
        return Polynomial(self.nvars, self.field, {monos[j]: c for j, c in row.items()})

    def contains(self, p: Polynomial) -> bool:
        return self.reduce_poly(p).is_zero()

    def _as_field_echelon(self) -> Echelon:
        ech = Echelon.__new__(Echelon)
        ech.field = self.field
        ech.p = self.field.characteristic
        ech.aug_base = None
        ech.rows = self.rows
        ech.touch = {}
        ech.kernel_rows = []
        return ech

    def __eq__(self, other):
        return (
            isinstance(other, GradedBasis)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        return (
            f"GradedBasis(nvars={self.nvars}, degree={self.degree}, "
            f"field={self.field}, dimension={self.dimension})"
        )


def echelon_span(polys, d: int, field: Field | None = None, nvars: int | None = None) -> GradedBasis:
    """Reduced echelon basis of the span of homogeneous degree-d polynomials.

    Inhomogeneous inputs, mixed degrees, and mixed rings are rejected.
    """
    polys = list(polys)
    nonzero = [p for p in polys if not p.is_zero()]
    if field is None:
        field = nonzero[0].field if nonzero else (polys[0].field if polys else QQ)
    if nvars is None:
        if not polys:
            raise ValueError("cannot infer ring dimension from an empty list")
        nvars = polys[0].nvars
    ech = Echelon(field)
    for p in nonzero:
        if p.nvars != nvars:
            raise ValueError("mixed ring dimensions")
        if p.field != field:
            raise ValueError("mixed coefficient fields")
        deg = p.homogeneous_degree()
        if deg != d:
            raise ValueError(f"expected homogeneous degree {d}, got {deg}")
        ech.insert(poly_to_row(p, d))
    return GradedBasis.from_echelon(ech, nvars, d)


def intersect_spans(bases: list[GradedBasis]) -> GradedBasis:
    """Reduced basis of the intersection of subspaces of one graded piece."""
    if not bases:
        raise ValueError("intersection of an empty family is the whole space")
    first = bases[0]
    for b in bases[1:]:
        if (b.nvars, b.degree, b.field) != (first.nvars, first.degree, first.field):
            raise ValueError("bases live in different graded components")
    ncols = len(monomials_of_degree(first.nvars, first.degree))
    current = first
    for other in bases[1:]:
        vrows = [current.rows[piv] for piv in sorted(current.rows)]
        wrows = [other.rows[piv] for piv in sorted(other.rows)]
        _, kernel = span_and_kernel(vrows + wrows, first.field, ncols)
        ech = Echelon(first.field)
        r = len(vrows)
        for combo in kernel:
            vec: dict = {}
            fld = first.field
            for i, c in combo.items():
                if i >= r:
                    continue
                for k, v in vrows[i].items():
                    nv = vec.get(k, 0) + c * v if fld.characteristic == 0 else (
                        vec.get(k, 0) + c * v
                    ) % fld.characteristic
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
            if vec:
                ech.insert(vec)
        current = GradedBasis.from_echelon(ech, first.nvars, first.degree)
    return current


# -- dense modular rank (numpy fast path) --------------------------------------


def rank_dense_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by dense vectorized elimination."""
    a = np.array(matrix, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        rest = np.nonzero(a[r + 1 :, c])[0]
        if rest.size:
            rows = rest + r + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        r += 1
    return r


def rank_sparse(rows, field: Field) -> int:
    ech = Echelon(field)
    for row in rows:
        ech.insert(row)
    return ech.rank
