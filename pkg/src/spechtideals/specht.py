"""Specht polynomials, generator systems, and the two-row reduction calculus.

A Specht polynomial is the product over columns of the Vandermonde
difference product of the column's variables.  For two-row shapes the
column-equivalence classes are (pairs, singletons) structures; this module
implements the three-term relation, quasi-h-standard straightening, the
sorting permutation reduction, and the full membership replay that
rewrites x^a * (combination of Specht polynomials) lying in the squarefree
ideal I_<d> as an explicit combination of frJ generators, with a
machine-checked certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .fields import Field, QQ
from .linalg import echelon_span
from .poly import Monomial, Polynomial, mono_support
from .tableaux import (
    NATURAL,
    LetterOrder,
    Partition,
    Tableau,
    enumerate_standard_tableaux,
)


# ---------------------------------------------------------------------------
# Specht polynomials of general tableaux


def specht_poly(t: Tableau, fld: Field = QQ) -> Polynomial:
    """Product over columns of the difference product, in t.n variables.

    Single-box columns contribute the factor 1.
    """
    n = t.n
    out = Polynomial.constant(n, 1, fld)
    for col in t.columns():
        for s, u in combinations(col, 2):
            out = out * (
                Polynomial.variable(n, s - 1, fld) - Polynomial.variable(n, u - 1, fld)
            )
    return out


def specht_poly_degree(shape: Partition) -> int:
    """Common degree of all Specht polynomials of the shape."""
    return sum(c * (c - 1) // 2 for c in shape.conjugate())


def supp(p: Polynomial) -> set:
    """Squarefree monomials dividing some nonzero term (the empty product 1
    included); supp(0) is empty by convention."""
    out: set = set()
    seen: set = set()
    for m in p.terms:
        s = mono_support(m)
        if s in seen:
            continue
        seen.add(s)
        vars_ = sorted(s)
        for r in range(len(vars_) + 1):
            for sub in combinations(vars_, r):
                e = [0] * p.nvars
                for i in sub:
                    e[i] = 1
                out.add(tuple(e))
    return out


def independence_rank(shape: Partition, fld: Field = QQ) -> int:
    """Rank of the standard Specht polynomials; equals the standard tableau
    count in every characteristic."""
    polys = [specht_poly(t, fld) for t in enumerate_standard_tableaux(shape)]
    return echelon_span(polys, specht_poly_degree(shape)).dimension


@dataclass(frozen=True)
class SpechtSystem:
    """Generator system of a Specht ideal: standard tableaux with their
    polynomials, all homogeneous of the common column degree."""

    shape: Partition
    field: Field
    generators: tuple[tuple[Tableau, Polynomial], ...]

    @staticmethod
    def build(shape: Partition, fld: Field = QQ, order: LetterOrder = NATURAL) -> "SpechtSystem":
        gens = []
        d = specht_poly_degree(shape)
        for t in enumerate_standard_tableaux(shape, order):
            f = specht_poly(t, fld)
            if f.homogeneous_degree() != d:
                raise AssertionError("Specht polynomial with unexpected degree")
            gens.append((t, f))
        return SpechtSystem(shape, fld, tuple(gens))


# ---------------------------------------------------------------------------
# Two-row column-equivalence classes


@dataclass(frozen=True)
class TwoRowClass:
    """Column-equivalence class of a two-row tableau.

    ``pairs`` are the two-box columns as (lo, hi), sorted by lo;
    ``singletons`` are the one-box column letters, sorted.  This is the
    canonical representative: its Specht polynomial is the product of
    (x_lo - x_hi) over the pairs.
    """

    nvars: int
    pairs: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]

    def __post_init__(self):
        letters = [v for p in self.pairs for v in p] + list(self.singletons)
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letters in {self.pairs} / {self.singletons}")
        if letters and not (1 <= min(letters) and max(letters) <= self.nvars):
            raise ValueError("letters out of range")
        if any(lo >= hi for lo, hi in self.pairs):
            raise ValueError("pairs must be (lo, hi) with lo < hi")
        if any(
            self.pairs[i][0] >= self.pairs[i + 1][0] for i in range(len(self.pairs) - 1)
        ):
            raise ValueError("pairs must be sorted by lo")
        if any(
            self.singletons[i] >= self.singletons[i + 1]
            for i in range(len(self.singletons) - 1)
        ):
            raise ValueError("singletons must be sorted")

    def f(self, fld: Field = QQ) -> Polynomial:
        out = Polynomial.constant(self.nvars, 1, fld)
        for lo, hi in self.pairs:
            out = out * (
                Polynomial.variable(self.nvars, lo - 1, fld)
                - Polynomial.variable(self.nvars, hi - 1, fld)
            )
        return out

    def to_tableau(self) -> Tableau:
        row1 = tuple(lo for lo, _ in self.pairs) + self.singletons
        row2 = tuple(hi for _, hi in self.pairs)
        return Tableau((row1, row2) if row2 else (row1,))

    def text(self) -> str:
        pairs = " ".join(f"{lo}:{hi}" for lo, hi in self.pairs)
        singles = ",".join(str(s) for s in self.singletons)
        return f"[{pairs} | {singles}]"


def make_class(nvars: int, pairs, singletons) -> tuple[TwoRowClass, int]:
    """Canonicalize raw (top, bottom) pairs; returns (class, sign)."""
    sign = 1
    norm = []
    for a, b in pairs:
        if a > b:
            a, b = b, a
            sign = -sign
        norm.append((a, b))
    norm.sort()
    return TwoRowClass(nvars, tuple(norm), tuple(sorted(singletons))), sign


def tableau_to_class(t: Tableau) -> tuple[TwoRowClass, int]:
    """Column class of a one- or two-row tableau, with the sign of the
    in-column normalization."""
    if len(t.rows) > 2:
        raise ValueError("two-row machinery needs a one- or two-row tableau")
    row1 = t.rows[0]
    row2 = t.rows[1] if len(t.rows) > 1 else ()
    pairs = [(row1[j], row2[j]) for j in range(len(row2))]
    singles = row1[len(row2) :]
    return make_class(t.n, pairs, singles)


def all_two_row_classes(nvars: int, npairs: int) -> list[TwoRowClass]:
    """All column classes of two-row tableaux with the given pair count,
    using every letter 1..nvars."""
    letters = tuple(range(1, nvars + 1))
    out = []
    for pair_support in combinations(letters, 2 * npairs):
        singles = tuple(v for v in letters if v not in set(pair_support))
        for pairs in _matchings(pair_support):
            out.append(TwoRowClass(nvars, pairs, singles))
    return out


def _matchings(letters: tuple[int, ...]):
    if not letters:
        yield ()
        return
    a = letters[0]
    for i in range(1, len(letters)):
        b = letters[i]
        rest = letters[1:i] + letters[i + 1 :]
        for sub in _matchings(rest):
            yield ((a, b),) + sub


# ---------------------------------------------------------------------------
# The X / Y / Z frame for the prefix monomial x^a = x_1 ... x_k


def in_X(cls: TwoRowClass, k: int) -> bool:
    """x_1...x_k divides a term of f, i.e. 1..k sit in k distinct pairs."""
    if k > len(cls.pairs):
        return False
    return all(cls.pairs[l][0] == l + 1 for l in range(k))


def frame_parts(cls: TwoRowClass, k: int):
    """(prefix bottoms j_1..j_k, mid pairs, singletons) of an X-member."""
    if not in_X(cls, k):
        raise ValueError(f"{cls.text()} is not in X for prefix k={k}")
    bots = tuple(hi for _, hi in cls.pairs[:k])
    return bots, cls.pairs[k:], cls.singletons


def h_poly(cls: TwoRowClass, k: int, fld: Field = QQ) -> Polynomial:
    """Product of (x_i - x_j) over the non-prefix pairs."""
    _, mid, _ = frame_parts(cls, k)
    out = Polynomial.constant(cls.nvars, 1, fld)
    for lo, hi in mid:
        out = out * (
            Polynomial.variable(cls.nvars, lo - 1, fld)
            - Polynomial.variable(cls.nvars, hi - 1, fld)
        )
    return out


def in_Y(cls: TwoRowClass, k: int) -> bool:
    """Quasi-h-standard: the tableau on (mid pairs, singletons) is standard."""
    _, mid, singles = frame_parts(cls, k)
    bots = [hi for _, hi in mid]
    if any(bots[i] >= bots[i + 1] for i in range(len(bots) - 1)):
        return False
    if mid and singles and mid[-1][0] > singles[0]:
        return False
    return True


def in_Z(cls: TwoRowClass, k: int) -> bool:
    """h-standard: additionally every singleton precedes the sorted prefix
    bottoms."""
    if not in_Y(cls, k):
        return False
    bots, _, singles = frame_parts(cls, k)
    if any(bots[i] >= bots[i + 1] for i in range(len(bots) - 1)):
        return False
    if singles and bots and singles[-1] > bots[0]:
        return False
    return True


# ---------------------------------------------------------------------------
# Three-term relation and straightening


def three_term_split(t: Tableau, pair_col: int, single_col: int) -> tuple[Tableau, Tableau]:
    """Split f_T = f_T1 + f_T2 along a length-2 column and a singleton column.

    For the column (i over j) and singleton k: T1 carries (i over k) with
    singleton j, T2 carries (k over j) with singleton i.  The identity holds
    literally, without sign normalization.
    """
    if len(t.rows) != 2:
        raise ValueError("three-term split needs a two-row tableau")
    row1, row2 = list(t.rows[0]), list(t.rows[1])
    if not (0 <= pair_col < len(row2)):
        raise ValueError(f"column {pair_col} is not a length-2 column")
    if not (len(row2) <= single_col < len(row1)):
        raise ValueError(f"column {single_col} is not a singleton column")
    i, j, s = row1[pair_col], row2[pair_col], row1[single_col]
    t1_row1, t1_row2 = list(row1), list(row2)
    t1_row2[pair_col] = s
    t1_row1[single_col] = j
    t2_row1, t2_row2 = list(row1), list(row2)
    t2_row1[pair_col] = s
    t2_row1[single_col] = i
    return (
        Tableau((tuple(t1_row1), tuple(t1_row2))),
        Tableau((tuple(t2_row1), tuple(t2_row2))),
    )


def _merge(acc: dict, cls: TwoRowClass, coeff: int):
    c = acc.get(cls, 0) + coeff
    if c:
        acc[cls] = c
    else:
        acc.pop(cls, None)


def straighten_quasi_h(cls: TwoRowClass, k: int) -> list[tuple[int, TwoRowClass]]:
    """Rewrite f_T as a +/-1 combination of quasi-h-standard classes.

    The prefix (tops 1..k and their bottoms) is left untouched; every output
    singleton tuple dominates the input's coordinate-wise.
    """
    acc: dict = {}
    _straighten(cls, k, 1, acc, 0)
    return [(c, t) for t, c in acc.items()]


_MAX_STRAIGHTEN_DEPTH = 10_000


def _straighten(cls: TwoRowClass, k: int, coeff: int, acc: dict, depth: int):
    if depth > _MAX_STRAIGHTEN_DEPTH:
        raise RuntimeError("straightening recursion exceeded its depth bound")
    bots_pref, mid, singles = frame_parts(cls, k)
    mid_bots = [hi for _, hi in mid]
    for idx in range(1, len(mid)):
        if mid_bots[idx - 1] > mid_bots[idx]:
            (i1, j1), (i2, j2) = mid[idx - 1], mid[idx]
            # f = f_a - f_b with bottoms swapped / tops and bottoms regrouped
            pa = mid[: idx - 1] + ((i1, j2), (i2, j1)) + mid[idx + 1 :]
            pb = mid[: idx - 1] + ((i1, i2), (j2, j1)) + mid[idx + 1 :]
            ta = TwoRowClass(cls.nvars, cls.pairs[:k] + pa, singles)
            tb = TwoRowClass(
                cls.nvars, cls.pairs[:k] + tuple(sorted(pb)), singles
            )
            _straighten(ta, k, coeff, acc, depth + 1)
            _straighten(tb, k, -coeff, acc, depth + 1)
            return
    if mid and singles and mid[-1][0] > singles[0]:
        i, j = mid[-1]
        v = singles[0]  # v < i < j
        rest = singles[1:]
        pc = tuple(sorted(mid[:-1] + ((v, j),)))
        pd = tuple(sorted(mid[:-1] + ((v, i),)))
        tc = TwoRowClass(
            cls.nvars, cls.pairs[:k] + pc, tuple(sorted(rest + (i,)))
        )
        td = TwoRowClass(
            cls.nvars, cls.pairs[:k] + pd, tuple(sorted(rest + (j,)))
        )
        _straighten(tc, k, coeff, acc, depth + 1)
        _straighten(td, k, -coeff, acc, depth + 1)
        return
    _merge(acc, cls, coeff)


@dataclass(frozen=True)
class TwoRowFrame:
    """The X / Y / Z sets for lambda = (n-d, d) and the prefix x_1..x_k.

    Classes live in Tab(mu) for mu = (n-d, d-1) on the letters 1..n-1.
    """

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.d < 2 or self.n - self.d < self.d:
            raise ValueError("frame needs lambda = (n-d, d) with n >= 2d, d >= 2")
        if not 1 <= self.k <= self.d - 1:
            raise ValueError("prefix length must satisfy 1 <= k <= d-1")

    @property
    def nvars(self) -> int:
        return self.n - 1

    @property
    def npairs(self) -> int:
        return self.d - 1

    def X(self) -> list[TwoRowClass]:
        return [
            c for c in all_two_row_classes(self.nvars, self.npairs) if in_X(c, self.k)
        ]

    def Y(self) -> list[TwoRowClass]:
        return [c for c in self.X() if in_Y(c, self.k)]

    def Z(self) -> list[TwoRowClass]:
        return [c for c in self.X() if in_Z(c, self.k)]


def sigma_reduce(cls: TwoRowClass, k: int) -> tuple[dict, TwoRowClass]:
    """The sorting permutation on singletons and prefix bottoms.

    Returns (sigma as a value map, the relabeled class).  sigma is the
    identity exactly when the class is h-standard.
    """
    bots, mid, singles = frame_parts(cls, k)
    values = sorted(singles + bots)
    new_singles = tuple(values[: len(singles)])
    new_bots = tuple(values[len(singles) :])
    sigma = {}
    for old, new in zip(singles + bots, new_singles + new_bots):
        if old != new:
            sigma[old] = new
    prefix = tuple((l + 1, new_bots[l]) for l in range(k))
    out = TwoRowClass(cls.nvars, prefix + mid, new_singles)
    return sigma, out


# ---------------------------------------------------------------------------
# frJ generator contexts and membership certificates


class TwoRowFrJ:
    """The ideal frJ = (x_i f_T : T in Tab(mu), x_i not in supp f_T) for a
    two-row mu; generators indexed canonically."""

    def __init__(self, nvars: int, npairs: int, fld: Field):
        self.nvars = nvars
        self.npairs = npairs
        self.field = fld
        self.classes = all_two_row_classes(nvars, npairs)
        self.gens: list[tuple[int, TwoRowClass]] = []
        self.index: dict = {}
        for cls in self.classes:
            for i in cls.singletons:
                self.index[(i, cls)] = len(self.gens)
                self.gens.append((i, cls))

    def gen_poly(self, idx: int) -> Polynomial:
        i, cls = self.gens[idx]
        return Polynomial.variable(self.nvars, i - 1, self.field) * cls.f(self.field)

    def gen_index(self, i: int, cls: TwoRowClass) -> int:
        key = (i, cls)
        if key not in self.index:
            raise KeyError(f"x_{i} * f{cls.text()} is not an frJ generator")
        return self.index[key]

    def generator_polynomials(self) -> list[Polynomial]:
        return [self.gen_poly(i) for i in range(len(self.gens))]


class AA1FrJ:
    """The §4-style ideal (x_i x_j f_T : T in Tab((a,a)), (i,j) a column)."""

    def __init__(self, a: int, fld: Field):
        self.a = a
        self.nvars = 2 * a
        self.field = fld
        self.classes = all_two_row_classes(self.nvars, a)
        self.gens: list[tuple[tuple[int, int], TwoRowClass]] = []
        self.index: dict = {}
        for cls in self.classes:
            for pair in cls.pairs:
                self.index[(pair, cls)] = len(self.gens)
                self.gens.append((pair, cls))

    def gen_poly(self, idx: int) -> Polynomial:
        (i, j), cls = self.gens[idx]
        return (
            Polynomial.variable(self.nvars, i - 1, self.field)
            * Polynomial.variable(self.nvars, j - 1, self.field)
            * cls.f(self.field)
        )

    def generator_polynomials(self) -> list[Polynomial]:
        return [self.gen_poly(i) for i in range(len(self.gens))]


@dataclass
class MembershipCertificate:
    """An explicit expression of the target in frJ generators.

    ``combination`` entries are (coefficient, monomial, generator index);
    the symbolic identity sum coeff * x^mono * gen == target is verified on
    construction.
    """

    target: Polynomial
    combination: list[tuple[object, Monomial, int]]
    context: object
    trace: list[str] = dc_field(default_factory=list)

    def combination_polynomials(self) -> list[tuple[Polynomial, int]]:
        fld = self.target.field
        n = self.target.nvars
        return [
            (Polynomial(n, fld, {mono: coeff}), idx)
            for coeff, mono, idx in self.combination
        ]

    def reconstruction(self) -> Polynomial:
        total = Polynomial.zero(self.target.nvars, self.target.field)
        for coeff_poly, idx in self.combination_polynomials():
            total = total + coeff_poly * self.context.gen_poly(idx)
        return total

    def verify(self) -> bool:
        return self.reconstruction() == self.target

    def trace_text(self) -> str:
        return "\n".join(self.trace)


def _monomial_of_letters(nvars: int, letters) -> Monomial:
    e = [0] * nvars
    for i in letters:
        e[i - 1] = 1
    return tuple(e)


def _in_squarefree_ideal(p: Polynomial, d: int) -> bool:
    """Membership in the ideal of all degree-d squarefree monomials."""
    return all(len(mono_support(m)) >= d for m in p.terms)


def _support_lemma_terms(cls: TwoRowClass, k: int, coeff, ctx: TwoRowFrJ, trace: list):
    """Certificate terms for x^a f_T in frJ when x^a is not in supp(f_T)."""
    fld = ctx.field
    prefix = set(range(1, k + 1))
    single_hits = prefix & set(cls.singletons)
    if single_hits:
        i = min(single_hits)
        mono = _monomial_of_letters(cls.nvars, prefix - {i})
        trace.append(f"phase0 direct x_{i} free in {cls.text()} coeff={coeff}")
        return [(coeff, mono, ctx.gen_index(i, cls))]
    shared = [
        (lo, hi) for lo, hi in cls.pairs if lo in prefix and hi in prefix
    ]
    if not shared:
        raise AssertionError("class unexpectedly lies in X")
    i, j = shared[0]
    s = cls.singletons[0]  # s > k since all of 1..k sit in pairs
    others = tuple(p for p in cls.pairs if p != (i, j))
    c1 = TwoRowClass(
        cls.nvars,
        tuple(sorted(others + ((i, s),))),
        tuple(sorted(set(cls.singletons) - {s} | {j})),
    )
    c2 = TwoRowClass(
        cls.nvars,
        tuple(sorted(others + ((j, s),))),
        tuple(sorted(set(cls.singletons) - {s} | {i})),
    )
    trace.append(
        f"phase0 three-term {cls.text()} -> +{c1.text()} -{c2.text()} "
        f"via singleton {s} coeff={coeff}"
    )
    return [
        (coeff, _monomial_of_letters(cls.nvars, prefix - {j}), ctx.gen_index(j, c1)),
        (
            fld.neg(coeff),
            _monomial_of_letters(cls.nvars, prefix - {i}),
            ctx.gen_index(i, c2),
        ),
    ]


def replay_radical_reduction(
    shape: Partition,
    prefix: Monomial | int,
    coeffs: dict,
    fld: Field = QQ,
) -> MembershipCertificate:
    """Replay the two-operation rewriting for lambda = (n-d, d).

    ``prefix`` is the squarefree monomial x^a over n-1 variables (or the
    integer k for x_1...x_k); ``coeffs`` maps two-row classes (or two-row
    tableaux) of shape mu = (n-d, d-1) on the letters 1..n-1 to field
    elements.  The input phi = x^a * sum c_T f_T must lie in I_<d>; the
    returned certificate expresses phi in frJ generators and is verified
    symbolically.
    """
    if shape.length != 2:
        raise ValueError("replay handles two-row shapes (n-d, d)")
    n = shape.n
    d = shape.parts[1]
    if d < 2:
        raise ValueError("the reduction starts at d >= 2")
    nvars = n - 1
    npairs = d - 1
    if isinstance(prefix, int):
        letters = tuple(range(1, prefix + 1))
        prefix = _monomial_of_letters(nvars, letters)
    else:
        prefix = tuple(prefix)
        if len(prefix) != nvars or any(e not in (0, 1) for e in prefix):
            raise ValueError("prefix must be a squarefree monomial in n-1 variables")
        letters = tuple(i + 1 for i, e in enumerate(prefix) if e)
    if letters and letters != tuple(range(1, len(letters) + 1)):
        return _replay_relabelled(shape, letters, coeffs, fld)
    k = len(letters)
    if k > d - 1:
        raise ValueError(f"prefix length {k} exceeds d-1 = {d - 1}")

    current: dict = {}
    for key, c in coeffs.items():
        if isinstance(key, Tableau):
            cls, sgn = tableau_to_class(key)
            c = fld.mul(fld.of(c), sgn)
        else:
            cls = key
            c = fld.of(c)
        if (
            len(cls.pairs) != npairs
            or cls.nvars != nvars
            or 2 * npairs + len(cls.singletons) != nvars
        ):
            raise ValueError(f"{cls.text()} does not have shape mu=(n-d, d-1)")
        if c != 0:
            current[cls] = fld.add(current.get(cls, 0), c)
    current = {t: c for t, c in current.items() if c != 0}

    xa = Polynomial.monomial(nvars, prefix, 1, fld)
    phi = Polynomial.zero(nvars, fld)
    for cls, c in current.items():
        phi = phi + (xa * cls.f(fld)).scale(c)
    if not _in_squarefree_ideal(phi, d):
        raise ValueError("phi is not in the squarefree ideal I_<d>")

    ctx = TwoRowFrJ(nvars, npairs, fld)
    trace: list[str] = [f"target shape={shape} prefix=x_1..x_{k}"]
    terms: list = []

    # Phase 0: classes outside X go straight to frJ by the support lemma.
    outside = [cls for cls in current if not in_X(cls, k)]
    for cls in outside:
        terms.extend(_support_lemma_terms(cls, k, current.pop(cls), ctx, trace))

    round_no = 0
    while current:
        round_no += 1
        # Operation 1: straighten onto quasi-h-standard classes.
        nxt: dict = {}
        for cls, c in current.items():
            for sgn, out_cls in straighten_quasi_h(cls, k):
                v = fld.add(nxt.get(out_cls, 0), fld.mul(c, sgn))
                if v:
                    nxt[out_cls] = v
                else:
                    nxt.pop(out_cls, None)
        current = nxt
        trace.append(f"round {round_no} op1 support={len(current)}")
        if not current:
            break
        # Invariant check: sum of coefficients times h_T vanishes.
        h_total = Polynomial.zero(nvars, fld)
        for cls, c in current.items():
            h_total = h_total + h_poly(cls, k, fld).scale(c)
        if not h_total.is_zero():
            raise RuntimeError("h-relation violated; implementation bug")
        trace.append(f"round {round_no} h-relation ok")
        if all(in_Z(cls, k) for cls in current):
            raise RuntimeError(
                "nonzero coefficients supported on Z contradict standard "
                "independence; implementation bug"
            )
        # Operation 2: apply the sorting permutation, emitting frJ terms.
        nxt = {}
        for cls, c in current.items():
            sigma, target_cls = sigma_reduce(cls, k)
            if sigma:
                old = sorted(hi for _, hi in cls.pairs[:k])
                new = sorted(hi for _, hi in target_cls.pairs[:k])
                raised = all(a <= b for a, b in zip(old, new)) and (
                    new > old or in_Z(target_cls, k)
                )
                if not raised:
                    raise RuntimeError(
                        "operation 2 failed to raise the prefix bottoms"
                    )
                trace.append(
                    f"round {round_no} op2 {cls.text()} jvec {old}->{new} "
                    f"coeff={c} -> {target_cls.text()}"
                )
                terms.extend(_sigma_move_terms(cls, k, c, ctx, trace))
            v = fld.add(nxt.get(target_cls, 0), c)
            if v:
                nxt[target_cls] = v
            else:
                nxt.pop(target_cls, None)
        current = nxt

    cert = MembershipCertificate(phi, terms, ctx, trace)
    if not cert.verify():
        raise RuntimeError("certificate failed symbolic verification")
    return cert


def _sigma_move_terms(cls: TwoRowClass, k: int, coeff, ctx: TwoRowFrJ, trace: list):
    """Transposition chain realizing sigma_T, one frJ term per move."""
    fld = ctx.field
    nvars = cls.nvars
    bots, mid, singles = frame_parts(cls, k)
    bots = list(bots)
    singles = list(singles)
    values = sorted(singles + bots)
    target_bots = values[len(singles) :]
    prefix_all = set(range(1, k + 1))
    terms = []

    def rebuild() -> TwoRowClass:
        prefix_pairs = tuple((l + 1, bots[l]) for l in range(k))
        return TwoRowClass(nvars, prefix_pairs + mid, tuple(sorted(singles)))

    def swap(s_val: int, l: int):
        """Swap singleton value s_val with the bottom of prefix column l+1."""
        w = bots[l]
        state = rebuild()
        other_pairs = tuple(p for p in state.pairs if p != (l + 1, w))
        lo, hi = min(s_val, w), max(s_val, w)
        sign = 1 if s_val < w else -1
        witness = TwoRowClass(
            nvars,
            tuple(sorted(other_pairs + ((lo, hi),))),
            tuple(sorted((set(singles) - {s_val}) | {l + 1})),
        )
        mono = _monomial_of_letters(nvars, prefix_all - {l + 1})
        terms.append((fld.mul(coeff, sign), mono, ctx.gen_index(l + 1, witness)))
        singles.remove(s_val)
        singles.append(w)
        bots[l] = s_val

    for l in range(k):
        t = target_bots[l]
        if bots[l] == t:
            continue
        if t in singles:
            swap(t, l)
        else:
            l2 = bots.index(t)
            swap(singles[0], l2)
            swap(t, l)
    if sorted(bots) != list(bots) or bots != target_bots:
        raise AssertionError("sigma move chain did not reach the sorted state")
    return terms


def _replay_relabelled(shape: Partition, letters, coeffs: dict, fld: Field):
    """Conjugate a general squarefree prefix to x_1..x_k, replay, map back."""
    nvars = shape.n - 1
    k = len(letters)
    perm = {}
    rest = [i for i in range(1, nvars + 1) if i not in set(letters)]
    for pos, letter in enumerate(letters):
        perm[letter] = pos + 1
    for pos, letter in enumerate(rest):
        perm[letter] = k + 1 + pos
    inv = {v: u for u, v in perm.items()}

    def relabel(cls: TwoRowClass, mapping) -> tuple[TwoRowClass, int]:
        pairs = [(mapping[a], mapping[b]) for a, b in cls.pairs]
        singles = [mapping[s] for s in cls.singletons]
        return make_class(nvars, pairs, singles)

    moved: dict = {}
    for key, c in coeffs.items():
        if isinstance(key, Tableau):
            key, sgn = tableau_to_class(key)
            c = fld.mul(fld.of(c), sgn)
        cls2, sgn = relabel(key, perm)
        c = fld.mul(fld.of(c), sgn)
        moved[cls2] = fld.add(moved.get(cls2, 0), c)
    cert = replay_radical_reduction(shape, k, moved, fld)

    ctx = TwoRowFrJ(nvars, shape.parts[1] - 1, fld)
    back_terms = []
    for coeff, mono, idx in cert.combination:
        i, cls = cert.context.gens[idx]
        cls_back, sgn = relabel(cls, inv)
        mono_back = _monomial_of_letters(
            nvars, [inv[j + 1] for j, e in enumerate(mono) if e]
        )
        back_terms.append(
            (fld.mul(coeff, sgn), mono_back, ctx.gen_index(inv[i], cls_back))
        )
    xa = Polynomial.monomial(nvars, _monomial_of_letters(nvars, letters), 1, fld)
    phi = Polynomial.zero(nvars, fld)
    for key, c in coeffs.items():
        if isinstance(key, Tableau):
            key, sgn = tableau_to_class(key)
            c = fld.mul(fld.of(c), sgn)
        phi = phi + (xa * key.f(fld)).scale(c)
    out = MembershipCertificate(
        phi, back_terms, ctx, cert.trace + [f"relabelled prefix {letters}"]
    )
    if not out.verify():
        raise RuntimeError("relabelled certificate failed verification")
    return out


# ---------------------------------------------------------------------------
# The (a, a, 1) variant: W-restriction plus h-independence


def aa1_h_and_bar(cls: TwoRowClass, k: int, fld: Field = QQ) -> tuple[Polynomial, Polynomial, int]:
    """h_T, the reversed-frame Specht polynomial, and the sign relating them.

    For an (a,a) class with prefix k, h_T equals sign * f of the tableau
    whose first row lists the bottoms in reverse and whose second row lists
    the non-prefix tops in reverse.
    """
    bots, mid, _ = frame_parts(cls, k)
    h = h_poly(cls, k, fld)
    row1 = tuple(hi for _, hi in reversed(cls.pairs))
    row2 = tuple(lo for lo, _ in reversed(mid))
    out = Polynomial.constant(cls.nvars, 1, fld)
    for j in range(len(row2)):
        out = out * (
            Polynomial.variable(cls.nvars, row1[j] - 1, fld)
            - Polynomial.variable(cls.nvars, row2[j] - 1, fld)
        )
    sign = 1 if (len(mid)) % 2 == 0 else -1
    return h, out, sign


def replay_aa1_reduction(
    a: int, k: int, coeffs: dict, fld: Field = QQ
) -> MembershipCertificate:
    """W-restriction replay for lambda = (a, a, 1) (surjected to mu = (a, a)).

    psi = x_1..x_k * sum c_T f_T over Tab((a,a)) classes on 2a letters must
    lie in I_<a+1>; the certificate expresses psi in the x_i x_j f_T
    generators.  After straightening, every class outside W contributes a
    single generator term, and the W-supported remainder must vanish by the
    independence of the h polynomials.
    """
    nvars = 2 * a
    if not 0 <= k <= a:
        raise ValueError("prefix length must be between 0 and a")
    fldof = fld.of
    current: dict = {}
    for key, c in coeffs.items():
        if isinstance(key, Tableau):
            key, sgn = tableau_to_class(key)
            c = fld.mul(fldof(c), sgn)
        if len(key.pairs) != a or key.nvars != nvars:
            raise ValueError(f"bad class for mu=(a,a): {key.text()}")
        c = fldof(c)
        if c:
            current[key] = fld.add(current.get(key, 0), c)
    current = {t: c for t, c in current.items() if c}

    prefix = tuple(range(1, k + 1))
    xa = Polynomial.monomial(nvars, _monomial_of_letters(nvars, prefix), 1, fld)
    psi = Polynomial.zero(nvars, fld)
    for cls, c in current.items():
        psi = psi + (xa * cls.f(fld)).scale(c)
    if not _in_squarefree_ideal(psi, a + 1):
        raise ValueError("psi is not in the squarefree ideal I_<a+1>")

    ctx = AA1FrJ(a, fld)
    trace = [f"aa1 replay a={a} k={k}"]
    terms: list = []

    # straighten to standard classes (no singletons: only bottom inversions)
    standard: dict = {}
    for cls, c in current.items():
        for sgn, out_cls in straighten_quasi_h(cls, 0):
            v = fld.add(standard.get(out_cls, 0), fld.mul(c, sgn))
            if v:
                standard[out_cls] = v
            else:
                standard.pop(out_cls, None)
    trace.append(f"straightened to {len(standard)} standard classes")

    remainder: dict = {}
    prefix_set = set(prefix)
    for cls, c in standard.items():
        shared = [p for p in cls.pairs if p[0] in prefix_set and p[1] in prefix_set]
        if in_X(cls, k):
            remainder[cls] = c
            continue
        if not shared:
            raise AssertionError("standard class outside W lacks a prefix column")
        i, j = shared[0]
        mono = _monomial_of_letters(nvars, prefix_set - {i, j})
        terms.append((c, mono, ctx.index[((i, j), cls)]))
        trace.append(f"W-restriction {cls.text()} via column ({i},{j})")

    if remainder:
        h_total = Polynomial.zero(nvars, fld)
        for cls, c in remainder.items():
            h_total = h_total + h_poly(cls, k, fld).scale(c)
        if not h_total.is_zero() or any(c for c in remainder.values()):
            raise RuntimeError(
                "W-supported remainder is nonzero: contradicts h independence"
            )
    cert = MembershipCertificate(psi, terms, ctx, trace)
    if not cert.verify():
        raise RuntimeError("aa1 certificate failed symbolic verification")
    return cert
