"""The exterior cochain complex of a graded algebra.

Monomials are strictly increasing index tuples e^{i1} ^ ... ^ e^{iq}
(degree = length, weight = index sum).  Cochains are finite scalar
combinations; the differential is dual to the bracket and extended by
the graded Leibniz rule, so it preserves weight and raises degree by 1.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import GradedAlgebra
from .fields import QQ, Field
from .linalg import SparseMatrix

Monomial = tuple[int, ...]


class FieldMismatch(ValueError):
    pass


def sort_with_sign(indices) -> tuple[Monomial, int] | None:
    """Sort an index sequence, returning (tuple, permutation sign), or
    None if an index repeats (the wedge term vanishes)."""
    idx = list(indices)
    sign = 1
    # insertion sort; inputs are short and nearly sorted
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return None
    return tuple(idx), sign


class Cochain:
    """Finite combination of monomials with nonzero field coefficients."""

    def __init__(self, field: Field, terms: dict[Monomial, object] | None = None):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if not field.is_zero(c)}

    @classmethod
    def monomial(cls, field: Field, indices, coeff=None):
        srt = sort_with_sign(indices)
        if srt is None:
            return cls(field)
        mono, sign = srt
        c = field.one if coeff is None else coeff
        if sign < 0:
            c = field.neg(c)
        return cls(field, {mono: c})

    @classmethod
    def zero(cls, field: Field):
        return cls(field)

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, mono: Monomial, coeff) -> None:
        f = self.field
        c = f.add(self.terms.get(mono, f.zero), coeff)
        if f.is_zero(c):
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = c

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.field != other.field:
            raise FieldMismatch("cochains over different fields")
        out = Cochain(self.field, dict(self.terms))
        for m, c in other.terms.items():
            out.add_term(m, c)
        return out

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scaled(self.field.neg(self.field.one))

    def __neg__(self) -> "Cochain":
        return self.scaled(self.field.neg(self.field.one))

    def scaled(self, c) -> "Cochain":
        f = self.field
        if f.is_zero(c):
            return Cochain(f)
        return Cochain(f, {m: f.mul(v, c) for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Cochain) and self.field == other.field \
            and self.terms == other.terms

    def degrees(self) -> set[int]:
        return {len(m) for m in self.terms}

    def weights(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def bidegree(self) -> tuple[int, int]:
        """(q, k) of a homogeneous cochain."""
        qs, ks = self.degrees(), self.weights()
        if len(qs) != 1 or len(ks) != 1:
            raise ValueError("cochain is not homogeneous")
        return qs.pop(), ks.pop()

    def __repr__(self):
        return f"Cochain({cochain_text(self)})"


def wedge(a: Cochain, b: Cochain) -> Cochain:
    """Exterior product with the Koszul sign from sorting."""
    if a.field != b.field:
        raise FieldMismatch("cochains over different fields")
    f = a.field
    out = Cochain(f)
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            srt = sort_with_sign(ma + mb)
            if srt is None:
                continue
            mono, sign = srt
            c = f.mul(ca, cb)
            out.add_term(mono, f.neg(c) if sign < 0 else c)
    return out


def basis(alg: GradedAlgebra, q: int, k: int) -> list[Monomial]:
    """All strictly increasing q-tuples of generators with index sum k,
    in lexicographic order."""
    if q < 0 or k < 0:
        return []
    if q == 0:
        return [()] if k == 0 else []
    gens = alg.generators_up_to(k)
    out: list[Monomial] = []

    def extend(prefix, start, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for pos in range(start, len(gens)):
            i = gens[pos]
            # smallest completion: i < following slots strictly increase
            low = slots * i + slots * (slots - 1) // 2
            if low > remaining:
                break
            extend(prefix + [i], pos + 1, remaining - i, slots - 1)

    extend([], 0, k, q)
    return out


def generator_differential(alg: GradedAlgebra, idx: int, field: Field) -> Cochain:
    """d e^k = sum over i<j with [e_i, e_j] having an e_k component."""
    out = Cochain(field)
    for i in alg.generators_up_to(idx):
        j = idx - i
        if j <= i or not alg.contains(j):
            continue
        for coeff, k in alg.bracket(i, j):
            if k == idx:
                out.add_term((i, j), field.from_rational(coeff))
    return out


def differential(alg: GradedAlgebra, c: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential, extended by the Leibniz rule."""
    f = c.field
    out = Cochain(f)
    for mono, coeff in c.terms.items():
        for t, idx in enumerate(mono):
            dgen = generator_differential(alg, idx, f)
            if dgen.is_zero():
                continue
            sign = -1 if t % 2 else 1
            rest = mono[:t] + mono[t + 1:]
            for pair, pc in dgen.terms.items():
                srt = sort_with_sign(pair + rest)
                if srt is None:
                    continue
                new, s = srt
                total = f.mul(coeff, pc)
                if sign * s < 0:
                    total = f.neg(total)
                out.add_term(new, total)
    return out


def differential_matrix(alg: GradedAlgebra, q: int, k: int,
                        field: Field = QQ) -> SparseMatrix:
    """Matrix of d restricted to degree q, weight k, in lexicographic bases."""
    cols = basis(alg, q, k)
    rows = basis(alg, q + 1, k)
    row_index = {m: r for r, m in enumerate(rows)}
    entries: dict[tuple[int, int], object] = {}
    for cidx, mono in enumerate(cols):
        image = differential(alg, Cochain.monomial(field, mono))
        for m, c in image.terms.items():
            entries[(row_index[m], cidx)] = c
    return SparseMatrix(field, len(rows), len(cols), entries,
                        row_labels=rows, col_labels=cols)


def _term_order(mono: Monomial):
    """Ascending final index first (the natural reading order of the
    omega expansions), lexicographic within equal final index."""
    return (mono[-1] if mono else -1, mono)


def cochain_text(c: Cochain) -> str:
    """Canonical text form; see _term_order for the term ordering."""
    if c.is_zero():
        return "0"
    f = c.field
    parts = []
    for mono in sorted(c.terms, key=_term_order):
        coeff = c.terms[mono]
        body = "^".join(f"e{i}" for i in mono) if mono else "1"
        if f.characteristic == 0:
            neg = coeff < 0
            mag = -coeff if neg else coeff
            shown = body if mag == 1 else f"{f.format(mag)} {body}"
            parts.append(("- " if neg else "+ ") + shown)
        else:
            shown = body if coeff == 1 else f"{coeff} {body}"
            parts.append("+ " + shown)
    head = parts[0]
    head = head[2:] if head.startswith("+ ") else "-" + head[2:]
    return " ".join([head] + parts[1:])


def cochain_to_json(c: Cochain) -> list[dict]:
    return [{"coeff": c.field.format(c.terms[m]), "monomial": list(m)}
            for m in sorted(c.terms, key=_term_order)]


def cochain_from_json(field: Field, data) -> Cochain:
    out = Cochain(field)
    for entry in data:
        raw = str(entry["coeff"]).split(" mod ")[0]
        fr = Fraction(raw)
        out.add_term(tuple(entry["monomial"]), field.from_rational(fr))
    return out
