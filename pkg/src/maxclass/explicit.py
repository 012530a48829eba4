"""Closed-form cocycle constructions for the maximal-class presets.

Everything here is built from two degree-zero derivations of the
exterior algebra on the abelian (or almost-abelian) ideal:

  D1: e^i -> e^{i-1}   (weight -1; the bottom generator maps to 0)
  D2: e^i -> e^{i-2}   (weight -2; with the low-index special cases)

plus partial right inverses and the ``omega`` expansion, which converts
a strictly increasing index tuple into an explicitly closed cochain.
The m2 variants carry 1/2^l coefficients and therefore refuse fields of
characteristic two.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import GradedAlgebra, preset
from .cochain import Cochain, Monomial, differential, sort_with_sign, wedge
from .fields import QQ, Field


class InvalidIndices(ValueError):
    pass


class CharacteristicTwo(ValueError):
    pass


class ClosednessFailed(ArithmeticError):
    """A dropped-term construction did not come out closed."""


class NoLeadingTerm(ValueError):
    pass


# ---------------------------------------------------------------------------
# derivations

def _derive(c: Cochain, rule) -> Cochain:
    """Extend an index rule (i -> list of (coeff_num, j)) as an even
    degree-zero derivation: one position replaced at a time, no signs."""
    f = c.field
    out = Cochain(f)
    for mono, coeff in c.terms.items():
        for t, idx in enumerate(mono):
            for num, j in rule(idx):
                srt = sort_with_sign(mono[:t] + (j,) + mono[t + 1:])
                if srt is None:
                    continue
                new, sign = srt
                out.add_term(new, f.mul(coeff, f.of(num * sign)))
    return out


def d1_apply(c: Cochain, mode: str = "m0") -> Cochain:
    """ad e1^* as a derivation.  mode "m0": kills e^2; mode "m2": acts
    on the ideal spanned by e^1, e^3, e^4, ... and kills e^1 and e^3."""
    if mode == "m0":
        def rule(i):
            return [] if i <= 2 else [(1, i - 1)]
    elif mode == "m2":
        def rule(i):
            return [] if i in (1, 3) else [(1, i - 1)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _derive(c, rule)


def d2_apply(c: Cochain) -> Cochain:
    """ad e2^* on the m2 ideal: e^3 -> e^1, e^4 -> 0, e^i -> e^{i-2}."""
    def rule(i):
        if i in (1, 4):
            return []
        if i == 3:
            return [(1, 1)]
        return [(1, i - 2)]
    return _derive(c, rule)


def d2_plus_d1sq(c: Cochain) -> Cochain:
    return d2_apply(c) + d1_apply(d1_apply(c, "m2"), "m2")


def d_minus1(c: Cochain) -> Cochain:
    """Right inverse of D1 on the m0 ideal: per monomial xi ^ e^i it is
    sum_l (-1)^l D1^l(xi) ^ e^{i+1+l}."""
    f = c.field
    out = Cochain(f)
    for mono, coeff in c.terms.items():
        xi = Cochain.monomial(f, mono[:-1], coeff)
        top = mono[-1]
        l = 0
        while not xi.is_zero():
            sign = f.of(-1 if l % 2 else 1)
            for m2, v in xi.terms.items():
                srt = sort_with_sign(m2 + (top + 1 + l,))
                if srt is not None:
                    new, s = srt
                    out.add_term(new, f.mul(v, f.mul(sign, f.of(s))))
            xi = d1_apply(xi)
            l += 1
    return out


# ---------------------------------------------------------------------------
# the omega expansion

def omega(indices, field: Field = QQ, floor: int = 2) -> Cochain:
    """omega(i_1, ..., i_q) = sum_l (-1)^l D1^l(e^{i_1}^...^e^{i_q}) ^
    e^{i_q+1+l}: an explicitly closed (q+1)-cochain.  floor selects the
    bottom generator (2 for the m0 ideal, 3 for the shifted copy inside
    m2, where D1 additionally kills e^3)."""
    indices = tuple(indices)
    if not indices or any(b <= a for a, b in zip(indices, indices[1:])):
        raise InvalidIndices(f"{indices} is not strictly increasing")
    if indices[0] < floor:
        raise InvalidIndices(f"index {indices[0]} below generator floor {floor}")
    f = field
    mode = "m0" if floor == 2 else "m2"
    xi = Cochain.monomial(f, indices)
    top = indices[-1]
    out = Cochain(f)
    l = 0
    while not xi.is_zero():
        sign = f.of(-1 if l % 2 else 1)
        for mono, v in xi.terms.items():
            srt = sort_with_sign(mono + (top + 1 + l,))
            if srt is not None:
                new, s = srt
                out.add_term(new, f.mul(v, f.mul(sign, f.of(s))))
        xi = d1_apply(xi, mode)
        l += 1
    return out


def omega_map(c: Cochain, floor: int = 2):
    """Linear extension of omega to cochains: each monomial must end in
    an adjacent pair (r, r+1); it is replaced by omega of the monomial
    with the final index removed.  Monomials reaching below the
    generator floor are dropped (the count is reported)."""
    f = c.field
    out = Cochain(f)
    dropped = 0
    for mono, coeff in c.terms.items():
        if len(mono) < 2 or mono[0] < floor or mono[-1] != mono[-2] + 1:
            dropped += 1
            continue
        for m2, v in omega(mono[:-1], f, floor).terms.items():
            out.add_term(m2, f.mul(coeff, v))
    return out, dropped


def leading_term(c: Cochain) -> Monomial:
    """The unique monomial of c whose last two indices are adjacent."""
    found = None
    for mono in c.terms:
        if len(mono) >= 2 and mono[-1] == mono[-2] + 1:
            if found is not None:
                raise NoLeadingTerm("several adjacent-last-pair monomials")
            found = mono
    if found is None:
        raise NoLeadingTerm("no adjacent-last-pair monomial")
    return found


def shift_last_index(m: Monomial) -> Monomial:
    return m[:-1] + (m[-1] + 1,)


# ---------------------------------------------------------------------------
# cup products in the m0 cohomology

def cup_formula(a, b, field: Field = QQ) -> Cochain:
    """Product of the classes of omega(a) and omega(b) written again in
    terms of omega cochains (a's last index must not exceed b's).  The
    result is cohomologous to wedge(omega(a), omega(b))."""
    a, b = tuple(a), tuple(b)
    for t in (a, b):
        if not t or any(y <= x for x, y in zip(t, t[1:])) or t[0] < 2:
            raise InvalidIndices(f"bad index tuple {t}")
    i, j = a[-1], b[-1]
    if i > j:
        raise InvalidIndices("first tuple must end no higher than the second")
    f = field
    acc = Cochain(f)

    def monomial_cochain(indices, coeff=None):
        return Cochain.monomial(f, indices, coeff)

    xi_i = monomial_cochain(a)          # xi ^ e^i
    eta_j = monomial_cochain(b)         # eta ^ e^j

    def pow_d1(c, n):
        for _ in range(n):
            if c.is_zero():
                break
            c = d1_apply(c)
        return c

    # adjacent-last-pair summands of the literal double expansion:
    # (1) the second factor untouched
    for l in range(0, j - i + 2):
        left = pow_d1(xi_i, l)
        if left.is_zero():
            continue
        tail = wedge(monomial_cochain((i + 1 + l,)),
                     wedge(eta_j, monomial_cochain((j + 1,))))
        term = wedge(left, tail)
        acc = acc + (term if l % 2 == 0 else -term)
    # (2) and (3): both factors differentiated, pairing at j+k / j+k+1
    sign2 = f.of(-1 if (j - i - 1) % 2 else 1)
    for k in range(1, 2 * (sum(a) + sum(b))):
        right = pow_d1(eta_j, k)
        if right.is_zero():
            break
        left2 = pow_d1(xi_i, j - i - 1 + k)
        left3 = pow_d1(xi_i, j - i + 1 + k)
        if left2.is_zero() and left3.is_zero():
            continue
        if not left2.is_zero():
            term = wedge(left2, wedge(monomial_cochain((j + k,)),
                                      wedge(right, monomial_cochain((j + 1 + k,)))))
            acc = acc + term.scaled(sign2)
        if not left3.is_zero():
            term = wedge(left3, wedge(monomial_cochain((j + 2 + k,)),
                                      wedge(right, monomial_cochain((j + 1 + k,)))))
            acc = acc + term.scaled(sign2)
    out, _ = omega_map(acc)
    return out


# ---------------------------------------------------------------------------
# m2 constructions

def _require_odd_characteristic(field: Field):
    if field.characteristic == 2:
        raise CharacteristicTwo("construction divides by 2")


def w_cocycle(indices, field: Field = QQ) -> Cochain:
    """w(i_1, ..., i_q) = sum_l (1/2^l) omega_map((D2 + D1^2)^l
    (e^{i_1}^...^e^{i_q}) ^ e^{i_q+1+l} ^ e^{i_q+2+l}) in the m2
    complex; terms that fall out of the generator range are dropped and
    the result is checked to be closed."""
    indices = tuple(indices)
    if not indices or any(b <= a for a, b in zip(indices, indices[1:])):
        raise InvalidIndices(f"{indices} is not strictly increasing")
    if indices[0] < 3:
        raise InvalidIndices("first index must be at least 3")
    _require_odd_characteristic(field)
    f = field
    xi = Cochain.monomial(f, indices)
    top = indices[-1]
    out = Cochain(f)
    l = 0
    while not xi.is_zero():
        coef = f.from_rational(Fraction(1, 2 ** l))
        stage = Cochain(f)
        for mono, v in xi.terms.items():
            srt = sort_with_sign(mono + (top + 1 + l, top + 2 + l))
            if srt is not None:
                new, s = srt
                stage.add_term(new, f.mul(v, f.of(s)))
        mapped, _ = omega_map(stage, floor=2)
        out = out + mapped.scaled(coef)
        xi = d2_plus_d1sq(xi)
        l += 1
    if not differential(preset("m2"), out).is_zero():
        raise ClosednessFailed(f"w construction not closed at {indices}")
    return out


def d_minus2_class(indices, field: Field = QQ) -> Cochain:
    """Partial right inverse of ad e2^* at the class level, built over
    the shifted ideal (generator floor 3): applying ad e2^* to the
    result gives minus the class of omega(indices, floor=3)."""
    indices = tuple(indices)
    if not indices or any(b <= a for a, b in zip(indices, indices[1:])):
        raise InvalidIndices(f"{indices} is not strictly increasing")
    if indices[0] < 3:
        raise InvalidIndices("first index must be at least 3")
    _require_odd_characteristic(field)
    f = field
    xi = Cochain.monomial(f, indices)
    top = indices[-1]
    out = Cochain(f)
    l = 0
    while not xi.is_zero():
        coef = f.from_rational(Fraction(1, 2 ** (l + 1)))
        stage = Cochain(f)
        for mono, v in xi.terms.items():
            srt = sort_with_sign(mono + (top + 1 + l, top + 2 + l))
            if srt is not None:
                new, s = srt
                stage.add_term(new, f.mul(v, f.of(s)))
        mapped, _ = omega_map(stage, floor=3)
        out = out + mapped.scaled(coef)
        xi = d2_plus_d1sq(xi)
        l += 1
    return out
