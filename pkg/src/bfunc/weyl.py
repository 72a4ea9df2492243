"""Differential operators with polynomial coefficients, in normal form.

A DiffOp stores the total symbol of a normally ordered operator: the exponent
tuple (x_1..x_n, s, xi_1..xi_n) stands for x^alpha s^k d^beta with all
coefficients on the left.  The product follows the Leibniz closed formula

    (PQ)(x, xi) = sum_nu (1/nu!) (d_xi^nu P)(x, xi) (d_x^nu Q)(x, xi)

summed over multi-indices nu in the x-block; s is central.  The symbol map is
a positional bijection between d^beta and xi^beta, not a ring map.

The weight e gives 0 to each x, 1 to s and to each xi.  Initial parts with
respect to e drive the operator division layer, and they multiply
commutatively: the top e-part of a product is the product of the top e-parts.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import InputError, ZeroLeadingTermError
from .sympoly import SymbolPoly


def op_mul(a, b, homogenized=False):
    """Normally ordered product of two operators given by their symbols.

    With homogenized=True the exponents carry one extra trailing slot for a
    central homogenizing variable and every commutator picks up its square,
    keeping products of homogeneous operators homogeneous.
    """
    if not a.terms or not b.terms:
        return a.__class__.zero()
    length = a.arity
    if b.arity != length:
        raise InputError(f"arity mismatch: {length} vs {b.arity}")
    n = (length - 2) // 2 if homogenized else (length - 1) // 2
    hslot = length - 1
    data = {}
    b_items = list(b.terms.items())
    for ea, ca in a.terms.items():
        beta = ea[n + 1:n + 1 + n]
        if not any(beta):
            for eb, cb in b_items:
                exp = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                acc = data.get(exp)
                if acc is None:
                    data[exp] = c
                else:
                    acc = acc + c
                    if acc:
                        data[exp] = acc
                    else:
                        del data[exp]
            continue
        for eb, cb in b_items:
            gamma = eb[:n]
            caps = [min(beta[i], gamma[i]) for i in range(n)]
            cab = ca * cb
            if not any(caps):
                exp = tuple(x + y for x, y in zip(ea, eb))
                acc = data.get(exp)
                if acc is None:
                    data[exp] = cab
                else:
                    acc = acc + cab
                    if acc:
                        data[exp] = acc
                    else:
                        del data[exp]
                continue
            for nu in itertools.product(*(range(c + 1) for c in caps)):
                factor = 1
                for i in range(n):
                    if nu[i]:
                        factor *= math.comb(beta[i], nu[i]) * math.perm(gamma[i], nu[i])
                exp = list(x + y for x, y in zip(ea, eb))
                for i in range(n):
                    if nu[i]:
                        exp[i] -= nu[i]
                        exp[n + 1 + i] -= nu[i]
                if homogenized:
                    exp[hslot] += 2 * sum(nu)
                exp = tuple(exp)
                c = cab * factor
                acc = data.get(exp)
                if acc is None:
                    data[exp] = c
                else:
                    acc = acc + c
                    if acc:
                        data[exp] = acc
                    else:
                        del data[exp]
    return a.__class__._raw(data)


class DiffOp(SymbolPoly):
    """Normally ordered differential operator, stored as its total symbol."""

    __slots__ = ()

    def __mul__(self, other):
        return op_mul(self, other)


class HomogOp(DiffOp):
    """Operator in the degree-homogenized algebra (extra trailing slot)."""

    __slots__ = ()

    def __mul__(self, other):
        return op_mul(self, other, homogenized=True)


def total_symbol(op):
    """Positional bijection operator -> commutative symbol."""
    return SymbolPoly._raw(dict(op.terms))


def from_symbol(poly):
    """Positional bijection commutative symbol -> operator."""
    return DiffOp._raw(dict(poly.terms))


def e_weight(exp):
    """Weight of an exponent under e = (0..0 | 1 | 1..1)."""
    n = (len(exp) - 1) // 2
    return exp[n] + sum(exp[n + 1:])


def ord_e(op):
    """Largest e-weight of any term; the operator analogue of order."""
    if not op.terms:
        raise ZeroLeadingTermError("e-order of zero is undefined")
    return max(e_weight(e) for e in op.terms)


def in_e(op):
    """Initial part: the terms of maximal e-weight, as a commutative symbol."""
    m = ord_e(op)
    return SymbolPoly._raw(
        {e: c for e, c in op.terms.items() if e_weight(e) == m})


def e_part(op, k, bound=math.inf):
    """Symbol terms of e-weight exactly k and total degree below bound."""
    return SymbolPoly._raw(
        {e: c for e, c in op.terms.items()
         if e_weight(e) == k and sum(e) < bound})


# -- action on symbolic powers ------------------------------------------------

@dataclass(frozen=True)
class FsAction:
    """Result of applying an operator to the symbolic power of f.

    Represents (numerator / f**denom_power) times that power.  The numerator
    is a polynomial in x and s and is never reduced against f, so two equal
    actions may differ structurally; use equivalent() for semantic equality.
    """

    numerator: SymbolPoly
    denom_power: int

    def is_zero(self):
        return self.numerator.is_zero()

    def equivalent(self, other, f):
        a = self.numerator * f ** max(other.denom_power - self.denom_power, 0)
        b = other.numerator * f ** max(self.denom_power - other.denom_power, 0)
        return a == b


def _validate_xpoly(f):
    if f.is_zero():
        raise InputError("f must be nonzero")
    n = (f.arity - 1) // 2
    for exp in f.terms:
        if any(exp[n:]):
            raise InputError("f must involve only the base variables")
    return n


def apply_action(op, action, f):
    """Apply an operator to an existing action on the symbolic power of f."""
    n = _validate_xpoly(f)
    if op.is_zero():
        return FsAction(SymbolPoly.zero(), 0)
    if op.arity != f.arity:
        raise InputError("operator and f arity mismatch")
    arity = f.arity
    grads = [f.partial(i) for i in range(n)]
    s_exp = [0] * arity
    s_exp[n] = 1
    s_poly = SymbolPoly.monomial(s_exp)

    pieces = []
    for exp, coeff in op.terms.items():
        num, k = action.numerator, action.denom_power
        for i in range(n):
            for _ in range(exp[n + 1 + i]):
                shift = s_poly - SymbolPoly.constant(k, arity)
                num = num.partial(i) * f + shift * num * grads[i]
                k += 1
        head = [0] * arity
        head[:n] = exp[:n]
        head[n] = exp[n]
        num = num * SymbolPoly.monomial(head, coeff)
        pieces.append((num, k))

    k_max = max(k for _, k in pieces)
    total = SymbolPoly.zero()
    for num, k in pieces:
        total = total + num * f ** (k_max - k)
    if total.is_zero():
        return FsAction(SymbolPoly.zero(), 0)
    return FsAction(total, k_max)


def apply_to_fs(op, f):
    """Action of an operator on the symbolic power of f, from a fresh start."""
    _validate_xpoly(f)
    unit = FsAction(SymbolPoly.constant(1, f.arity), 0)
    return apply_action(op, unit, f)
