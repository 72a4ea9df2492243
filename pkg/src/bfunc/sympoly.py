"""Sparse multivariate polynomials with exact rational coefficients.

A SymbolPoly maps exponent tuples to nonzero rationals.  Within one
computation session every exponent has the same length 2n+1 and is laid out
as (x_1..x_n, s, xi_1..xi_n); polynomials that do not involve s or the xi
block simply keep those slots at zero.  Instances are treated as immutable:
every operation returns a fresh object.
"""

import math

from .errors import InputError, ZeroLeadingTermError
from .rationals import Rational


class SymbolPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            coeff = Rational(coeff)
            if not coeff:
                continue
            exp = tuple(exp)
            acc = data.get(exp)
            if acc is None:
                data[exp] = coeff
            else:
                acc = acc + coeff
                if acc:
                    data[exp] = acc
                else:
                    del data[exp]
        self.terms = data

    @classmethod
    def _raw(cls, data):
        """Wrap an already-canonical dict without copying. Internal."""
        obj = object.__new__(cls)
        obj.terms = data
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def monomial(cls, exp, coeff=1):
        coeff = Rational(coeff)
        if not coeff:
            return cls.zero()
        return cls._raw({tuple(exp): coeff})

    @classmethod
    def constant(cls, coeff, arity):
        return cls.monomial((0,) * arity, coeff)

    @classmethod
    def variable(cls, slot, arity, power=1, coeff=1):
        exp = [0] * arity
        exp[slot] = power
        return cls.monomial(exp, coeff)

    # -- basic structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SymbolPoly) and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    @property
    def arity(self):
        if not self.terms:
            return None
        return len(next(iter(self.terms)))

    def coeff(self, exp):
        return self.terms.get(tuple(exp), Rational(0))

    def exps(self):
        return set(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"{self.__class__.__name__}(0)"
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"{self.__class__.__name__}({{{body}}})"

    # -- arithmetic ---------------------------------------------------------

    def _check_mix(self, other):
        if not isinstance(other, SymbolPoly):
            raise InputError(f"cannot combine with {type(other).__name__}")
        a, b = self.arity, other.arity
        if a is not None and b is not None and a != b:
            raise InputError(f"arity mismatch: {a} vs {b}")

    def __add__(self, other):
        self._check_mix(other)
        data = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = data.get(exp)
            if acc is None:
                data[exp] = coeff
            else:
                acc = acc + coeff
                if acc:
                    data[exp] = acc
                else:
                    del data[exp]
        return self.__class__._raw(data)

    def __sub__(self, other):
        self._check_mix(other)
        data = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = data.get(exp)
            if acc is None:
                data[exp] = -coeff
            else:
                acc = acc - coeff
                if acc:
                    data[exp] = acc
                else:
                    del data[exp]
        return self.__class__._raw(data)

    def __neg__(self):
        return self.__class__._raw({e: -c for e, c in self.terms.items()})

    def scale(self, coeff):
        coeff = Rational(coeff)
        if not coeff:
            return self.__class__.zero()
        return self.__class__._raw({e: c * coeff for e, c in self.terms.items()})

    def __mul__(self, other):
        """Commutative product. DiffOp overrides this with the operator product."""
        self._check_mix(other)
        data = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
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
        return self.__class__._raw(data)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a natural number")
        if k == 0:
            if self.arity is None:
                raise InputError("cannot raise the arity-less zero to power 0")
            return self.__class__.constant(1, self.arity)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def partial(self, slot):
        """Formal partial derivative in the given exponent slot."""
        data = {}
        for exp, coeff in self.terms.items():
            k = exp[slot]
            if k:
                e = list(exp)
                e[slot] = k - 1
                data[tuple(e)] = coeff * k
        return self.__class__._raw(data)

    # -- degrees and leading data --------------------------------------------

    def min_total_degree(self):
        """Smallest total degree of any term; infinity for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(sum(e) for e in self.terms)

    def max_total_degree(self):
        if not self.terms:
            return -math.inf
        return max(sum(e) for e in self.terms)

    def truncate(self, bound):
        """Part of total degree strictly below bound."""
        return self.__class__._raw(
            {e: c for e, c in self.terms.items() if sum(e) < bound})

    def leading(self, order):
        """(exponent, coefficient) of the largest term under order."""
        if not self.terms:
            raise ZeroLeadingTermError("leading term of zero is undefined")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def le(self, order):
        return self.leading(order)[0]

    def lc(self, order):
        return self.leading(order)[1]

    def lt(self, order):
        exp, coeff = self.leading(order)
        return self.__class__._raw({exp: coeff})

    def lm(self, order):
        exp, _ = self.leading(order)
        return self.__class__._raw({exp: Rational(1)})

    def rest(self, order):
        """Everything but the leading term; zero for the zero polynomial."""
        if not self.terms:
            return self.__class__.zero()
        exp, _ = self.leading(order)
        data = dict(self.terms)
        del data[exp]
        return self.__class__._raw(data)

    def monic(self, order):
        _, coeff = self.leading(order)
        return self.scale(1 / coeff)
