"""Power-series approximate division along a staircase of leading exponents.

The leading exponents alpha(1)..alpha(s) of the divisors partition the
exponent lattice into disjoint regions: region i holds the points dominated
componentwise by alpha(i) but by no earlier leader, and the remainder region
holds everything never dominated.  Division by leading terms is then a
term-local lookup, and the series division loop repeatedly replaces the
divided part with the correction coming from the divisor tails until the
running difference has minimum total degree above the requested bound.
"""

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class StaircasePartition:
    """First-match-wins partition of the exponent lattice by leaders."""

    leaders: tuple

    def classify(self, exp):
        """Index of the first leader dominating exp, or None if none does."""
        for i, leader in enumerate(self.leaders):
            for a, b in zip(exp, leader):
                if a < b:
                    break
            else:
                return i
        return None


def build_partition(leaders):
    leaders = tuple(tuple(l) for l in leaders)
    if not leaders:
        raise InputError("at least one leader is required")
    arity = len(leaders[0])
    for l in leaders:
        if len(l) != arity:
            raise InputError("leader arity mismatch")
        if any(v < 0 for v in l):
            raise InputError("leaders must be natural exponent vectors")
    return StaircasePartition(leaders)


def mono_div(f, leads, partition):
    """Divide every term of f by the leading terms along the partition.

    leads is the list of (exponent, coefficient) leading terms; the partition
    must be built from the same exponents in the same sequence.  Returns
    (quotients, remainder) with f = sum(q_i * lead_i) + remainder; each
    quotient contributes only inside its region and the remainder collects
    the never-dominated terms.  The decomposition is unique.
    """
    quotients = [{} for _ in leads]
    remainder = {}
    classify = partition.classify
    for exp, coeff in f.terms.items():
        i = classify(exp)
        if i is None:
            remainder[exp] = coeff
        else:
            le, lc = leads[i]
            quotients[i][tuple(a - b for a, b in zip(exp, le))] = coeff / lc
    cls = f.__class__
    return [cls._raw(q) for q in quotients], cls._raw(remainder)


@dataclass(frozen=True)
class ApproxDivisionResult:
    """Output of series division: f = sum(q_i g_i) + remainder + tail.

    The identity is exact; quotients and remainder are guaranteed only up to
    the degree bound, and the tail has minimum total degree > degree_bound.
    """

    quotients: list
    remainder: object
    tail: object
    degree_bound: int


def series_approx_div(f, divisors, order, bound):
    """Approximate division of f by divisors in the power-series sense.

    Parameters
    ----------
    f : SymbolPoly
    divisors : sequence of SymbolPoly, all nonzero
    order : MatrixOrder whose single weight row is all -1 (lower total degree
        is larger), so leading terms sit at minimal total degree
    bound : the loop keeps dividing while the running difference still has a
        term of total degree <= bound, so the tail starts above bound
    """
    if bound < 0:
        raise InputError("degree bound must not be negative")
    if len(order.rows) != 1 or any(w != -1 for w in order.rows[0]):
        raise InputError("series division expects the all--1 weight row order")
    divisors = list(divisors)
    leads = [g.leading(order) for g in divisors]
    rests = [g.rest(order) for g in divisors]
    partition = build_partition([e for e, _ in leads])

    cls = f.__class__
    qbars = [cls.zero() for _ in divisors]
    rbar = cls.zero()
    diff = f
    while diff.terms and diff.min_total_degree() <= bound:
        qs, r = mono_div(diff, leads, partition)
        for i, q in enumerate(qs):
            if q.terms:
                qbars[i] = qbars[i] + q
        rbar = rbar + r
        nxt = cls.zero()
        for q, rest in zip(qs, rests):
            if q.terms and rest.terms:
                nxt = nxt + q * rest
        diff = -nxt
    return ApproxDivisionResult(qbars, rbar, diff, bound)
