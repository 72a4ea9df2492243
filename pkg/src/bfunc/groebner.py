"""Groebner bases for operator ideals under local and global orders.

Two routes produce a basis under the operator division order, which is not a
well-order:

* buchberger_mora runs Buchberger's loop but reduces S-pairs with Mora's
  division: reducers are chosen by minimal ecart, and the current partial
  remainder joins the divisor pool whenever every applicable reducer has a
  larger ecart.  The resulting relation carries a unit factor on the left of
  the dividend (a series-invertible coefficient: no s or d symbols, nonzero
  constant term).

* groebner_lazard homogenizes the generators with a central degree variable,
  runs ordinary Buchberger under the degree-first well-order (commutators
  pick up the square of the homogenizing variable), and dehomogenizes.

Buchberger's coprimality shortcut is unsound for operator products and is
never used; only the chain criterion prunes pairs.
"""

from dataclasses import dataclass

from .errors import InputError
from .orders import MatrixOrder, homogenized_order
from .weyl import DiffOp, HomogOp, op_mul


@dataclass(frozen=True)
class MoraResult:
    """Relation unit * dividend = sum(quotients_i * divisor_i) + remainder."""

    unit: object
    quotients: list
    remainder: object


@dataclass(frozen=True)
class GroebnerBasis:
    elements: list
    order: MatrixOrder


def ecart(op, order):
    """Spread between an operator's top total degree and its leading one."""
    return op.max_total_degree() - sum(op.le(order))


def _mono_quotient(h_lead, g_lead, cls):
    (eh, ch), (eg, cg) = h_lead, g_lead
    exp = tuple(a - b for a, b in zip(eh, eg))
    return cls._raw({exp: ch / cg})


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mora_div(p, divisors, order, track=True):
    """Mora division of p by the divisors under a local order.

    Returns a MoraResult whose remainder is either zero or has a leading
    monomial no divisor's leading monomial divides.  The remainder tail is
    not reduced.  With track=False the unit and quotients are skipped (they
    are None) which saves substantial work inside Buchberger's loop.
    """
    divisors = list(divisors)
    cls = p.__class__
    if track:
        one = cls.constant(1, order.arity)
        unit = one
        quots = [cls.zero() for _ in divisors]
    # pool entries: (leading, ecart, op, origin)
    # origin: divisor index, or (unit, quotients, op) snapshot for partial
    # remainders of p itself.
    pool = []
    for i, g in enumerate(divisors):
        if g.is_zero():
            raise InputError("zero divisor")
        pool.append((g.leading(order), ecart(g, order), g, i))

    h = p
    while h.terms:
        h_lead = h.leading(order)
        he = h_lead[0]
        best = None
        for entry in pool:
            if _divides(entry[0][0], he):
                if best is None or entry[1] < best[1]:
                    best = entry
        if best is None:
            break
        h_ecart = h.max_total_degree() - sum(he)
        if best[1] > h_ecart:
            snapshot = (unit, list(quots), h) if track else (None, None, h)
            pool.append((h_lead, h_ecart, h, snapshot))
        m = _mono_quotient(h_lead, best[0], cls)
        g = best[2]
        h = h - op_mul(m, g)
        if track:
            prov = best[3]
            if isinstance(prov, int):
                quots[prov] = quots[prov] + m
            else:
                u_s, q_s, _ = prov
                unit = unit - op_mul(m, u_s)
                quots = [q - op_mul(m, qs) for q, qs in zip(quots, q_s)]
    if track:
        return MoraResult(unit, quots, h)
    return MoraResult(None, None, h)


def spair(p, q, order, mul=op_mul):
    """S-pair: cross-multiply to the leading exponents' join and subtract."""
    (ep, cp), (eq, cq) = p.leading(order), q.leading(order)
    join = tuple(max(a, b) for a, b in zip(ep, eq))
    cls = p.__class__
    mp = cls._raw({tuple(a - b for a, b in zip(join, ep)): 1 / cp})
    mq = cls._raw({tuple(a - b for a, b in zip(join, eq)): 1 / cq})
    return mul(mp, p) - mul(mq, q)


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _buchberger_loop(gens, order, reduce_fn, mul, select_key):
    """Shared Buchberger skeleton; reduce_fn maps an S-pair to a remainder."""
    basis = []
    for g in gens:
        if g.terms:
            basis.append(g.monic(order))
    if not basis:
        raise InputError("all generators are zero")
    leads = [g.le(order) for g in basis]

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    done = set()
    while pairs:
        pair = min(pairs, key=lambda ij: (select_key(_lcm_exp(leads[ij[0]], leads[ij[1]])),) + ij)
        pairs.discard(pair)
        i, j = pair
        lcm_ij = _lcm_exp(leads[i], leads[j])
        # chain criterion: some k already paired off against both i and j
        # inside the join.
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(leads[k], lcm_ij):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        done.add(pair)
        if skip:
            continue
        s = spair(basis[i], basis[j], order, mul)
        if not s.terms:
            continue
        r = reduce_fn(s, basis)
        if not r.terms:
            continue
        r = r.monic(order)
        basis.append(r)
        leads.append(r.le(order))
        t = len(basis) - 1
        pairs.update((i2, t) for i2 in range(t))
    return basis


def _minimalize(basis, order):
    """Drop elements whose leading exponent another element's divides."""
    leads = [g.le(order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        redundant = False
        for j in range(len(basis)):
            if i == j:
                continue
            if _divides(leads[j], leads[i]):
                if leads[j] != leads[i] or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(g)
    keep.sort(key=lambda g: order.key(g.le(order)))
    return keep


def buchberger_mora(gens, order):
    """Groebner basis under a local order via Mora-reduced Buchberger."""
    def reduce_fn(s, basis):
        return mora_div(s, basis, order, track=False).remainder

    tie_key = MatrixOrder(rows=(), tie=order.tie, arity=order.arity).key
    basis = _buchberger_loop(gens, order, reduce_fn, op_mul, tie_key)
    return GroebnerBasis(_minimalize(basis, order), order)


def reduce_global(p, divisors, order, mul=op_mul):
    """Full normal form under a well-order: every term ends up irreducible."""
    divisors = [g for g in divisors if g.terms]
    leads = [g.leading(order) for g in divisors]
    cls = p.__class__
    remainder = {}
    h = p
    while h.terms:
        h_lead = h.leading(order)
        he = h_lead[0]
        hit = None
        for i, (eg, _) in enumerate(leads):
            if _divides(eg, he):
                hit = i
                break
        if hit is None:
            remainder[he] = h_lead[1]
            h = cls._raw({e: c for e, c in h.terms.items() if e != he})
        else:
            m = _mono_quotient(h_lead, leads[hit], cls)
            h = h - mul(m, divisors[hit])
    return cls._raw(remainder)


def buchberger_global(gens, order, mul=op_mul):
    """Buchberger under a well-order, with a final full interreduction."""
    def reduce_fn(s, basis):
        return reduce_global(s, basis, order, mul)

    basis = _buchberger_loop(gens, order, reduce_fn, mul, order.key)
    basis = _minimalize(basis, order)
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = reduce_global(g, others, order, mul)
        if r.terms:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.le(order)))
    return reduced


def _homogenize(op, arity):
    top = op.max_total_degree()
    data = {}
    for exp, coeff in op.terms.items():
        data[exp + (top - sum(exp),)] = coeff
    return HomogOp._raw(data)


def _dehomogenize(op):
    data = {}
    for exp, coeff in op.terms.items():
        base = exp[:-1]
        acc = data.get(base)
        data[base] = coeff if acc is None else acc + coeff
    return DiffOp(data)


def groebner_lazard(gens, order):
    """Groebner basis under the local operator order via homogenization."""
    n = (order.arity - 1) // 2
    horder = homogenized_order(n, order.tie)
    hgens = [_homogenize(g, order.arity) for g in gens if g.terms]
    if not hgens:
        raise InputError("all generators are zero")
    hbasis = buchberger_global(hgens, horder,
                               mul=lambda a, b: op_mul(a, b, homogenized=True))
    basis = [g for g in (_dehomogenize(h) for h in hbasis) if g.terms]
    basis = [g.monic(order) for g in basis]
    return GroebnerBasis(_minimalize(basis, order), order)
