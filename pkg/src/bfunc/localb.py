"""Local b-function of a polynomial at the origin.

The pipeline: compute annihilator generators of the symbolic power f^s by
elimination, adjoin f, take a Groebner basis under the operator division
order, then search for the minimal monic polynomial b(s) in the ideal.  The
search computes approximate normal forms of the powers of s, looks for an
exact rational dependency among their truncations, and certifies each
candidate by Mora division; failed certifications raise the truncation
degree and try again.
"""

import math
from dataclasses import dataclass

from .errors import BfuncError, InputError, ResourceLimitError
from .groebner import (GroebnerBasis, MoraResult, buchberger_global,
                       buchberger_mora, groebner_lazard, mora_div)
from .linalg import nullspace
from .opdiv import op_approx_div
from .orders import elimination_order, operator_order
from .rationals import Rational
from .weyl import DiffOp, apply_to_fs, from_symbol, op_mul


def _s_power(i, arity):
    exp = [0] * arity
    exp[(arity - 1) // 2] = i
    return DiffOp.monomial(exp)


def _poly_in_s(coeffs, arity):
    mid = (arity - 1) // 2
    data = {}
    for i, c in enumerate(coeffs):
        if c:
            exp = [0] * arity
            exp[mid] = i
            data[tuple(exp)] = Rational(c)
    return DiffOp._raw(data)


# -- annihilator of the symbolic power ----------------------------------------

def ann_fs(f, tie="grevlex", validate=True):
    """Generators of the annihilator ideal of the symbolic power of f.

    Works in an enlarged operator session with a graph variable t and two
    inverse scaling variables u, v: the ideal generated by t - u*f, the
    chain-rule operators d_i + u*(df/dx_i)*d_t, and u*v - 1 is intersected
    with the u,v-free subalgebra by an elimination Groebner basis.  Every
    surviving element is homogeneous for the (t, d_t)-weight; after shifting
    each to weight zero, t^a d_t^a rewrites to (-1)^a (s+1)...(s+a), giving
    operators in x, d and s that annihilate the symbolic power.
    """
    n = _base_arity(f)
    arity = f.arity

    ne = n + 3  # t, x_1..x_n, u, v
    earity = 2 * ne + 1
    t_slot, u_slot, v_slot = 0, n + 1, n + 2
    dt_slot = ne + 1

    def emb(alpha, beta=(), t=0, dt=0, u=0, v=0):
        exp = [0] * earity
        exp[t_slot] = t
        exp[dt_slot] = dt
        exp[u_slot] = u
        exp[v_slot] = v
        for i, a in enumerate(alpha):
            exp[1 + i] = a
        for i, b in enumerate(beta):
            exp[ne + 2 + i] = b
        return tuple(exp)

    def embed_xpoly(p, extra_t=0, extra_dt=0, extra_u=0):
        data = {}
        for exp, coeff in p.terms.items():
            data[emb(exp[:n], t=extra_t, dt=extra_dt, u=extra_u)] = coeff
        return DiffOp._raw(data)

    gens = []
    g = DiffOp.monomial(emb((0,) * n, t=1)) - embed_xpoly(f, extra_u=1)
    gens.append(g)
    for i in range(n):
        d_i = DiffOp.monomial(emb((0,) * n, beta=tuple(1 if j == i else 0 for j in range(n))))
        gens.append(d_i + embed_xpoly(f.partial(i), extra_u=1, extra_dt=1))
    gens.append(DiffOp.monomial(emb((0,) * n, u=1, v=1))
                - DiffOp.monomial(emb((0,) * n)))

    eorder = elimination_order(ne, (u_slot, v_slot), tie)
    basis = buchberger_global(gens, eorder)

    kept = []
    du_slot, dv_slot = ne + 1 + u_slot, ne + 1 + v_slot
    for g in basis:
        if all(e[u_slot] == e[v_slot] == e[du_slot] == e[dv_slot] == 0
               for e in g.terms):
            kept.append(g)

    out = []
    for g in kept:
        weights = {e[t_slot] - e[dt_slot] for e in g.terms}
        if len(weights) != 1:
            raise BfuncError("elimination produced a weight-inhomogeneous element")
        w = weights.pop()
        if w > 0:
            g = op_mul(DiffOp.monomial(emb((0,) * n, dt=w)), g)
        elif w < 0:
            g = op_mul(DiffOp.monomial(emb((0,) * n, t=-w)), g)
        out.append(_shift_to_s(g, n, arity, t_slot, dt_slot, ne))

    order = operator_order(n, tie)
    seen, result = [], []
    for g in out:
        if g.terms:
            g = g.monic(order)
            if g.terms not in seen:
                seen.append(g.terms)
                result.append(g)
    if validate:
        for g in result:
            if not apply_to_fs(g, f).is_zero():
                raise BfuncError("annihilator candidate fails to annihilate")
    return result


def _shift_to_s(g, n, arity, t_slot, dt_slot, ne):
    """Rewrite a weight-zero element: t^a d_t^a -> (-1)^a (s+1)..(s+a)."""
    mid = (arity - 1) // 2
    out = {}
    for exp, coeff in g.terms.items():
        a = exp[t_slot]
        if exp[dt_slot] != a:
            raise BfuncError("weight-zero element with unbalanced t, d_t powers")
        # coefficients of (s+1)(s+2)...(s+a)
        sprod = [1]
        for j in range(1, a + 1):
            nxt = [0] * (len(sprod) + 1)
            for k, c in enumerate(sprod):
                nxt[k] += c * j
                nxt[k + 1] += c
            sprod = nxt
        sign = -1 if a % 2 else 1
        for k, c in enumerate(sprod):
            if not c:
                continue
            e = [0] * arity
            for i in range(n):
                e[i] = exp[1 + i]
                e[mid + 1 + i] = exp[ne + 2 + i]
            e[mid] = k
            e = tuple(e)
            val = coeff * (sign * c)
            acc = out.get(e)
            if acc is None:
                out[e] = val
            else:
                acc = acc + val
                if acc:
                    out[e] = acc
                else:
                    del out[e]
    return DiffOp._raw(out)


def _base_arity(f):
    if f.is_zero():
        raise InputError("f must be nonzero")
    n = (f.arity - 1) // 2
    for exp in f.terms:
        if any(exp[n:]):
            raise InputError("f must involve only the base variables")
    return n


# -- normal forms and the dependency search -----------------------------------

def approx_nf(p, gb, bound):
    """Approximate normal form: remainder of dividing p by the basis."""
    return op_approx_div(p, gb.elements, bound, gb.order).remainder


@dataclass(frozen=True)
class NFTable:
    """Normal forms of 1, s, s^2, ... at a common truncation degree."""

    nfs: list
    bound: int


def nf_table(gb, top_power, bound):
    arity = gb.order.arity
    return NFTable([approx_nf(_s_power(i, arity), gb, bound)
                    for i in range(top_power + 1)], bound)


def dependency_kernel(nfs, bound):
    """Exact kernel of the truncated normal forms, as coefficient vectors.

    Vectors (a_0..a_d) with sum a_i * truncate(nfs[i], bound) = 0.
    """
    truncated = [nf.truncate(bound) for nf in nfs]
    support = sorted(set().union(*(t.exps() for t in truncated)))
    rows = [[t.coeff(exp) for t in truncated] for exp in support]
    return nullspace(rows, len(truncated))


def _candidate_from_kernel(kernel):
    normalized = []
    for vec in kernel:
        if vec[-1]:
            inv = 1 / vec[-1]
            normalized.append(tuple(c * inv for c in vec))
    if not normalized:
        return None
    return min(normalized)


def find_generator(gb, n0, nmax):
    """Minimal monic polynomial in s inside the ideal of the basis.

    Returns (coefficients ascending, final truncation degree, certificate).
    Searches candidate degrees upward; a degree with trivial kernel stays
    ruled out when the truncation degree grows, so after a failed
    certification only the truncation degree is raised.
    """
    order = gb.order
    arity = order.arity
    bound = n0
    nfs = []
    d = 0
    while True:
        while len(nfs) <= d:
            nfs.append(approx_nf(_s_power(len(nfs), arity), gb, bound))
        kernel = dependency_kernel(nfs[: d + 1], bound)
        candidate = _candidate_from_kernel(kernel) if kernel else None
        if candidate is None:
            d += 1
            continue
        cert = mora_div(_poly_in_s(candidate, arity), gb.elements, order,
                        track=True)
        if cert.remainder.is_zero():
            return candidate, bound, cert
        bound += 1
        if bound > nmax:
            raise ResourceLimitError(
                f"truncation degree exceeded {nmax} before certification",
                candidate=candidate, n_used=bound - 1)
        nfs = []


# -- rational roots ------------------------------------------------------------

def _divisors(m):
    m = abs(m)
    out = set()
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.add(d)
            out.add(m // d)
        d += 1
    return out


def _eval_poly(coeffs, x):
    acc = Rational(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs, root):
    """Divide by (s - root); exact for an actual root."""
    m = len(coeffs) - 1
    out = [Rational(0)] * m
    out[m - 1] = coeffs[m]
    for i in range(m - 1, 0, -1):
        out[i - 1] = coeffs[i] + root * out[i]
    return out


def rational_roots(coeffs):
    """All rational roots with multiplicity, plus the unfactored cofactor.

    coeffs are ascending and the polynomial must be monic.  Candidates come
    from the divisors of the integer-scaled extreme coefficients; each hit is
    deflated out exactly and retested for multiplicity.
    """
    work = [Rational(c) for c in coeffs]
    if not work or work[-1] != 1:
        raise InputError("expected a monic polynomial")
    roots = []
    while len(work) > 1 and not work[0]:
        roots.append(Rational(0))
        work = work[1:]
    if len(work) > 1:
        scale = math.lcm(*(int(c.denominator) for c in work))
        ints = [int(c * scale) for c in work]
        cands = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                g = math.gcd(p, q)
                cands.add(Rational(p // g, q // g))
                cands.add(Rational(-(p // g), q // g))
        for cand in sorted(cands):
            while len(work) > 1 and _eval_poly(work, cand) == 0:
                roots.append(cand)
                work = _deflate(work, cand)
    grouped = []
    for r in sorted(set(roots)):
        grouped.append((r, roots.count(r)))
    return grouped, tuple(work)


# -- the pipeline ---------------------------------------------------------------

@dataclass(frozen=True)
class BFunctionResult:
    """Local b-function at the origin with its certification data.

    b holds ascending monic coefficients; roots pairs each rational root with
    its multiplicity; n_final is the truncation degree at certification; the
    certificate is the Mora relation reducing b(s) to zero by the basis.
    """

    b: tuple
    roots: list
    n_final: int
    certificate: MoraResult
    gb: GroebnerBasis


def local_b_function(f, gb_strategy="mora", n0=None, nmax=64, tie="grevlex",
                     ann_gens=None):
    """Local b-function of the polynomial f at the origin.

    Parameters
    ----------
    f : SymbolPoly in the base variables only, nonzero
    gb_strategy : "mora" or "lazard"
    n0 : starting truncation degree; default 2 * (2n + 1)
    nmax : largest truncation degree tried before giving up
    tie : tie-breaking term order name
    ann_gens : optional sequence of DiffOp generating the annihilator of f^s,
        bypassing the built-in elimination (each must annihilate f^s)
    """
    n = _base_arity(f)
    arity = f.arity
    order = operator_order(n, tie)
    if f.coeff((0,) * arity):
        # f is a unit in the series ring: the ideal is everything.
        one = DiffOp.constant(1, arity)
        cert = MoraResult(one, [one], DiffOp.zero())
        return BFunctionResult((Rational(1),), [], 0, cert,
                               GroebnerBasis([one], order))

    if ann_gens is None:
        ann = ann_fs(f, tie)
    else:
        ann = list(ann_gens)
        for g in ann:
            if not apply_to_fs(g, f).is_zero():
                raise InputError("supplied generator does not annihilate f^s")
    gens = ann + [from_symbol(f)]
    if gb_strategy == "mora":
        gb = buchberger_mora(gens, order)
    elif gb_strategy == "lazard":
        gb = groebner_lazard(gens, order)
    else:
        raise InputError(f"unknown gb strategy {gb_strategy!r}")

    if n0 is None:
        n0 = 2 * arity
    coeffs, n_final, cert = find_generator(gb, n0, nmax)
    roots, _ = rational_roots(coeffs)
    return BFunctionResult(tuple(coeffs), roots, n_final, cert, gb)
