"""Division algorithms.

Global division in a ring carrying a terminating (well) order, organized by
the first-divisor partition of the exponent lattice, and ecart (Mora style)
division for local orders, where the multipliers applied to stored
intermediate results are restricted to a designated block of weight-zero x
variables so the accumulated denominator stays invertible in the graded local
ring.
"""

from .rational import QQ
from .rings import Element
from .orders import leading_data

MORA_STEP_CAP = 200000


def _divides(a, b):
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def delta_index(exps, v):
    """Index of the region of v in the first-divisor partition generated by
    the exponents, or None if no exponent divides v."""
    for j, e in enumerate(exps):
        if _divides(e, v):
            return j
    return None


def _check_division(p, divisors, quotients, remainder, lexps):
    total = remainder
    for q, g in zip(quotients, divisors):
        total = total + q * g
    if total != p:
        raise AssertionError("division identity failed to re-expand")
    for j, (q, e) in enumerate(zip(quotients, lexps)):
        for m in q.terms:
            v = tuple(x + y for x, y in zip(m, e))
            if delta_index(lexps, v) != j:
                raise AssertionError("quotient support escapes its region")
    for v in remainder.terms:
        if delta_index(lexps, v) is not None:
            raise AssertionError("remainder support is reducible")


def divide(p, divisors, order, check=False):
    """Divide p by the list of divisors under a terminating order.

    Returns (quotients, remainder) with p = sum(q_j * g_j) + r; each quotient
    term, shifted by its divisor's leading exponent, stays in that divisor's
    region of the first-divisor partition, and no remainder term is divisible
    by any leading exponent.
    """
    sig = p.sig
    if not divisors:
        return [], p
    lexps = []
    lcs = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor")
        e, c = leading_data(g, order)
        lexps.append(e)
        lcs.append(c)
    quotients = [Element.zero(sig) for _ in divisors]
    remainder = Element.zero(sig)
    work = p
    while not work.is_zero():
        e, c = leading_data(work, order)
        j = delta_index(lexps, e)
        if j is None:
            t = Element(sig, {e: c})
            remainder += t
            work -= t
        else:
            m = tuple(x - y for x, y in zip(e, lexps[j]))
            q = Element(sig, {m: c / lcs[j]})
            quotients[j] += q
            work -= q * divisors[j]
    if check:
        _check_division(p, divisors, quotients, remainder, lexps)
    return quotients, remainder


def _ecart(p, order):
    e, _ = leading_data(p, order)
    return max(sum(t) for t in p.terms) - sum(e)


def _block_monomial(sig, m, allowed_block):
    """True iff the multiplier exponent m is a pure x-monomial supported on
    the allowed block."""
    for i, x in enumerate(m):
        if x and (i >= sig.n or i not in allowed_block):
            return False
    return True


def _unit_multiplier(sig, m, allowed_block, order):
    """True iff m may multiply a stored intermediate: a pure x-monomial that
    is either supported on the allowed block or strictly below 1 under the
    order, so the accumulated unit stays invertible in the order's
    localization."""
    if any(x for i, x in enumerate(m) if i >= sig.n):
        return False
    if _block_monomial(sig, m, allowed_block):
        return True
    zero = (0,) * sig.nslots
    return order.compare(m, zero) < 0


def mora_divide(f, divisors, order, allowed_block, check=False):
    """Ecart division of f by the divisors under a local/admissible order.

    Returns (unit, quotients, remainder) with unit * f = sum(q_j * g_j) + r,
    where unit = 1 + pure-x terms each lying in the allowed block or strictly
    below 1 under the order (hence invertible in the order's localization)
    and the remainder's leading exponent is divisible by no divisor's leading
    exponent.  Reduction picks an eligible reducer of minimal ecart, divisors
    first; when the choice has larger ecart than the current element, that
    element is stored and may later serve as a reducer itself, with its
    multiplier restricted to unit-safe x-monomials.
    """
    sig = f.sig
    allowed_block = frozenset(allowed_block)
    one = Element.constant(sig, 1)
    zero = Element.zero(sig)
    if f.is_zero():
        return one, [zero] * len(divisors), zero
    dlexps = []
    for g in divisors:
        if g.is_zero():
            raise ValueError("zero divisor")
        dlexps.append(leading_data(g, order)[0])
    # stored intermediates as (element, lexp, ecart, unit-part, quotient-parts)
    inter = []
    h = f
    uh = one
    qh = [zero] * len(divisors)
    steps = 0
    while not h.is_zero():
        steps += 1
        if steps > MORA_STEP_CAP:
            raise RuntimeError("ecart division exceeded its step budget")
        e, c = leading_data(h, order)
        best = None  # (ecart, class, idx)
        for j, (g, ge) in enumerate(zip(divisors, dlexps)):
            if _divides(ge, e):
                ec = _ecart(g, order)
                if best is None or ec < best[0]:
                    best = (ec, 0, j)
        for j, (t, te, tec, _, _) in enumerate(inter):
            if _divides(te, e) and _unit_multiplier(
                    sig, tuple(x - y for x, y in zip(e, te)), allowed_block,
                    order):
                if best is None or tec < best[0]:
                    best = (tec, 1, j)
        if best is None:
            break
        ec_h = _ecart(h, order)
        if best[0] > ec_h:
            inter.append((h, e, ec_h, uh, list(qh)))
        if best[1] == 0:
            j = best[2]
            g = divisors[j]
            ge = dlexps[j]
            m = tuple(x - y for x, y in zip(e, ge))
            fac = Element(sig, {m: c / g.terms[ge]})
            h = h - fac * g
            qh = list(qh)
            qh[j] = qh[j] + fac
        else:
            t, te, _, ut, qt = inter[best[2]]
            m = tuple(x - y for x, y in zip(e, te))
            fac = Element(sig, {m: c / t.terms[te]})
            h = h - fac * t
            uh = uh - fac * ut
            qh = [a - fac * b for a, b in zip(qh, qt)]
    if check:
        lhs = uh * f
        rhs = h
        for q, g in zip(qh, divisors):
            rhs = rhs + q * g
        if lhs != rhs:
            raise AssertionError("ecart division identity failed to re-expand")
        uterms = dict(uh.terms)
        const = uterms.pop((0,) * sig.nslots, None)
        if const != 1 or any(
                not _unit_multiplier(sig, m, allowed_block, order)
                for m in uterms):
            raise AssertionError("ecart division produced a non-invertible "
                                 "unit part")
        if not h.is_zero():
            he = leading_data(h, order)[0]
            if any(_divides(ge, he) for ge in dlexps):
                raise AssertionError("reducible remainder from ecart division")
    return uh, qh, h
