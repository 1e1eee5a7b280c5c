"""Multivariate polynomial gcd and exact division.

The gcd is computed by the classical content / primitive-part recursion
with a subresultant pseudo-remainder sequence in a chosen main variable.
The subresultant divisors keep coefficient growth polynomial, which
matters for dense bivariate inputs; a primitive sequence recomputes
contents after every step and stalls on them.  Monomial factors are
split off first, which makes the common case here (denominators that
are monomials times an integer) run without any pseudo-division at all,
and a trial division catches the nearly-as-common case where one
argument simply divides the other.  Results are primitive with positive
leading coefficient; numeric content is the caller's business.
"""

from .errors import DomainError
from .poly import Poly


def divexact(p, d):
    """Quotient p/d, requiring exact division."""
    if d.is_zero:
        raise DomainError("division by the zero polynomial")
    if p.is_zero:
        return Poly.zero(p.chart)
    if p.chart != d.chart:
        raise DomainError("chart mismatch in division")
    de, dc = d.leading()
    quot = {}
    rem = p
    while not rem.is_zero:
        re, rc = rem.leading()
        qe = tuple(a - b for a, b in zip(re, de))
        if any(x < 0 for x in qe):
            raise DomainError("inexact polynomial division")
        qc = rc / dc
        quot[qe] = qc
        rem = rem - Poly(p.chart, {qe: qc}) * d
    return Poly(p.chart, quot)


def _prem(a, b, name):
    """Pseudo-remainder lc(b)^(d+1) * a mod b in the main variable `name`.

    The power of lc(b) is exact, not merely sufficient: the subresultant
    divisors below assume it, so rounds skipped by lucky cancellation
    are made up at the end.
    """
    db = b.degree(name)
    lb = b.coeffs_in(name)[db]
    steps = a.degree(name) - db + 1
    r = a
    while not r.is_zero and r.degree(name) >= db:
        dr = r.degree(name)
        lr = r.coeffs_in(name)[dr]
        r = lb * r - lr.mul_var_power(name, dr - db) * b
        steps -= 1
    if steps > 0 and not r.is_zero:
        r = r * lb ** steps
    return r


def _content_in(p, name):
    """Content of p viewed as a polynomial in `name`: gcd of its coefficients."""
    coeffs = list(p.coeffs_in(name).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_const():
            break
    return g.primitive()


def _prs_gcd(a, b, name):
    """Gcd in `name` of two polynomials primitive in `name`, up to content.

    Collins' subresultant sequence: each pseudo-remainder is divided by
    g*h^d with g the previous leading coefficient and h the running
    subresultant factor, both known exactly in advance.  Every division
    below is exact by construction; divexact raising would mean the
    bookkeeping is broken, not the input.
    """
    if a.degree(name) < b.degree(name):
        a, b = b, a
    chart = a.chart
    g = Poly.const(chart, 1)
    h = Poly.const(chart, 1)
    while True:
        delta = a.degree(name) - b.degree(name)
        r = _prem(a, b, name)
        if r.is_zero:
            return b
        if r.degree(name) == 0:
            return None
        a, b = b, divexact(r, g * h ** delta)
        g = a.coeffs_in(name)[a.degree(name)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = divexact(g ** delta, h ** (delta - 1))


def poly_gcd(p, q):
    """Primitive gcd with positive grlex-leading coefficient (1 for units)."""
    if p.is_zero and q.is_zero:
        return Poly.zero(p.chart)
    if p.is_zero:
        return q.primitive()
    if q.is_zero:
        return p.primitive()
    if p.chart != q.chart:
        raise DomainError("chart mismatch in gcd")
    chart = p.chart

    mp, pc = p.monomial_factor()
    mq, qc = q.monomial_factor()
    mono = Poly(chart, {tuple(min(a, b) for a, b in zip(mp, mq)): 1})

    if pc.is_const() or qc.is_const():
        return mono
    shared = [n for n in pc.variables() if n in set(qc.variables())]
    if not shared:
        return mono

    # main variable: smallest worst-case degree, then chart order
    name = min(
        shared,
        key=lambda n: (max(pc.degree(n), qc.degree(n)), chart.index(n)),
    )

    cont_p = _content_in(pc, name)
    cont_q = _content_in(qc, name)
    pp_p = divexact(pc, cont_p)
    pp_q = divexact(qc, cont_q)
    cont = poly_gcd(cont_p, cont_q)

    a, b = pp_p, pp_q
    if a.degree(name) < b.degree(name):
        a, b = b, a
    try:
        divexact(a, b)
    except DomainError:
        prs = _prs_gcd(a, b, name)
        if prs is None:
            g = Poly.const(chart, 1)
        else:
            g = divexact(prs, _content_in(prs, name))
    else:
        g = b

    return (mono * cont * g).primitive()
