"""Differential forms with exact rational-function coefficients.

A k-form stores a map from strictly increasing k-tuples of coordinate
indices to nonzero RatFunc coefficients over one shared chart.  The
operations are the graded wedge product, the exterior derivative, and
reduction modulo an ideal of 1-forms (substituting the solved
differentials away).
"""

from .symexpr import DomainError, RatFunc
from .symexpr.poly import Poly


def _merge_indices(a, b):
    """Concatenate two strictly increasing index tuples.

    Returns (indices, sign) or (None, 0) when an index repeats.
    """
    combined = a + b
    seen = set()
    for i in combined:
        if i in seen:
            return None, 0
        seen.add(i)
    # count inversions of the concatenation relative to sorted order
    sign = 1
    items = list(combined)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return tuple(sorted(items)), sign


class DiffForm:
    __slots__ = ("chart", "degree", "terms")

    def __init__(self, chart, degree, terms):
        if degree < 0 or degree > len(chart):
            raise DomainError("form degree out of range")
        self.chart = chart
        self.degree = degree
        self.terms = {}
        for idx, coeff in terms.items():
            if len(idx) != degree or list(idx) != sorted(set(idx)):
                raise DomainError("malformed index tuple %r" % (idx,))
            if coeff.chart != chart:
                raise DomainError("coefficient chart mismatch")
            if not coeff.is_zero:
                self.terms[idx] = coeff

    # ---- constructors ----

    @classmethod
    def zero(cls, chart, degree=0):
        return cls(chart, degree, {})

    @classmethod
    def scalar(cls, value):
        return cls(value.chart, 0, {(): value})

    @classmethod
    def differential(cls, chart, name):
        return cls(chart, 1, {(chart.index(name),): RatFunc.one(chart)})

    # ---- predicates ----

    @property
    def is_zero(self):
        return not self.terms

    def coefficient(self, *names):
        """Signed coefficient of the wedge of the named differentials."""
        if len(names) != self.degree:
            raise DomainError("need exactly %d names" % (self.degree,))
        idx = tuple(self.chart.index(n) for n in names)
        sorted_idx, sign = _merge_indices((), idx)
        if sorted_idx is None:
            return RatFunc.zero(self.chart)
        coeff = self.terms.get(sorted_idx)
        if coeff is None:
            return RatFunc.zero(self.chart)
        return coeff if sign > 0 else -coeff

    # ---- linear structure ----

    def __add__(self, other):
        self._check_same(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx)
            s = c if s is None else s + c
            if s.is_zero:
                terms.pop(idx, None)
            else:
                terms[idx] = s
        return DiffForm(self.chart, self.degree, terms)

    def __neg__(self):
        return DiffForm(self.chart, self.degree, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, RatFunc):
            scalar = RatFunc.const(self.chart, scalar)
        if scalar.chart != self.chart:
            raise DomainError("scalar chart mismatch")
        return DiffForm(
            self.chart, self.degree, {i: c * scalar for i, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def _check_same(self, other):
        if self.chart != other.chart:
            raise DomainError("chart mismatch between forms")
        if self.degree != other.degree:
            raise DomainError("degree mismatch between forms")

    def __eq__(self, other):
        return (
            isinstance(other, DiffForm)
            and self.chart == other.chart
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.chart.names, self.degree, tuple(sorted(self.terms.items()))))

    # ---- graded operations ----

    def wedge(self, other):
        if self.chart != other.chart:
            raise DomainError("chart mismatch in wedge")
        degree = self.degree + other.degree
        if degree > len(self.chart):
            return DiffForm.zero(self.chart, min(degree, len(self.chart)))
        terms = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                idx, sign = _merge_indices(ia, ib)
                if idx is None:
                    continue
                c = ca * cb
                if sign < 0:
                    c = -c
                s = terms.get(idx)
                s = c if s is None else s + c
                if s.is_zero:
                    terms.pop(idx, None)
                else:
                    terms[idx] = s
        return DiffForm(self.chart, degree, terms)

    def d(self):
        terms = {}
        for idx, coeff in self.terms.items():
            for j, name in enumerate(self.chart.names):
                dc = coeff.derive(name)
                if dc.is_zero:
                    continue
                new_idx, sign = _merge_indices((j,), idx)
                if new_idx is None:
                    continue
                c = dc if sign > 0 else -dc
                s = terms.get(new_idx)
                s = c if s is None else s + c
                if s.is_zero:
                    terms.pop(new_idx, None)
                else:
                    terms[new_idx] = s
        return DiffForm(self.chart, self.degree + 1, terms)

    # ---- printing ----

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            coeff = self.terms[idx]
            wedge = "^".join("d%s" % self.chart.names[i] for i in idx)
            if not wedge:
                parts.append("(%s)" % coeff)
            else:
                parts.append("(%s)*%s" % (coeff, wedge))
        return " + ".join(parts)

    def __repr__(self):
        return "DiffForm(%s)" % (self,)


def d(form):
    return form.d()


def wedge(a, b):
    return a.wedge(b)


def reduce_mod(form, ideal, leaders=None):
    """Reduce `form` modulo 1-forms in `ideal` set to zero.

    Each ideal form is solved for one distinct "leader" differential
    (chosen automatically unless `leaders` names them), and those
    differentials are substituted away.  Raises DomainError when no
    solvable leader assignment exists.
    """
    chart = form.chart
    rows = []
    for omega in ideal:
        if omega.degree != 1:
            raise DomainError("ideal members must be 1-forms")
        if omega.chart != chart:
            raise DomainError("ideal chart mismatch")
        rows.append({idx[0]: c for idx, c in omega.terms.items()})

    if leaders is not None:
        if len(leaders) != len(rows):
            raise DomainError("need one leader per ideal form")
        pivot_of_row = [chart.index(n) for n in leaders]
    else:
        pivot_of_row = [None] * len(rows)

    # Gaussian elimination: give every row a distinct pivot with nonzero
    # coefficient, preferring constant coefficients for stability of choice.
    solved = {}
    remaining = list(range(len(rows)))
    taken = set()
    for step in range(len(rows)):
        best = None
        for r in remaining:
            row = rows[r]
            if pivot_of_row[r] is not None:
                candidates = [pivot_of_row[r]] if pivot_of_row[r] in row else []
            else:
                candidates = [i for i in sorted(row) if i not in taken]
            for i in candidates:
                if row[i].is_zero:
                    continue
                score = (0 if row[i].is_const() else 1, i)
                if best is None or score < best[0]:
                    best = (score, r, i)
        if best is None:
            raise DomainError("ideal is not solvable for distinct leader differentials")
        _, r, piv = best
        row = rows[r]
        inv = RatFunc.one(chart) / row[piv]
        expr = {i: -(c * inv) for i, c in row.items() if i != piv}
        # substitute into previously solved rows
        for p, e in solved.items():
            if piv in e:
                factor = e.pop(piv)
                for i, c in expr.items():
                    s = e.get(i)
                    s = factor * c if s is None else s + factor * c
                    if s.is_zero:
                        e.pop(i, None)
                    else:
                        e[i] = s
        # substitute solved pivots into this expression
        for p in list(expr):
            if p in solved:
                factor = expr.pop(p)
                for i, c in solved[p].items():
                    s = expr.get(i)
                    s = factor * c if s is None else s + factor * c
                    if s.is_zero:
                        expr.pop(i, None)
                    else:
                        expr[i] = s
        solved[piv] = expr
        taken.add(piv)
        remaining.remove(r)
        # eliminate the pivot from the other unresolved rows
        for r2 in remaining:
            row2 = rows[r2]
            if piv in row2:
                factor = row2.pop(piv)
                for i, c in expr.items():
                    s = row2.get(i)
                    s = factor * c if s is None else s + factor * c
                    if s.is_zero:
                        row2.pop(i, None)
                    else:
                        row2[i] = s

    replacements = {
        piv: DiffForm(chart, 1, {(i,): c for i, c in expr.items()})
        for piv, expr in solved.items()
    }

    out = DiffForm.zero(chart, form.degree)
    identity = {
        i: DiffForm(chart, 1, {(i,): RatFunc.one(chart)}) for i in range(len(chart))
    }
    for idx, coeff in form.terms.items():
        piece = DiffForm.scalar(coeff)
        for i in idx:
            piece = piece.wedge(replacements.get(i, identity[i]))
        out = out + piece
    return out
