"""Ordered variable charts.

A chart fixes the variable tuple once; every polynomial and rational
function carries its chart, and mixed-chart arithmetic is rejected
instead of silently reinterpreted.
"""

from .errors import DomainError


class Chart:
    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(names) != len(set(names)):
            raise DomainError("duplicate variable name in chart %r" % (names,))
        for name in names:
            if not name.isidentifier():
                raise DomainError("invalid variable name %r" % (name,))
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise DomainError("variable %r not in chart %r" % (name, self.names)) from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, Chart) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "Chart%r" % (self.names,)

    def extend(self, extra):
        """New chart with `extra` names appended after the current ones."""
        return Chart(self.names + tuple(extra))


def same_chart(a, b):
    if a.chart != b.chart:
        raise DomainError("chart mismatch: %r vs %r" % (a.chart.names, b.chart.names))
