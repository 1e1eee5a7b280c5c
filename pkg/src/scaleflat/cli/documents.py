"""Flat key-value input documents.

Expressions contain characters most shells mangle, so the tools read
them from small text files instead of positional arguments:

    # second derivatives of the unknown
    f11 = z1^2
    f12 = 0
    f22 = 0

One `key = expression` pair per line, `#` starts a comment, blank lines
are skipped.  A system document carries f11/f12/f22; a solution-family
document carries h and optionally the pair inverse.x1/inverse.x2.
"""

from ..duality import FAMILY, SOLUTION, SolutionFamily
from ..jetframe import JET, PDESystem
from ..symexpr import DomainError, ParseError, parse

SYSTEM_KEYS = ("f11", "f12", "f22")
FAMILY_KEYS = ("h", "inverse.x1", "inverse.x2")


class DocumentError(ValueError):
    """Input document is malformed; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


def parse_document(text):
    """Split a document into an ordered key -> expression-text mapping."""
    table = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise DocumentError("expected 'key = expression'", line=lineno)
        key, value = body.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not key:
            raise DocumentError("missing key before '='", line=lineno)
        if not value:
            raise DocumentError("missing expression after '='", line=lineno)
        if key in table:
            raise DocumentError("duplicate key %r" % key, line=lineno)
        table[key] = (value, lineno)
    return table


def _reject_unknown(table, allowed, kind):
    for key, (_, lineno) in table.items():
        if key not in allowed:
            raise DocumentError(
                "unknown key %r in %s document (expected one of: %s)"
                % (key, kind, ", ".join(allowed)),
                line=lineno,
            )


def system_from_document(text):
    """Build the PDE system f11/f12/f22 described by a document."""
    table = parse_document(text)
    _reject_unknown(table, SYSTEM_KEYS, "system")
    missing = [key for key in SYSTEM_KEYS if key not in table]
    if missing:
        raise DocumentError("missing keys: %s" % ", ".join(missing))
    entries = {}
    for key in SYSTEM_KEYS:
        value, lineno = table[key]
        try:
            entries[key] = parse(value, JET)
        except (ParseError, DomainError) as exc:
            raise DocumentError("%s: %s" % (key, exc), line=lineno) from exc
    return PDESystem(entries["f11"], entries["f12"], entries["f22"])


def family_from_document(text):
    """Build the solution family h(x1, x2, X1, X2, Y) from a document."""
    table = parse_document(text)
    _reject_unknown(table, FAMILY_KEYS, "family")
    if "h" not in table:
        raise DocumentError("missing key: h")
    value, lineno = table["h"]
    try:
        h = parse(value, FAMILY)
    except (ParseError, DomainError) as exc:
        raise DocumentError("h: %s" % exc, line=lineno) from exc
    inverse_pair = [table.get("inverse.x1"), table.get("inverse.x2")]
    if (inverse_pair[0] is None) != (inverse_pair[1] is None):
        raise DocumentError("inverse.x1 and inverse.x2 come as a pair")
    inverse = None
    if inverse_pair[0] is not None:
        inverse = {}
        for name, (value, lineno) in zip(("x1", "x2"), inverse_pair):
            try:
                inverse[name] = parse(value, SOLUTION)
            except (ParseError, DomainError) as exc:
                raise DocumentError(
                    "inverse.%s: %s" % (name, exc), line=lineno
                ) from exc
    try:
        return SolutionFamily(h, inverse)
    except (ParseError, DomainError) as exc:
        raise DocumentError(str(exc)) from exc


def load_text(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc)) from exc
