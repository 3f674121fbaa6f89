# ---------------- utils/algebra/schema.py ----------------
"""
Text and JSON schema for monomials and ideals.

Overview for future devs:
- Monomial grammar (canonical, what we print):
      term   := factor ("*" factor)*
      factor := ident ("^" uint)?
      ident  := [A-Za-z][A-Za-z0-9_]*
  The literal 1 is the unit monomial.
- Ideal grammar:
      ideal  := mono ("," mono)*
  Whitespace is insignificant; a line whose first non-blank character is '#'
  is a comment.
- Compact notation: when the input contains no '*' at all, factors may be
  juxtaposed the way they are written by hand ("a^3b^2, abc, x1x2^3"). In that
  mode a variable name is one letter plus optional digits. Anything that needs
  longer names must use '*' somewhere, which switches to the canonical grammar.
- JSON form of an ideal: {"variables": [...names], "generators": [[...exps], ...]}.

All printers emit the canonical grammar, so parse(print(x)) == x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from utils.algebra.errors import IdealParseError
from utils.algebra.monomials import Monomial, VariableSet

PLACEHOLDER_VARIABLE = "x"


# =============================================================================
# Printing
# =============================================================================

def format_monomial(m: Monomial, variables: VariableSet, compact: bool = False) -> str:
    """Canonical text for m; '1' for the unit."""
    if len(m) != len(variables):
        raise ValueError(f"Monomial has {len(m)} exponents but there are {len(variables)} variables")
    parts = []
    for name, e in zip(variables.names, m.exponents):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    if not parts:
        return "1"
    return ("" if compact else "*").join(parts)


def format_generators(gens: Sequence[Monomial], variables: VariableSet, compact: bool = False) -> str:
    return ", ".join(format_monomial(g, variables, compact=compact) for g in gens)


def format_ideal_text(gens: Sequence[Monomial], variables: VariableSet) -> str:
    """
    Generator text that parses back to the same variables and exponent vectors.

    When the plain text would not (a variable missing or out of first-appearance
    order, or compact-mode ambiguity), the first generator lists every variable,
    absent ones as name^0. A trailing name^0 factor forces the '*' grammar.
    """
    if not gens:
        raise ValueError("The zero ideal has no generator text")
    gens = tuple(gens)
    plain = format_generators(gens, variables)
    if parse_generators(plain) == ParsedGenerators(variables, gens):
        return plain
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(variables.names, gens[0].exponents)]
    factors.append(f"{variables.names[-1]}^0")
    return ", ".join(["*".join(factors), *(format_monomial(g, variables) for g in gens[1:])])


# =============================================================================
# Parsing
# =============================================================================

@dataclass(frozen=True)
class ParsedGenerators:
    """Raw parse result: names in first-appearance order plus generators as written."""

    variables: VariableSet
    generators: tuple[Monomial, ...]


class _Cursor:
    """Character cursor with 1-based line/column tracking."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message: str, pos: int | None = None) -> IdealParseError:
        line, col = self.location(pos)
        return IdealParseError(message, line, col)

    def skip_blank(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#" and self._at_line_start():
                nl = self.text.find("\n", self.pos)
                self.pos = len(self.text) if nl < 0 else nl + 1
            else:
                break

    def _at_line_start(self) -> bool:
        start = self.text.rfind("\n", 0, self.pos) + 1
        return self.text[start:self.pos].strip() == ""

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.pos >= len(self.text)


def _strip_comments(text: str) -> str:
    """Used only to decide compact mode; positions are tracked on the raw text."""
    return "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))


def _read_uint(cur: _Cursor) -> int:
    start = cur.pos
    while cur.peek().isdigit():
        cur.pos += 1
    if cur.pos == start:
        raise cur.fail("Expected an unsigned integer exponent")
    return int(cur.text[start:cur.pos])


def _read_ident(cur: _Cursor, compact: bool) -> str:
    start = cur.pos
    ch = cur.peek()
    if not (ch.isascii() and ch.isalpha()):
        raise cur.fail(f"Expected a variable name, found {ch!r}" if ch else "Expected a variable name, found end of input")
    cur.pos += 1
    if compact:
        while cur.peek().isdigit():
            cur.pos += 1
    else:
        while cur.peek() and (cur.peek().isascii() and (cur.peek().isalnum() or cur.peek() == "_")):
            cur.pos += 1
    return cur.text[start:cur.pos]


def _read_factor(cur: _Cursor, compact: bool) -> tuple[str, int]:
    name = _read_ident(cur, compact)
    cur.skip_blank()
    power = 1
    if cur.peek() == "^":
        cur.pos += 1
        cur.skip_blank()
        power = _read_uint(cur)
    return name, power


def _read_term(cur: _Cursor, compact: bool) -> list[tuple[str, int]]:
    cur.skip_blank()
    if cur.peek() == "1":
        start = cur.pos
        cur.pos += 1
        if cur.peek().isdigit():
            raise cur.fail("Only the literal 1 may appear as a numeric term", start)
        return []
    factors = [_read_factor(cur, compact)]
    while True:
        cur.skip_blank()
        ch = cur.peek()
        if ch == "*":
            cur.pos += 1
            cur.skip_blank()
            factors.append(_read_factor(cur, compact))
        elif compact and ch.isascii() and ch.isalpha():
            factors.append(_read_factor(cur, compact))
        else:
            return factors


def parse_generators(text: str, variables: VariableSet | None = None) -> ParsedGenerators:
    """
    Parse an ideal (comma separated monomials) without minimalizing.

    If variables is given, names must come from it and its order is used;
    otherwise names are collected in first-appearance order.
    """
    body = _strip_comments(text)
    if not body.strip():
        raise IdealParseError("Empty input: expected at least one monomial", 1, 1)
    compact = "*" not in body

    cur = _Cursor(text)
    terms: list[list[tuple[str, int]]] = []
    while True:
        terms.append(_read_term(cur, compact))
        cur.skip_blank()
        if cur.at_end():
            break
        if cur.peek() != ",":
            raise cur.fail(f"Unexpected character {cur.peek()!r}")
        cur.pos += 1

    if variables is None:
        order: list[str] = []
        for term in terms:
            for name, _ in term:
                if name not in order:
                    order.append(name)
        if not order:
            # Only unit terms; keep one placeholder variable so n >= 1.
            order = [PLACEHOLDER_VARIABLE]
        variables = VariableSet(tuple(order))

    n = len(variables)
    gens = []
    for term in terms:
        exps = [0] * n
        for name, power in term:
            try:
                exps[variables.index(name)] += power
            except KeyError as e:
                raise IdealParseError(str(e.args[0]), 1, 1) from e
        gens.append(Monomial(tuple(exps)))
    return ParsedGenerators(variables=variables, generators=tuple(gens))


def parse_monomial(text: str, variables: VariableSet) -> Monomial:
    parsed = parse_generators(text, variables)
    if len(parsed.generators) != 1:
        raise IdealParseError("Expected a single monomial", 1, 1)
    return parsed.generators[0]


# =============================================================================
# JSON form
# =============================================================================

def generators_to_json(gens: Iterable[Monomial], variables: VariableSet) -> dict[str, Any]:
    return {
        "variables": list(variables.names),
        "generators": [list(g.exponents) for g in gens],
    }


def generators_from_json(payload: dict[str, Any]) -> ParsedGenerators:
    """Inverse of generators_to_json; raises IdealParseError on shape problems."""
    try:
        variables = VariableSet(tuple(payload["variables"]))
        gens = tuple(Monomial.of(row) for row in payload["generators"])
    except (KeyError, TypeError, ValueError) as e:
        raise IdealParseError(f"Malformed ideal JSON: {e}", 1, 1) from e
    for g in gens:
        if len(g) != len(variables):
            raise IdealParseError(
                f"Generator {list(g.exponents)} has {len(g)} exponents, expected {len(variables)}", 1, 1
            )
    return ParsedGenerators(variables=variables, generators=gens)
