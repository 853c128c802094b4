"""
Line-based text formats.

Configuration:
    ring: t1 t2
    weight: 1/2 1/2        (optional)
    t1^2
    t1*t2

Segre-Veronese spec:
    sv: d=4 tau=2
    range 1..2 min 1 max 1

Nested system: sections `base:` and `inner 1:`, `inner 2:`, ... each holding a
configuration body (the base may hold a spec body instead) and an optional
`order:` line.

Marked basis: one `LEAD -> TAIL` per line.

`#` starts a comment everywhere; blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
import re

from toricnest.algebra.orders import MonomialOrder, OrderKind
from toricnest.algebra.ring import Monomial, Ring, format_monomial, parse_monomial
from toricnest.exceptions import MonomialParseError, ParseError
from toricnest.groebner.binomials import MarkedBasis, MarkedBinomial
from toricnest.models.types import Provenance
from toricnest.segre_veronese.configuration import SegreVeroneseSpec, WindowConstraint, sv_configuration
from toricnest.toric.configuration import Configuration, check_configuration

_SV_HEADER = re.compile(r"^sv:\s*d\s*=\s*(?P<d>\d+)\s+tau\s*=\s*(?P<tau>\d+)$")
_RANGE = re.compile(r"^range\s+(?P<p>\d+)\.\.(?P<q>\d+)\s+min\s+(?P<lo>\d+)\s+max\s+(?P<hi>\d+)$")
_SECTION = re.compile(r"^(?:base|inner\s+(?P<index>\d+)):$")


def _content_lines(text: str, start: int = 1) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=start):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_ring(line: str, number: int) -> Ring:
    names = line.removeprefix("ring:").split()
    if not names:
        raise ParseError("Ring line lists no variables", line_number=number)
    try:
        return Ring(tuple(names))
    except MonomialParseError as exc:
        raise ParseError(str(exc), line_number=number) from exc


def _parse_weight(line: str, number: int, ring: Ring) -> tuple[Fraction, ...]:
    parts = line.removeprefix("weight:").split()
    try:
        weight = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Invalid weight {line!r}", line_number=number) from exc
    if len(weight) != len(ring):
        raise ParseError(
            f"Weight has {len(weight)} entries but the ring has {len(ring)} variables",
            line_number=number,
        )
    return weight


def _parse_configuration_lines(lines: list[tuple[int, str]]) -> Configuration:
    if not lines or not lines[0][1].startswith("ring:"):
        number = lines[0][0] if lines else None
        raise ParseError("Configuration must start with a 'ring:' line", line_number=number)
    ring = _parse_ring(lines[0][1], lines[0][0])
    weight: tuple[Fraction, ...] | None = None
    members: list[Monomial] = []
    for number, line in lines[1:]:
        if line.startswith("weight:"):
            if weight is not None or members:
                raise ParseError("'weight:' must directly follow 'ring:'", line_number=number)
            weight = _parse_weight(line, number, ring)
            continue
        members.append(parse_monomial(line, ring, line_number=number))
    if not members:
        raise ParseError("Configuration lists no members", line_number=lines[0][0])
    if weight is not None:
        return Configuration(ring, tuple(members), weight)
    return check_configuration(members, ring)


def parse_configuration(text: str) -> Configuration:
    """Parse a configuration file; without a weight line one is computed."""
    return _parse_configuration_lines(list(_content_lines(text)))


def format_configuration(C: Configuration) -> str:
    lines = ["ring: " + " ".join(C.ring.variables)]
    if C.weight is not None:
        lines.append("weight: " + " ".join(str(w) for w in C.weight))
    lines.extend(format_monomial(m) for m in C.members)
    return "\n".join(lines) + "\n"


def _parse_sv_lines(lines: list[tuple[int, str]]) -> SegreVeroneseSpec:
    number, header = lines[0]
    match = _SV_HEADER.match(header)
    if match is None:
        raise ParseError(f"Expected 'sv: d=<d> tau=<tau>', got {header!r}", line_number=number)
    constraints = []
    for number, line in lines[1:]:
        row = _RANGE.match(line)
        if row is None:
            raise ParseError(f"Expected 'range p..q min c max b', got {line!r}", line_number=number)
        constraints.append(
            WindowConstraint(int(row["p"]), int(row["q"]), int(row["lo"]), int(row["hi"]))
        )
    return SegreVeroneseSpec(int(match["d"]), int(match["tau"]), tuple(constraints))


def parse_sv_spec(text: str) -> SegreVeroneseSpec:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("Empty Segre-Veronese spec")
    return _parse_sv_lines(lines)


def format_sv_spec(spec: SegreVeroneseSpec) -> str:
    lines = [f"sv: d={spec.d} tau={spec.tau}"]
    lines.extend(f"range {c.p}..{c.q} min {c.lower} max {c.upper}" for c in spec.constraints)
    return "\n".join(lines) + "\n"


@dataclass
class NestedInput:
    """Parsed nested system file: base and inner configurations plus orders."""

    base: Configuration
    inner: list[Configuration]
    spec: SegreVeroneseSpec | None = None
    base_order: str | None = None
    inner_orders: list[str | None] = field(default_factory=list)


def _split_order(lines: list[tuple[int, str]]) -> tuple[list[tuple[int, str]], str | None]:
    order = None
    body = []
    for number, line in lines:
        if line.startswith("order:"):
            if order is not None:
                raise ParseError("Duplicate 'order:' line", line_number=number)
            order = line.removeprefix("order:").strip()
            if order.split(":", 1)[0] not in {k.value for k in OrderKind}:
                raise ParseError(f"Unknown order {order!r}", line_number=number)
        else:
            body.append((number, line))
    return body, order


def parse_nested_system(text: str) -> NestedInput:
    """Parse a nested system file; inner sections must be numbered 1..d."""
    sections: dict[int, list[tuple[int, str]]] = {}
    current: int | None = None
    for number, line in _content_lines(text):
        header = _SECTION.match(line)
        if header is not None:
            current = int(header["index"]) if header["index"] else 0
            if current in sections:
                raise ParseError(f"Duplicate section {line!r}", line_number=number)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("Content before the first section header", line_number=number)
        sections[current].append((number, line))

    if 0 not in sections:
        raise ParseError("Missing 'base:' section")
    base_lines, base_order = _split_order(sections.pop(0))
    if not base_lines:
        raise ParseError("Empty 'base:' section")
    spec = None
    if base_lines[0][1].startswith("sv:"):
        spec = _parse_sv_lines(base_lines)
        base = sv_configuration(spec)
    else:
        base = _parse_configuration_lines(base_lines)

    expected = list(range(1, len(sections) + 1))
    if sorted(sections) != expected:
        raise ParseError(f"Inner sections must be numbered 1..{len(sections)}, got {sorted(sections)}")
    inner: list[Configuration] = []
    inner_orders: list[str | None] = []
    for i in expected:
        body, order = _split_order(sections[i])
        if not body:
            raise ParseError(f"Empty 'inner {i}:' section")
        inner.append(_parse_configuration_lines(body))
        inner_orders.append(order)
    if len(inner) != len(base.ring):
        raise ParseError(
            f"Base ring has {len(base.ring)} variables but {len(inner)} inner sections are given"
        )
    return NestedInput(base, inner, spec, base_order, inner_orders)


def parse_binomial(line: str, ring: Ring, *, line_number: int | None = None) -> MarkedBinomial:
    lead_text, arrow, tail_text = line.partition("->")
    if not arrow:
        raise MonomialParseError(f"Expected 'LEAD -> TAIL', got {line!r}", line_number=line_number)
    lead = parse_monomial(lead_text, ring, line_number=line_number)
    tail = parse_monomial(tail_text, ring, line_number=line_number)
    if lead == tail:
        raise MonomialParseError("Lead equals tail", line_number=line_number)
    return MarkedBinomial(lead, tail)


def parse_basis(text: str, ring: Ring) -> MarkedBasis:
    """A marked-only basis; coherence is checked separately."""
    elements = tuple(parse_binomial(line, ring, line_number=n) for n, line in _content_lines(text))
    return MarkedBasis(ring, elements, Provenance.MARKED_ONLY)


def format_basis(G: MarkedBasis, order: MonomialOrder | None = None) -> str:
    """
    One `LEAD -> TAIL` line per element, sorted by lead then tail under
    `order` (the basis order, or grevlex for marked-only bases).
    """
    order = order or G.order or MonomialOrder(OrderKind.GREVLEX, G.ring)
    ordered = sorted(G.elements, key=lambda g: (order.key(g.lead), order.key(g.tail)))
    return "".join(f"{g}\n" for g in ordered)


def parse_counts(text: str, ring: Ring) -> tuple[int, ...]:
    """
    An observed count vector: either comma/space separated integers in
    variable order, or a monomial over `ring`.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("Empty count vector")
    if not re.fullmatch(r"[\d,\s]+", stripped):
        return parse_monomial(stripped, ring).exponents
    counts = tuple(int(v) for v in re.split(r"[,\s]+", stripped) if v)
    if len(counts) != len(ring):
        raise ParseError(f"Count vector has {len(counts)} entries, expected {len(ring)}")
    return counts


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Cannot read {path}: {exc}") from exc
