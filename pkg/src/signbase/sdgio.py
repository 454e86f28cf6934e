"""The ``.sdg`` text format for signed digraphs.

Grammar: the first significant line is ``sdg n=<order>``; every following
significant line is ``<tail> <head> <+|->``.  Lines whose first non-blank
character is ``#`` are comments; blank lines are ignored; fields are
whitespace-separated and both LF and CRLF endings parse.  Vertices are
1-based.  Serialization is canonical (arcs sorted by tail then head), so
``parse(serialize(s)) == s`` and equal digraphs serialize identically.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .signed import SignedDigraph

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    """Tokens with their 1-based column positions."""
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_sdg(text: str) -> SignedDigraph:
    n: int | None = None
    arcs: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = _tokens(raw)
        if n is None:
            if len(toks) != 2 or toks[0][0] != "sdg" or not toks[1][0].startswith("n="):
                raise ParseError("expected header 'sdg n=<order>'", lineno, toks[0][1])
            try:
                n = int(toks[1][0][2:])
            except ValueError:
                raise ParseError(
                    f"order is not an integer: {toks[1][0][2:]!r}", lineno, toks[1][1]
                ) from None
            if n < 1:
                raise ParseError(f"order must be positive, got {n}", lineno, toks[1][1])
            continue
        if len(toks) != 3:
            raise ParseError(
                f"expected '<tail> <head> <+|->', got {len(toks)} fields",
                lineno,
                toks[0][1],
            )
        (t_tail, c_tail), (t_head, c_head), (t_sign, c_sign) = toks
        try:
            tail = int(t_tail)
        except ValueError:
            raise ParseError(f"tail is not an integer: {t_tail!r}", lineno, c_tail) from None
        try:
            head = int(t_head)
        except ValueError:
            raise ParseError(f"head is not an integer: {t_head!r}", lineno, c_head) from None
        if t_sign == "+":
            sign = 1
        elif t_sign == "-":
            sign = -1
        else:
            raise ParseError(f"sign must be '+' or '-', got {t_sign!r}", lineno, c_sign)
        if not (1 <= tail <= n):
            raise ParseError(f"tail {tail} outside 1..{n}", lineno, c_tail)
        if not (1 <= head <= n):
            raise ParseError(f"head {head} outside 1..{n}", lineno, c_head)
        if (tail, head) in seen:
            prev_line, prev_sign = seen[(tail, head)]
            extra = (
                "; parallel arcs of opposite sign cannot be expressed as one "
                "sign-matrix entry"
                if prev_sign != sign
                else ""
            )
            raise ParseError(
                f"duplicate arc ({tail}, {head}), first given on line {prev_line}{extra}",
                lineno,
                c_tail,
            )
        seen[(tail, head)] = (lineno, sign)
        arcs.append((tail, head, sign))
    if n is None:
        raise ParseError("empty input: missing 'sdg n=<order>' header")
    return SignedDigraph(n, arcs)


def serialize_sdg(s: SignedDigraph) -> str:
    lines = [f"sdg n={s.n}"]
    for u, v, sign in s.arcs:
        lines.append(f"{u} {v} {'+' if sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def load_sdg(path: str) -> SignedDigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sdg(fh.read())


def dump_sdg(s: SignedDigraph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_sdg(s))
