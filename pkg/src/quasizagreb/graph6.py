"""graph6 encoding and decoding (standard variant only)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from quasizagreb.graph import MAX_ORDER, Graph


class Graph6Error(ValueError):
    """Malformed graph6 text."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    n = g.order
    bits = []
    for j in range(1, n):
        r = g.rows[j]
        for i in range(j):
            bits.append(r >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_order(n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the printable graph6 range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 8 and vals[1] == 63:
            raise Graph6Error("orders above 258047 are not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated order header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data characters for order {n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; raises Graph6Error with the line number."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def write_graph6_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
        count += 1
    return count
