"""graph6 codec (the format emitted by nauty's geng and most graph atlases).

Layout: a size field, then the upper triangle of the adjacency matrix in
column order ``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits per
character, each character offset by 63, with zero padding at the end.
Sizes up to 62 take one byte ``63 + n``; up to 258047 take ``~`` plus
three bytes; larger take ``~~`` plus six bytes.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import ParseError
from .graph import Graph


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + body


def graph6_decode(line: str, line_no: int | None = None) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ParseError("empty graph6 string", line_no, 0)
    for off, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} at offset {off} is outside 63..126", line_no, off)
    data = [ord(ch) - 63 for ch in text]
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for v in data[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError("truncated size field", line_no, len(text))
    need = -(-(n * (n - 1) // 2) // 6)
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"bit section has {len(body)} bytes, need {need}", line_no, len(text))
    if len(body) > need:
        raise ParseError(f"{len(body) - need} trailing bytes after the bit section", line_no, pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def read_graph6_stream(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, Graph | ParseError]]:
    """Yield ``(line_number, graph or ParseError)``; blank lines are skipped."""
    for no, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield no, graph6_decode(line, no)
        except ParseError as exc:
            yield no, exc
