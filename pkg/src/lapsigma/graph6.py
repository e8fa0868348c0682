"""graph6 reading and writing (bit-exact, undirected simple graphs).

Each byte carries 6 bits offset by 63.  The size field is one byte for
n <= 62 and ``~`` followed by three bytes (18 bits, big-endian) for
63 <= n <= 258047.  The body is the upper triangle in column order,
most significant bit first, zero-padded to a multiple of 6.
"""

from __future__ import annotations

from typing import IO, Iterator

from .graph import Graph, pair_order

HEADER = b">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _size_field(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= MAX_N:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError(f"graph6 encoding supports n <= {MAX_N}, got {n}")


def to_graph6(G: Graph) -> bytes:
    out = bytearray(_size_field(G.n))
    acc = nbits = 0
    for i, j in pair_order(G.n):
        acc = acc << 1 | (G.rows[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(63 + acc)
            acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside [63,126]", base + pos)
    if data[0] == 126:
        if len(data) > 1 and data[1] == 126:
            raise Graph6Error(f"graphs with n > {MAX_N} are not supported", base + 1)
        if len(data) < 4:
            raise Graph6Error("truncated 18-bit size field", base + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        start = 4
    else:
        n = data[0] - 63
        start = 1
    if n < 1:
        raise Graph6Error("graph6 size must be at least 1", base)
    pairs = pair_order(n)
    need = -(-len(pairs) // 6)
    body = data[start:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} body bytes for n={n}, got {len(body)}",
                          base + start + min(len(body), need))
    rows = [0] * n
    b = 0
    for pos, byte in enumerate(body):
        v = byte - 63
        for shift in range(5, -1, -1):
            bit = v >> shift & 1
            if b < len(pairs):
                if bit:
                    i, j = pairs[b]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bit", base + start + pos)
            b += 1
    return Graph(n, tuple(rows))


def read_graph6(stream: IO[bytes] | IO[str]) -> Iterator[Graph]:
    """Yield graphs from newline-delimited graph6, skipping blank lines."""
    for line in stream:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield parse_graph6(line)
