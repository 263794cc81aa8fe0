"""graph6 encoding and decoding, plus access to the bundled snark fixtures.

The format packs the upper triangle of the adjacency matrix column by column
(pairs (i, j) with i < j, ordered by j then i) into 6-bit groups, each
offset by 63 so every byte is printable.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import MalformedHeader, NonPrintableByte, TruncatedPayload
from .graph import Graph

_BIAS = 63
_LONG_MARK = 126


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n <= 62:
        return bytes([n + _BIAS])
    if n <= 258047:
        return bytes([_LONG_MARK] + [((n >> s) & 63) + _BIAS for s in (12, 6, 0)])
    return bytes([_LONG_MARK, _LONG_MARK] + [((n >> s) & 63) + _BIAS for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, header_length)."""
    if not data:
        raise MalformedHeader("empty input", 0)
    if data[0] != _LONG_MARK:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == _LONG_MARK:
        if len(data) < 8:
            raise MalformedHeader("long-form header cut short", len(data))
        digits, start = data[2:8], 2
    else:
        if len(data) < 4:
            raise MalformedHeader("long-form header cut short", len(data))
        digits, start = data[1:4], 1
    n = 0
    for k, b in enumerate(digits):
        if b == _LONG_MARK:
            raise MalformedHeader("unexpected byte in long-form header", start + k)
        n = (n << 6) | (b - _BIAS)
    return n, start + len(digits)


def _as_bytes(s: str | bytes) -> bytes:
    if isinstance(s, str):
        for i, ch in enumerate(s):
            if ord(ch) > 126:
                raise NonPrintableByte(f"character {ch!r} outside 63..126", i)
        return s.encode("ascii")
    return bytes(s)


def decode_graph6(s: str | bytes) -> Graph:
    """Decode one graph6 string (an optional `>>graph6<<` prefix is allowed)."""
    data = _as_bytes(s.strip() if isinstance(s, str) else bytes(s).strip())
    offset = 0
    if data.startswith(b">>graph6<<"):
        data = data[10:]
        offset = 10
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise NonPrintableByte(f"byte {b} outside 63..126", offset + i)
    n, hlen = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[hlen:]
    if len(payload) < need:
        raise TruncatedPayload(f"expected {need} payload bytes, found {len(payload)}", offset + len(data))
    if len(payload) > need:
        raise MalformedHeader(f"header says {n} vertices but payload has extra bytes", offset + hlen + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - _BIAS
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode `g` as graph6 text (no header prefix, no newline)."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nb = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nb += 1
            if nb == 6:
                out.append(acc + _BIAS)
                acc = nb = 0
    if nb:
        out.append((acc << (6 - nb)) + _BIAS)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# fixtures

FIXTURE_FILES = ("g28.g6", "g34.g6", "g36.g6")


def parse_fixture_text(text: str) -> list[tuple[str, Graph]]:
    """Parse `<name> <graph6>` lines; blank lines and `#` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            name, code = f"line{lineno}", parts[0]
        else:
            name, code = parts[0], parts[-1]
        out.append((name, decode_graph6(code)))
    return out


def packaged_fixture_dir() -> Path:
    return Path(str(resources.files("snarkforge") / "fixtures"))


def load_fixture(filename: str, directory: str | Path | None = None) -> list[tuple[str, Graph]]:
    """Load a fixture file from `directory`, falling back to the packaged copy."""
    candidates = []
    if directory is not None:
        candidates.append(Path(directory) / filename)
    candidates.append(packaged_fixture_dir() / filename)
    for path in candidates:
        if path.is_file():
            return parse_fixture_text(path.read_text(encoding="ascii"))
    raise FileNotFoundError(filename)


def load_all_fixtures(directory: str | Path | None = None) -> dict[str, Graph]:
    out: dict[str, Graph] = {}
    for fn in FIXTURE_FILES:
        out.update(load_fixture(fn, directory))
    return out
