"""Graph serialization (graph6, edge list) and verification certificates."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, build_graph


class ParseError(ValueError):
    pass


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise ParseError(f"graph6 vertex count {n} not supported")


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (column-major upper triangle, 6 bits per char)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    out = bytearray(_g6_size_bytes(g.n))
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(63 + val)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Parse a one-line standard graph6 string."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 character out of range 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ParseError("unsupported or truncated graph6 size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body length {len(body)} does not match n={n} (expected {need})"
        )
    bits = []
    for c in body:
        val = c - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 input")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" + one-edge-per-line format; leading '#' lines are comments."""
    lines = text.split("\n")
    idx = 0
    while idx < len(lines) and (not lines[idx].strip() or lines[idx].lstrip().startswith("#")):
        idx += 1
    if idx >= len(lines):
        raise ParseError("missing 'n m' header line")
    header = lines[idx].split()
    if len(header) != 2:
        raise ParseError(f"line {idx + 1}: expected 'n m' header")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line {idx + 1}: expected integers in 'n m' header")
    edges = []
    seen = set()
    lineno = idx + 1
    for raw in lines[idx + 1 :]:
        lineno += 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected integer vertex ids")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"line {lineno}: invalid edge ({u},{v}) for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"edge count mismatch: header says {m}, found {len(edges)}")
    return build_graph(n, edges)


def write_edge_list(g: Graph, header_comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in header_comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


TOOL_VERSION = "planarham 0.1.0"
DIGEST_ALGORITHM = "sha256"


def input_digest(data: bytes) -> str:
    return f"{DIGEST_ALGORITHM}:{hashlib.sha256(data).hexdigest()}"


@dataclass
class CertificateDocument:
    """Machine-checkable record of one verification claim.

    Field order is fixed so identical input + claim produce byte-identical
    documents (runtime_ms excluded when comparing).
    """

    tool_version: str
    input_digest: str
    claim: str
    verdict: str  # pass | fail | inconclusive
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    runtime_ms: int = 0

    def to_json(self) -> str:
        doc = {
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "claim": self.claim,
            "verdict": self.verdict,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
            "runtime_ms": self.runtime_ms,
        }
        return json.dumps(doc, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "CertificateDocument":
        doc = json.loads(text)
        return CertificateDocument(
            tool_version=doc["tool_version"],
            input_digest=doc["input_digest"],
            claim=doc["claim"],
            verdict=doc["verdict"],
            witnesses={k: list(v) for k, v in doc["witnesses"].items()},
            runtime_ms=int(doc["runtime_ms"]),
        )
