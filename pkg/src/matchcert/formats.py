"""Text formats: graph6, edge lists and certificate documents."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from . import __version__
from .errors import (
    EdgeListSyntaxError,
    GraphError,
    InvalidCertificate,
    LoopEdge,
    MalformedBody,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBody,
    UnsupportedSize,
    VertexOutOfRange,
)
from .graph import Graph
from .matching import Matching
from .tutte import (
    Certificate,
    PerfectMatchingCertificate,
    TutteViolatorCertificate,
    verify_certificate,
)

GRAPH6_HEADER = ">>graph6<<"
_MAX_N = 68719476735  # 2**36 - 1, largest size the 8-byte header can express


def _encode_size(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise UnsupportedSize(f"graph6 cannot encode {n} vertices")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise MalformedHeader("empty graph6 record")
    if data[0] != 126:
        if not 63 <= data[0] <= 125:
            raise MalformedHeader(f"invalid size byte {data[0]!r}")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        digits, start = data[2:8], 2
        width = 6
    else:
        digits, start = data[1:4], 1
        width = 3
    if len(digits) < width or any(not 63 <= d <= 126 for d in digits):
        raise MalformedHeader("truncated or invalid extended size header")
    n = 0
    for d in digits:
        n = n << 6 | (d - 63)
    return n, start + width


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    header = _encode_size(g.n)
    bits = [g.adj(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = value << 1 | bit
        body.append(chr(value + 63))
    return header + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record.

    An optional ``>>graph6<<`` prefix and surrounding whitespace are
    ignored.  Padding bits must be zero.
    """
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedHeader("graph6 records are ASCII") from exc
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise TruncatedBody(f"expected {nbytes} body bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbage(f"{len(body) - nbytes} bytes after the adjacency data")
    for ch in body:
        if not 63 <= ch <= 126:
            raise MalformedBody(f"invalid body byte {ch!r}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes and (body[-1] - 63) & ((1 << (nbytes * 6 - nbits)) - 1):
        raise TrailingGarbage("nonzero padding bits")
    return Graph._trusted(tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise EdgeListSyntaxError("expected 'n <count>'", line=lineno)
            n = _int(fields[1], lineno)
            if n < 0:
                raise EdgeListSyntaxError("vertex count must be nonnegative", line=lineno)
            continue
        if len(fields) != 2:
            raise EdgeListSyntaxError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = _int(fields[0], lineno), _int(fields[1], lineno)
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", line=lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in range({n})", line=lineno)
        edges.append((u, v))
    if n is None:
        raise EdgeListSyntaxError("missing 'n <count>' line")
    return Graph(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListSyntaxError(f"not an integer: {token!r}", line=lineno) from None


def emit_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def fingerprint(g: Graph) -> dict[str, Any]:
    """Vertex count plus a SHA-256 over the sorted edge list."""
    canon = ";".join(f"{u},{v}" for u, v in g.edges())
    return {"n": g.n, "edges_sha256": hashlib.sha256(f"{g.n}|{canon}".encode()).hexdigest()}


def certificate_to_dict(g: Graph, cert: Certificate) -> dict[str, Any]:
    if not verify_certificate(g, cert):
        raise InvalidCertificate("certificate does not verify against the graph")
    if isinstance(cert, PerfectMatchingCertificate):
        payload: list[Any] = [list(p) for p in cert.matching.pairs()]
    else:
        payload = sorted(cert.vertices)
    return {
        "graph": fingerprint(g),
        "kind": cert.kind,
        "payload": payload,
        "tool_version": __version__,
    }


def emit_certificate(g: Graph, cert: Certificate) -> str:
    """Serialize a verified certificate as a deterministic JSON document."""
    return json.dumps(certificate_to_dict(g, cert), sort_keys=True) + "\n"


def parse_certificate(g: Graph, text: str) -> Certificate:
    """Read a certificate document for ``g``.

    Raises :class:`InvalidCertificate` if the document is malformed or
    was issued for a different graph.  The certificate itself is not
    verified here; see :func:`matchcert.tutte.verify_certificate`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidCertificate(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidCertificate("certificate document must be a JSON object")
    if doc.get("graph") != fingerprint(g):
        raise InvalidCertificate("graph fingerprint does not match")
    kind, payload = doc.get("kind"), doc.get("payload")
    if not isinstance(payload, list):
        raise InvalidCertificate("payload must be a list")
    try:
        if kind == PerfectMatchingCertificate.kind:
            pairs = [(int(u), int(v)) for u, v in payload]
            return PerfectMatchingCertificate(Matching.from_pairs(g, pairs))
        if kind == TutteViolatorCertificate.kind:
            return TutteViolatorCertificate(frozenset(int(v) for v in payload))
    except (TypeError, ValueError) as exc:
        raise InvalidCertificate(f"bad payload: {exc}") from exc
    raise InvalidCertificate(f"unknown certificate kind {kind!r}")


def read_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse ``text`` as ``"g6"`` or ``"edges"``; guess when ``fmt`` is None."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if fmt is None:
        fmt = "edges" if lines and lines[0].split()[0] == "n" else "g6"
    if fmt == "g6":
        if len(lines) != 1:
            raise GraphError(f"expected exactly one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")
