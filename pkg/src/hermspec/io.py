"""Graph serialization.

Oriented graphs use the standard digraph6 ASCII encoding ('&' header,
row-major adjacency bits).  Mixed and signed graphs use a small line format:

    mixed <n>          signed <n>
    u > v   (arc)      u + v   (positive edge)
    u - v   (edge)     u - v   (negative edge)
"""

from __future__ import annotations

from .graphs import GraphError, MixedGraph, OrientedGraph, SignedGraph


def encode_digraph6(D: OrientedGraph) -> str:
    if not D.is_oriented:
        raise GraphError("digraph6 encodes oriented graphs only")
    n = D.n
    if n > 62:
        raise GraphError("digraph6 writer supports n <= 62")
    bits = [0] * (n * n)
    for u, v in D.arcs:
        bits[u * n + v] = 1
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "&" + chr(n + 63) + "".join(chars)


def decode_digraph6(s: str) -> OrientedGraph:
    s = s.strip()
    if s.startswith(">>digraph6<<"):
        s = s[12:]
    if not s.startswith("&"):
        raise GraphError("not a digraph6 string (missing '&' header)")
    data = s[1:]
    n = ord(data[0]) - 63
    if n < 0 or n > 62:
        raise GraphError("digraph6 reader supports 0 <= n <= 62")
    bits = []
    for ch in data[1:]:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise GraphError(f"invalid digraph6 character {ch!r}")
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    if len(bits) < n * n:
        raise GraphError("digraph6 string too short")
    arcs = [(i // n, i % n) for i in range(n * n) if bits[i]]
    return OrientedGraph(n, arcs)


def encode_mixed(D: MixedGraph) -> str:
    lines = [f"mixed {D.n}"]
    lines += [f"{u} > {v}" for u, v in D.arcs]
    lines += [f"{u} - {v}" for u, v in D.edges]
    return "\n".join(lines) + "\n"


def encode_signed(S: SignedGraph) -> str:
    lines = [f"signed {S.n}"]
    lines += [f"{u} {'+' if sign > 0 else '-'} {v}" for u, v, sign in S.signed_edges]
    return "\n".join(lines) + "\n"


def _parse_relation_lines(lines):
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[1] not in (">", "-", "+"):
            raise GraphError(f"cannot parse relation line {line!r}")
        yield int(parts[0]), parts[1], int(parts[2])


def decode_mixed(text: str) -> MixedGraph:
    lines = text.strip().splitlines()
    if not lines or not lines[0].startswith("mixed "):
        raise GraphError("missing 'mixed <n>' header")
    n = int(lines[0].split()[1])
    arcs, edges = [], []
    for u, op, v in _parse_relation_lines(lines[1:]):
        if op == ">":
            arcs.append((u, v))
        elif op == "-":
            edges.append((u, v))
        else:
            raise GraphError("'+' is not valid in mixed format")
    return MixedGraph(n, tuple(arcs), tuple(edges))


def decode_signed(text: str) -> SignedGraph:
    lines = text.strip().splitlines()
    if not lines or not lines[0].startswith("signed "):
        raise GraphError("missing 'signed <n>' header")
    n = int(lines[0].split()[1])
    signed = []
    for u, op, v in _parse_relation_lines(lines[1:]):
        if op == ">":
            raise GraphError("'>' is not valid in signed format")
        signed.append((u, v, 1 if op == "+" else -1))
    return SignedGraph(n, tuple(signed))


def load_graph(text: str):
    """Dispatch on content: digraph6, mixed or signed format."""
    stripped = text.strip()
    if stripped.startswith("&") or stripped.startswith(">>digraph6<<"):
        return decode_digraph6(stripped.splitlines()[0])
    if stripped.startswith("mixed "):
        return decode_mixed(stripped)
    if stripped.startswith("signed "):
        return decode_signed(stripped)
    raise GraphError("unrecognized graph format")


def dump_graph(G) -> str:
    if isinstance(G, SignedGraph):
        return encode_signed(G)
    if isinstance(G, MixedGraph):
        if G.is_oriented:
            return encode_digraph6(OrientedGraph(G.n, G.arcs)) + "\n"
        return encode_mixed(G)
    raise GraphError(f"cannot serialize {type(G).__name__}")
