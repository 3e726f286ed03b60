"""Hoffman graphs and edge-signed graphs.

A Hoffman graph is a simple graph whose vertices are labelled slim or fat;
fat vertices are pairwise non-adjacent and each fat vertex has a slim
neighbor.  An edge-signed graph carries disjoint sets of (+)- and
(-)-edges.  Vertex ids are dense integers with slim vertices first, which
makes the block layout of the reduced matrices positional.

This module holds the two data types, their validity rules, induced
substructures, the constructive catalog of named graphs, and the JSON /
compact-text exchange formats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union


class InvalidGraphError(ValueError):
    """A structural rule was violated."""


class CatalogError(ValueError):
    """Unknown catalog name or invalid catalog parameters."""


class ParseError(ValueError):
    """Malformed graph input; carries a character or element position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


Edge = "tuple[int, int]"


def _norm_edges(edges: Iterable) -> frozenset:
    out = set()
    for e in edges:
        a, b = e
        a, b = int(a), int(b)
        out.add((a, b) if a <= b else (b, a))
    return frozenset(out)


@dataclass(frozen=True)
class HoffmanGraph:
    """Immutable slim/fat labelled graph.

    Ids 0..slim_count-1 are slim, the rest fat.  Constructing does not
    validate; `validate_hoffman` is the total checking function.
    """

    slim_count: int
    fat_count: int
    edges: frozenset

    @property
    def vertex_count(self) -> int:
        return self.slim_count + self.fat_count

    def is_slim(self, v: int) -> bool:
        return v < self.slim_count

    def slim_vertices(self) -> range:
        return range(self.slim_count)

    def fat_vertices(self) -> range:
        return range(self.slim_count, self.vertex_count)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a <= b else (b, a)) in self.edges


@dataclass(frozen=True)
class EdgeSignedGraph:
    """Immutable graph with disjoint (+)- and (-)-edge sets."""

    vertex_count: int
    plus_edges: frozenset
    minus_edges: frozenset

    def sign(self, a: int, b: int) -> int:
        e = (a, b) if a <= b else (b, a)
        if e in self.plus_edges:
            return 1
        if e in self.minus_edges:
            return -1
        return 0

    def all_edges(self) -> frozenset:
        return self.plus_edges | self.minus_edges


def hoffman(slim: int, fat: int, edges: Iterable = ()) -> HoffmanGraph:
    return HoffmanGraph(int(slim), int(fat), _norm_edges(edges))


def signed(n: int, plus: Iterable = (), minus: Iterable = ()) -> EdgeSignedGraph:
    return EdgeSignedGraph(int(n), _norm_edges(plus), _norm_edges(minus))


@lru_cache(maxsize=8192)
def adjacency(g: HoffmanGraph) -> tuple:
    """Neighbor sets indexed by vertex id."""
    nbr = [set() for _ in range(g.vertex_count)]
    for a, b in g.edges:
        nbr[a].add(b)
        nbr[b].add(a)
    return tuple(frozenset(s) for s in nbr)


def fat_neighbors(g: HoffmanGraph, v: int) -> frozenset:
    return frozenset(u for u in adjacency(g)[v] if not g.is_slim(u))


def slim_neighbors(g: HoffmanGraph, v: int) -> frozenset:
    return frozenset(u for u in adjacency(g)[v] if g.is_slim(u))


# ---------------------------------------------------------------------------
# validity


def validate_hoffman(g: HoffmanGraph) -> Union[str, None]:
    """None if valid, else a description naming the failing rule and witness."""
    if g.slim_count < 0 or g.fat_count < 0:
        return "negative vertex count"
    n = g.vertex_count
    for a, b in sorted(g.edges):
        if a == b:
            return f"loop at vertex {a}"
        if not (0 <= a < n and 0 <= b < n):
            return f"edge ({a},{b}) out of range"
        if not g.is_slim(a) and not g.is_slim(b):
            return f"fat-fat edge ({a},{b})"
    if g.fat_count:
        nbr = adjacency(g)
        for f in g.fat_vertices():
            if not any(g.is_slim(u) for u in nbr[f]):
                return f"fat vertex {f} has no slim neighbor"
    return None


def require_valid(g: HoffmanGraph) -> HoffmanGraph:
    msg = validate_hoffman(g)
    if msg is not None:
        raise InvalidGraphError(msg)
    return g


def validate_signed(s: EdgeSignedGraph) -> Union[str, None]:
    if s.vertex_count < 0:
        return "negative vertex count"
    for a, b in sorted(s.plus_edges | s.minus_edges):
        if a == b:
            return f"loop at vertex {a}"
        if not (0 <= a < s.vertex_count and 0 <= b < s.vertex_count):
            return f"edge ({a},{b}) out of range"
    overlap = s.plus_edges & s.minus_edges
    if overlap:
        a, b = min(overlap)
        return f"edge ({a},{b}) is both (+) and (-)"
    return None


def is_fat(g: HoffmanGraph) -> bool:
    """True iff every slim vertex has at least one fat neighbor."""
    return all(fat_neighbors(g, v) for v in g.slim_vertices())


def is_connected_signed(s: EdgeSignedGraph) -> bool:
    n = s.vertex_count
    if n <= 1:
        return True
    nbr = [set() for _ in range(n)]
    for a, b in s.all_edges():
        nbr[a].add(b)
        nbr[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in nbr[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


# ---------------------------------------------------------------------------
# induced substructures


def induced_hoffman_subgraph(g: HoffmanGraph, keep: Iterable) -> HoffmanGraph:
    """Induced subgraph on `keep`, slim labels preserved, ids recompacted
    slim-first.  Raises if a kept fat vertex loses all slim neighbors."""
    keep = set(int(v) for v in keep)
    if not keep <= set(range(g.vertex_count)):
        raise InvalidGraphError("keep set contains unknown vertex ids")
    slims = sorted(v for v in keep if g.is_slim(v))
    fats = sorted(v for v in keep if not g.is_slim(v))
    remap = {v: i for i, v in enumerate(slims + fats)}
    edges = [(remap[a], remap[b]) for a, b in g.edges if a in keep and b in keep]
    sub = hoffman(len(slims), len(fats), edges)
    msg = validate_hoffman(sub)
    if msg is not None:
        raise InvalidGraphError(f"induced subgraph invalid: {msg}")
    return sub


def slim_subgraph(g: HoffmanGraph) -> HoffmanGraph:
    """Induced subgraph on slim vertices (a fat-free Hoffman graph)."""
    edges = [(a, b) for a, b in g.edges if g.is_slim(a) and g.is_slim(b)]
    return hoffman(g.slim_count, 0, edges)


def induced_signed_subgraph(s: EdgeSignedGraph, keep: Iterable) -> EdgeSignedGraph:
    keep = sorted(set(int(v) for v in keep))
    if not set(keep) <= set(range(s.vertex_count)):
        raise InvalidGraphError("keep set contains unknown vertex ids")
    remap = {v: i for i, v in enumerate(keep)}
    kset = set(keep)
    plus = [(remap[a], remap[b]) for a, b in s.plus_edges if a in kset and b in kset]
    minus = [(remap[a], remap[b]) for a, b in s.minus_edges if a in kset and b in kset]
    return signed(len(keep), plus, minus)


# ---------------------------------------------------------------------------
# catalog of named graphs


def make_q(p: int, q: int, r: int) -> EdgeSignedGraph:
    """The signed graph with an all-(+) r-clique, p pendant (+)-vertices and
    q pendant (-)-vertices attached to distinct clique vertices.

    Vertices: pendant (+) block 0..p-1, pendant (-) block p..p+q-1, clique
    p+q..p+q+r-1.  Anchors are the first p clique vertices for the (+)
    pendants and the next q for the (-) pendants.
    """
    if p < 0 or q < 0 or r < 0:
        raise CatalogError("parameters must be non-negative")
    if p + q > r:
        raise CatalogError(f"requires p+q <= r, got ({p},{q},{r})")
    base = p + q
    plus = [(base + i, base + j) for i in range(r) for j in range(i + 1, r)]
    plus += [(i, base + i) for i in range(p)]
    minus = [(p + j, base + p + j) for j in range(q)]
    return signed(p + q + r, plus, minus)


def make_k1t(t: int) -> HoffmanGraph:
    """One slim vertex joined to t fat vertices."""
    if t < 0:
        raise CatalogError("t must be non-negative")
    return hoffman(1, t, [(0, 1 + i) for i in range(t)])


_FIXED_CATALOG = {
    # slim ids first, then fats
    "H_I": lambda: hoffman(1, 1, [(0, 1)]),
    "H_II": lambda: hoffman(1, 2, [(0, 1), (0, 2)]),
    "H_III": lambda: hoffman(2, 1, [(0, 2), (1, 2)]),
    "H_IV": lambda: hoffman(2, 2, [(0, 1), (0, 2), (1, 3)]),
    # derived shapes, confirmed by the exhaustive two-slim derivation:
    # H_XVI: slim edge, one endpoint with two private fats, the other with one
    # H_XVII: non-adjacent slims sharing a fat, one with an extra private fat
    "H_XVI": lambda: hoffman(2, 3, [(0, 1), (0, 2), (0, 3), (1, 4)]),
    "H_XVII": lambda: hoffman(2, 2, [(0, 2), (1, 2), (0, 3)]),
    "T1": lambda: signed(3, [(0, 1)], [(0, 2), (1, 2)]),
    "T2": lambda: signed(3, [(0, 2), (1, 2)], [(0, 1)]),
    "S11": lambda: signed(1),
    "S21": lambda: signed(2, [(0, 1)]),
    "S22": lambda: signed(2, [], [(0, 1)]),
}

_PARAM_RE = re.compile(r"^(K1T|Q)\(([^)]*)\)$")


def catalog(name: str):
    """Named graph lookup: H_I..H_IV, H_XVI, H_XVII, T1, T2, S11, S21, S22,
    K1T(t), Q(p,q,r)."""
    name = name.strip()
    if name in _FIXED_CATALOG:
        return _FIXED_CATALOG[name]()
    m = _PARAM_RE.match(name)
    if m:
        try:
            args = [int(x) for x in m.group(2).split(",")]
        except ValueError as exc:
            raise CatalogError(f"bad parameters in {name!r}") from exc
        if m.group(1) == "K1T":
            if len(args) != 1:
                raise CatalogError("K1T takes one parameter")
            return make_k1t(args[0])
        if len(args) != 3:
            raise CatalogError("Q takes three parameters")
        return make_q(*args)
    raise CatalogError(f"unknown catalog name {name!r}")


CATALOG_NAMES = tuple(sorted(_FIXED_CATALOG)) + ("K1T(t)", "Q(p,q,r)")


# ---------------------------------------------------------------------------
# structural recognition of the Q family


@dataclass(frozen=True)
class QShape:
    """A witnessed match of an edge-signed graph against Q(p,q,r):
    the clique, and pendant-anchor pairs by sign."""

    p: int
    q: int
    r: int
    clique: tuple
    plus_pendants: tuple   # (pendant, anchor) pairs
    minus_pendants: tuple


def _maximal_plus_cliques(s: EdgeSignedGraph) -> list:
    n = s.vertex_count
    nbr = [set() for _ in range(n)]
    for a, b in s.plus_edges:
        nbr[a].add(b)
        nbr[b].add(a)
    out = []

    def grow(clique: set, candidates: set):
        if not candidates:
            if all(not clique <= nbr[v] for v in range(n) if v not in clique):
                out.append(tuple(sorted(clique)))
            return
        v = min(candidates)
        grow(clique | {v}, candidates & nbr[v])
        grow(clique, candidates - {v})

    grow(set(), set(range(n)))
    return sorted(set(out), key=lambda c: (-len(c), c))


def recognize_q(s: EdgeSignedGraph) -> Union[QShape, None]:
    """Match s against Q(p,q,r) structurally: find an all-(+) clique whose
    removal leaves an independent set of single-edge pendants with distinct
    anchors, (+)-anchors disjoint from (-)-anchors.  Largest clique wins,
    so parameters are deterministic."""
    n = s.vertex_count
    if n == 0:
        return QShape(0, 0, 0, (), (), ())
    deg = [0] * n
    for a, b in s.all_edges():
        deg[a] += 1
        deg[b] += 1
    for clique in _maximal_plus_cliques(s):
        cset = set(clique)
        outside = [v for v in range(n) if v not in cset]
        plus_p, minus_p = [], []
        ok = True
        for v in outside:
            if deg[v] != 1:
                ok = False
                break
            anchor = next(u for u in range(n)
                          if s.sign(v, u) != 0)
            if anchor not in cset:
                ok = False
                break
            if s.sign(v, anchor) > 0:
                plus_p.append((v, anchor))
            else:
                minus_p.append((v, anchor))
        if not ok:
            continue
        pa = [a for _, a in plus_p]
        qa = [a for _, a in minus_p]
        if len(set(pa)) != len(pa) or len(set(qa)) != len(qa) or set(pa) & set(qa):
            continue
        p, q, r = len(plus_p), len(minus_p), len(clique)
        if p + q > r:
            continue
        return QShape(p, q, r, clique, tuple(sorted(plus_p)), tuple(sorted(minus_p)))
    return None


# ---------------------------------------------------------------------------
# exchange formats


def to_json_obj(g) -> dict:
    if isinstance(g, HoffmanGraph):
        return {
            "slim": g.slim_count,
            "fat": g.fat_count,
            "edges": sorted([a, b] for a, b in g.edges),
        }
    if isinstance(g, EdgeSignedGraph):
        return {
            "n": g.vertex_count,
            "plus": sorted([a, b] for a, b in g.plus_edges),
            "minus": sorted([a, b] for a, b in g.minus_edges),
        }
    raise TypeError(f"not a graph: {g!r}")


def from_json_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "slim" in obj:
        try:
            g = hoffman(obj["slim"], obj["fat"], obj.get("edges", ()))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed Hoffman graph object: {exc}") from exc
        msg = validate_hoffman(g)
        if msg is not None:
            raise ParseError(msg)
        return g
    if "n" in obj:
        try:
            s = signed(obj["n"], obj.get("plus", ()), obj.get("minus", ()))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed edge-signed graph object: {exc}") from exc
        msg = validate_signed(s)
        if msg is not None:
            raise ParseError(msg)
        return s
    raise ParseError("object is neither a Hoffman nor an edge-signed graph")


def to_text(g) -> str:
    """Compact one-line form: 'hg n_s n_f a-b,...' / 'sg n +a-b,... -a-b,...'."""
    if isinstance(g, HoffmanGraph):
        parts = [f"hg {g.slim_count} {g.fat_count}"]
        if g.edges:
            parts.append(",".join(f"{a}-{b}" for a, b in sorted(g.edges)))
        return " ".join(parts)
    if isinstance(g, EdgeSignedGraph):
        parts = [f"sg {g.vertex_count}"]
        if g.plus_edges:
            parts.append("+" + ",".join(f"{a}-{b}" for a, b in sorted(g.plus_edges)))
        if g.minus_edges:
            parts.append("-" + ",".join(f"{a}-{b}" for a, b in sorted(g.minus_edges)))
        return " ".join(parts)
    raise TypeError(f"not a graph: {g!r}")


def _parse_pairs(text: str, offset: int) -> list:
    pairs = []
    if not text:
        return pairs
    pos = offset
    for token in text.split(","):
        m = re.fullmatch(r"(\d+)-(\d+)", token)
        if not m:
            raise ParseError(f"bad edge token {token!r}", pos)
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos += len(token) + 1
    return pairs


def from_text(line: str):
    """Parse the compact one-line form; raises ParseError with positions."""
    stripped = line.strip()
    tokens = stripped.split(" ")
    if not tokens or tokens[0] not in ("hg", "sg"):
        raise ParseError("line must start with 'hg' or 'sg'", 0)
    if tokens[0] == "hg":
        if len(tokens) < 3:
            raise ParseError("expected 'hg n_s n_f [edges]'", len(tokens[0]))
        try:
            ns, nf = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError("vertex counts must be integers", len("hg "))
        offset = len(" ".join(tokens[:3])) + 1
        pairs = _parse_pairs(tokens[3], offset) if len(tokens) > 3 else []
        if len(tokens) > 4:
            raise ParseError("unexpected trailing tokens", offset)
        g = hoffman(ns, nf, pairs)
        msg = validate_hoffman(g)
        if msg is not None:
            raise ParseError(msg, offset)
        return g
    if len(tokens) < 2:
        raise ParseError("expected 'sg n [+edges] [-edges]'", len(tokens[0]))
    try:
        n = int(tokens[1])
    except ValueError:
        raise ParseError("vertex count must be an integer", len("sg "))
    plus, minus = [], []
    offset = len(" ".join(tokens[:2])) + 1
    for token in tokens[2:]:
        if token.startswith("+"):
            plus.extend(_parse_pairs(token[1:], offset + 1))
        elif token.startswith("-"):
            minus.extend(_parse_pairs(token[1:], offset + 1))
        else:
            raise ParseError(f"edge list must start with '+' or '-', got {token!r}",
                             offset)
        offset += len(token) + 1
    s = signed(n, plus, minus)
    msg = validate_signed(s)
    if msg is not None:
        raise ParseError(msg, offset)
    return s


def parse_graph(text: str):
    """Parse either exchange format (JSON object or compact text)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from exc
        return from_json_obj(obj)
    return from_text(stripped)
