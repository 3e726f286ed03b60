"""Decompositions of Hoffman graphs and membership witnesses.

A decomposition is a family of induced Hoffman subgraphs covering the
graph, with pairwise disjoint slim parts, fat neighbors pulled into their
slim vertices' parts, and the cross-part compatibility rule: slim vertices
in different parts share at most one fat vertex, exactly one iff they are
adjacent.

The module also builds the two constructive reducibility witnesses (the
one-fat-vertex-per-edge construction for slim graphs, and the shared-fat
construction for graphs whose special graph is a Q shape) and verifies
family-membership witnesses: a target graph shown induced inside a
container that decomposes into parts drawn from a fixed family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional, Sequence, Union

from .algebra import (
    NEG_ONE_MINUS_TAU,
    char_poly,
    compare_smallest_roots,
    lambda_min_at_least,
)
from .iso import CanonicalKey, canonical_key, contains_induced, is_induced_embedding
from .model import (
    EdgeSignedGraph,
    HoffmanGraph,
    InvalidGraphError,
    QShape,
    adjacency,
    catalog,
    fat_neighbors,
    from_text,
    hoffman,
    induced_hoffman_subgraph,
    is_fat,
    recognize_q,
    require_valid,
    to_text,
    validate_hoffman,
)
from .spectral import b_matrix, special_graph


class DecompositionError(ValueError):
    """Inputs violate a stated precondition."""


class InternalCheckError(RuntimeError):
    """A consequence the theory guarantees failed to hold; loud on purpose."""


@dataclass(frozen=True)
class Decomposition:
    """Candidate decomposition: parent plus vertex-id sets for the parts."""

    parent: HoffmanGraph
    parts: tuple

    def part_graphs(self) -> list:
        return [induced_hoffman_subgraph(self.parent, part) for part in self.parts]


def validate_decomposition(d: Decomposition) -> Union[str, None]:
    """None if the four decomposition rules hold, else the first violation."""
    g = d.parent
    msg = validate_hoffman(g)
    if msg is not None:
        return f"parent invalid: {msg}"
    if not d.parts:
        return "no parts"
    all_vertices = set(range(g.vertex_count))
    seen = set()
    for i, part in enumerate(d.parts):
        if not part:
            return f"part {i} is empty"
        if not set(part) <= all_vertices:
            return f"part {i} contains unknown vertex ids"
        try:
            induced_hoffman_subgraph(g, part)
        except InvalidGraphError as exc:
            return f"part {i} does not induce a valid Hoffman graph: {exc}"
        seen |= set(part)
    if seen != all_vertices:
        missing = min(all_vertices - seen)
        return f"vertex {missing} not covered by any part"
    slim_of = {}
    for i, part in enumerate(d.parts):
        for v in part:
            if g.is_slim(v):
                if v in slim_of:
                    return f"slim vertex {v} in parts {slim_of[v]} and {i}"
                slim_of[v] = i
    nbr = adjacency(g)
    for i, part in enumerate(d.parts):
        pset = set(part)
        for v in part:
            if g.is_slim(v):
                for f in nbr[v]:
                    if not g.is_slim(f) and f not in pset:
                        return (f"fat vertex {f} adjacent to slim {v} "
                                f"is missing from part {i}")
    slims = [v for v in g.slim_vertices() if v in slim_of]
    for a_idx in range(len(slims)):
        for b_idx in range(a_idx + 1, len(slims)):
            x, y = slims[a_idx], slims[b_idx]
            if slim_of[x] == slim_of[y]:
                continue
            shared = len(fat_neighbors(g, x) & fat_neighbors(g, y))
            if shared > 1:
                return f"cross-part slim pair ({x},{y}) shares {shared} fat vertices"
            if (shared == 1) != g.has_edge(x, y):
                return (f"cross-part slim pair ({x},{y}): shared fat count {shared} "
                        f"inconsistent with adjacency {g.has_edge(x, y)}")
    return None


def split_by_special_components(g: HoffmanGraph) -> Optional[Decomposition]:
    """Split along connected components of the special graph; None when the
    special graph is connected (the graph is indecomposable)."""
    require_valid(g)
    if g.slim_count == 0:
        return None
    s = special_graph(g)
    comp = _components(s)
    if len(comp) <= 1:
        return None
    parts = []
    for block in comp:
        fats = set()
        for v in block:
            fats |= fat_neighbors(g, v)
        parts.append(frozenset(block) | fats)
    d = Decomposition(g, tuple(parts))
    msg = validate_decomposition(d)
    if msg is not None:
        raise InternalCheckError(
            f"component split of a valid graph failed validation: {msg}")
    return d


def _components(s: EdgeSignedGraph) -> list:
    n = s.vertex_count
    nbr = [set() for _ in range(n)]
    for a, b in s.all_edges():
        nbr[a].add(b)
        nbr[b].add(a)
    seen = set()
    out = []
    for v in range(n):
        if v in seen:
            continue
        block = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in nbr[u]:
                if w not in seen:
                    seen.add(w)
                    block.add(w)
                    stack.append(w)
        out.append(sorted(block))
    return out


def lambda_min_of_sum_check(d: Decomposition) -> bool:
    """Exact equality of the parent's smallest eigenvalue with the minimum
    over the parts, via Sturm bisection plus a shared-factor certificate."""
    msg = validate_decomposition(d)
    if msg is not None:
        raise DecompositionError(msg)
    if d.parent.slim_count == 0:
        return True
    parent_poly = char_poly(b_matrix(d.parent).entries)
    part_polys = [char_poly(b_matrix(pg).entries)
                  for pg in d.part_graphs() if pg.slim_count]
    if not part_polys:
        return False
    min_poly = part_polys[0]
    for p in part_polys[1:]:
        if compare_smallest_roots(p, min_poly) < 0:
            min_poly = p
    return compare_smallest_roots(parent_poly, min_poly) == 0


# ---------------------------------------------------------------------------
# constructive reducibility witnesses


def reduce_by_degree(g_slim: HoffmanGraph) -> tuple:
    """Attach one fat vertex per edge; parts are the closed fat stars of
    the slim vertices, each a one-slim star of the vertex's degree."""
    require_valid(g_slim)
    if g_slim.fat_count != 0:
        raise DecompositionError("input must be a slim (fat-free) graph")
    if g_slim.slim_count < 2:
        raise DecompositionError("need at least two vertices")
    n = g_slim.slim_count
    edge_list = sorted(g_slim.edges)
    edges = list(g_slim.edges)
    for k, (a, b) in enumerate(edge_list):
        edges += [(a, n + k), (b, n + k)]
    container = hoffman(n, len(edge_list), edges)
    parts = []
    for v in range(n):
        fats = {n + k for k, (a, b) in enumerate(edge_list) if v in (a, b)}
        parts.append(frozenset({v} | fats))
    d = Decomposition(container, tuple(parts))
    msg = validate_decomposition(d)
    if msg is not None:
        raise InternalCheckError(f"degree reduction failed validation: {msg}")
    return container, d


def reduce_q_realization(g: HoffmanGraph, partition: Sequence) -> tuple:
    """Add a shared fat vertex over the clique block of the special graph.

    `partition` gives the slim blocks (plus-pendants, minus-pendants,
    clique) matching the Q shape of the special graph.  The result is a
    container with one extra fat vertex joined to the clique block and a
    decomposition with one part per clique vertex; parts are two-slim
    graphs at the threshold or one-slim double stars.
    """
    require_valid(g)
    vp, vq, vr = (tuple(int(v) for v in block) for block in partition)
    slims = set(g.slim_vertices())
    if sorted((*vp, *vq, *vr)) != sorted(slims):
        raise DecompositionError("partition must cover the slim vertices exactly")
    if not all(len(fat_neighbors(g, v)) == 1 for v in slims):
        raise DecompositionError("every slim vertex must have exactly one fat neighbor")
    s = special_graph(g)
    # the partition must realize the Q shape inside the special graph
    vr_set = set(vr)
    for a_idx in range(len(vr)):
        for b_idx in range(a_idx + 1, len(vr)):
            if s.sign(vr[a_idx], vr[b_idx]) != 1:
                raise DecompositionError("clique block is not an all-(+) clique")
    anchor = {}
    for v in (*vp, *vq):
        want = 1 if v in vp else -1
        partners = [u for u in range(s.vertex_count) if s.sign(v, u) != 0]
        if len(partners) != 1 or s.sign(v, partners[0]) != want or partners[0] not in vr_set:
            raise DecompositionError(
                f"vertex {v} is not a single-{'plus' if want == 1 else 'minus'} pendant")
        if partners[0] in anchor:
            raise DecompositionError(f"clique vertex {partners[0]} anchors two pendants")
        anchor[partners[0]] = v
    f_star = g.vertex_count
    container = hoffman(g.slim_count, g.fat_count + 1,
                        list(g.edges) + [(c, f_star) for c in vr])
    fat_of = {v: min(fat_neighbors(g, v)) for v in slims}
    parts = []
    for c in vr:
        if c in anchor:
            x = anchor[c]
            parts.append(frozenset({x, c, fat_of[x], fat_of[c], f_star}))
        else:
            parts.append(frozenset({c, fat_of[c], f_star}))
    d = Decomposition(container, tuple(parts))
    msg = validate_decomposition(d)
    if msg is not None:
        raise InternalCheckError(f"Q realization split failed validation: {msg}")
    for pg in d.part_graphs():
        if not lambda_min_at_least(b_matrix(pg).entries, NEG_ONE_MINUS_TAU):
            raise InternalCheckError("Q realization produced a part below threshold")
    return container, d


def _biclique_partitions(edges: list, left: frozenset, right: frozenset,
                         capacity: dict):
    """Exact partitions of a crossing edge set into bicliques A x B.

    Each biclique becomes one added fat vertex; a crossing pair may be
    covered by exactly one biclique (slim pairs across parts may share at
    most one fat vertex).  `capacity` bounds how many bicliques may touch
    each vertex: a slim vertex whose part fat-degree exceeds two drags the
    part below the -1-tau bound, so covers violating it cannot witness."""
    edge_set = set(edges)

    def rec(uncovered: frozenset, cap: dict):
        if not uncovered:
            yield []
            return
        x, y = min(uncovered)
        if cap[x] < 1 or cap[y] < 1:
            return
        lcands = sorted(u for u in left
                        if cap[u] >= 1 and ((u, y) in edge_set or (y, u) in edge_set))
        rcands = sorted(v for v in right
                        if cap[v] >= 1 and ((x, v) in edge_set or (v, x) in edge_set))
        for la in range(len(lcands)):
            for aset in combinations(lcands, la + 1):
                if x not in aset:
                    continue
                for lb in range(len(rcands)):
                    for bset in combinations(rcands, lb + 1):
                        if y not in bset:
                            continue
                        pairs = {tuple(sorted((u, v))) for u in aset for v in bset}
                        if not pairs <= uncovered:
                            continue
                        ncap = dict(cap)
                        for v in aset + bset:
                            ncap[v] -= 1
                        for rest in rec(uncovered - frozenset(pairs), ncap):
                            yield [(aset, bset)] + rest

    yield from rec(frozenset(tuple(sorted(e)) for e in edges), dict(capacity))


def find_reducibility_witness(g: HoffmanGraph) -> Optional[tuple]:
    """Search for a reducibility certificate at the -1-tau bound: a
    container (g plus added fat vertices) admitting a two-part
    decomposition with both parts at or above -1-tau.

    A container that only adds fat vertices is characterized exactly by a
    slim bipartition plus an exact biclique cover of the crossing adjacent
    pairs lacking a common fat (each new fat vertex covers one biclique of
    crossing pairs; covering a pair twice or touching a non-adjacent
    crossing pair would break the decomposition rules).  The search is
    complete over such containers; added slim vertices are never used by
    the constructions this certifies.  Returns (container, decomposition)
    or None."""
    require_valid(g)
    ns = g.slim_count
    if ns < 2:
        return None
    fats = {v: fat_neighbors(g, v) for v in range(ns)}
    rest = list(range(1, ns))
    for size in range(0, ns - 1):
        for extra in combinations(rest, size):
            left = frozenset({0} | set(extra))
            right = frozenset(range(ns)) - left
            if not right:
                continue
            dead = False
            need = []
            for x in sorted(left):
                for y in sorted(right):
                    shared = len(fats[x] & fats[y])
                    adj = g.has_edge(x, y)
                    if shared > 1 or (shared == 1 and not adj):
                        dead = True
                        break
                    if adj and shared == 0:
                        need.append((x, y) if x < y else (y, x))
                if dead:
                    break
            if dead:
                continue
            capacity = {v: 2 - len(fats[v]) for v in range(ns)}
            for cover in _biclique_partitions(need, left, right, capacity):
                edges = list(g.edges)
                base = g.vertex_count
                for i, (aset, bset) in enumerate(cover):
                    edges += [(v, base + i) for v in aset + bset]
                container = hoffman(ns, g.fat_count + len(cover), edges)
                cfat = {v: fat_neighbors(container, v) for v in range(ns)}
                parts = []
                for block in (left, right):
                    pf = set()
                    for v in block:
                        pf |= cfat[v]
                    parts.append(frozenset(block) | pf)
                d = Decomposition(container, tuple(parts))
                if validate_decomposition(d) is not None:
                    continue
                if all(lambda_min_at_least(b_matrix(pg).entries, NEG_ONE_MINUS_TAU)
                       for pg in d.part_graphs()):
                    return container, d
    return None


# ---------------------------------------------------------------------------
# family-membership witnesses


@dataclass(frozen=True)
class HLineWitness:
    """Target shown induced in a container decomposing into family parts."""

    target: HoffmanGraph
    container: HoffmanGraph
    embedding: tuple
    decomposition: Decomposition
    family_assignment: tuple  # canonical key hex per part

    def to_json(self) -> str:
        return json.dumps({
            "target": to_text(self.target),
            "container": to_text(self.container),
            "embedding": list(self.embedding),
            "parts": [sorted(p) for p in self.decomposition.parts],
            "family_assignment": list(self.family_assignment),
        }, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "HLineWitness":
        obj = json.loads(text)
        container = from_text(obj["container"])
        return HLineWitness(
            from_text(obj["target"]),
            container,
            tuple(obj["embedding"]),
            Decomposition(container, tuple(frozenset(p) for p in obj["parts"])),
            tuple(obj["family_assignment"]),
        )


def verify_hline_witness(w: HLineWitness, family: Iterable) -> bool:
    """Re-check a witness from scratch against a family of canonical keys."""
    family_keys = {k if isinstance(k, CanonicalKey) else CanonicalKey.from_hex(k)
                   for k in family}
    if w.decomposition.parent != w.container:
        return False
    if not is_induced_embedding(w.container, w.target, w.embedding):
        return False
    if validate_decomposition(w.decomposition) is not None:
        return False
    if len(w.family_assignment) != len(w.decomposition.parts):
        return False
    for part_graph, claimed in zip(w.decomposition.part_graphs(), w.family_assignment):
        key = canonical_key(part_graph)
        if key.hex() != claimed or key not in family_keys:
            return False
    return True


def _witness(target, container, embedding, parts) -> HLineWitness:
    d = Decomposition(container, tuple(frozenset(p) for p in parts))
    assignment = tuple(canonical_key(pg).hex() for pg in d.part_graphs())
    return HLineWitness(target, container, tuple(embedding), d, assignment)


def find_hline_witness(g: HoffmanGraph, family: Sequence,
                       fat_budget: int = 3) -> Optional[HLineWitness]:
    """Search for a family-membership witness.

    Routes, in order: (a) g induced in a family member taken whole;
    (b) the shared-fat construction when the special graph has a Q shape,
    with bare one-slim parts upgraded to their two-slim fattening when the
    family lacks the double star; (c) bounded search adding up to
    `fat_budget` fat vertices and partitioning the slim vertices.
    Deterministic: family ordered by canonical key, candidates generated in
    lexicographic order, first verified witness returned.
    """
    require_valid(g)
    if not is_fat(g):
        raise DecompositionError("witness search requires a fat graph")
    if not lambda_min_at_least(b_matrix(g).entries, NEG_ONE_MINUS_TAU):
        raise DecompositionError("witness search requires the eigenvalue bound")
    members = sorted(family, key=canonical_key)
    family_keys = {canonical_key(F) for F in members}

    # (a) whole family member as its own one-part decomposition
    for F in members:
        emb = contains_induced(F, g)
        if emb is not None:
            w = _witness(g, F, emb, [frozenset(range(F.vertex_count))])
            if verify_hline_witness(w, family_keys):
                return w

    # (b) shared-fat construction over a recognized Q shape
    if g.slim_count and all(len(fat_neighbors(g, v)) == 1 for v in g.slim_vertices()):
        shape = recognize_q(special_graph(g))
        if shape is not None:
            w = _q_shape_witness(g, shape, family_keys)
            if w is not None:
                return w

    # (c) bounded fat augmentation plus slim partitioning
    return _bounded_search_witness(g, family_keys, fat_budget)


def _q_shape_witness(g: HoffmanGraph, shape: QShape, family_keys) -> Optional[HLineWitness]:
    vp = tuple(v for v, _ in shape.plus_pendants)
    vq = tuple(v for v, _ in shape.minus_pendants)
    container, d = reduce_q_realization(g, (vp, vq, shape.clique))
    w = _witness(g, container, range(g.vertex_count), d.parts)
    if verify_hline_witness(w, family_keys):
        return w
    # a bare clique vertex yields the one-slim double star; if the family
    # holds its two-slim fattening instead, graft a pendant slim onto each
    # bare vertex and decompose into the fattened parts
    double_star = canonical_key(catalog("H_II"))
    fattened = canonical_key(catalog("H_XVI"))
    if double_star in family_keys or fattened not in family_keys:
        return None
    anchored = {a for _, a in shape.plus_pendants} | {a for _, a in shape.minus_pendants}
    bare = [c for c in shape.clique if c not in anchored]
    if not bare:
        return None
    ns, nf = g.slim_count, g.fat_count
    nb = len(bare)
    # new ids: slims 0..ns-1 old, ns..ns+nb-1 grafted; fats shift by nb
    slim_new = {c: ns + i for i, c in enumerate(bare)}
    shift = lambda v: v if g.is_slim(v) else v + nb
    edges = [(shift(a), shift(b)) for a, b in g.edges]
    f_star = ns + nb + nf
    edges += [(c, f_star) for c in shape.clique]
    edges += [(c, slim_new[c]) for c in bare]
    edges += [(slim_new[c], f_star + 1 + i) for i, c in enumerate(bare)]
    container = hoffman(ns + nb, nf + 1 + nb, edges)
    fat_of = {v: shift(min(fat_neighbors(g, v))) for v in g.slim_vertices()}
    anchor_of = dict((a, v) for v, a in shape.plus_pendants + shape.minus_pendants)
    parts = []
    for c in shape.clique:
        if c in anchor_of:
            x = anchor_of[c]
            parts.append(frozenset({x, c, fat_of[x], fat_of[c], f_star}))
        else:
            i = bare.index(c)
            parts.append(frozenset(
                {c, slim_new[c], fat_of[c], f_star, f_star + 1 + i}))
    embedding = [shift(v) for v in range(g.vertex_count)]
    w = _witness(g, container, embedding, parts)
    return w if verify_hline_witness(w, family_keys) else None


def set_partitions(n: int):
    """All set partitions of range(n) in a deterministic order."""
    if n == 0:
        yield []
        return

    def rec(v, blocks):
        if v == n:
            yield [list(b) for b in blocks]
            return
        for i in range(len(blocks)):
            blocks[i].append(v)
            yield from rec(v + 1, blocks)
            blocks[i].pop()
        blocks.append([v])
        yield from rec(v + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _bounded_search_witness(g: HoffmanGraph, family_keys,
                            fat_budget: int, cap: int = 200_000) -> Optional[HLineWitness]:
    ns = g.slim_count
    if ns == 0 or ns > 8:
        return None
    subsets = []
    for size in range(1, ns + 1):
        subsets.extend(combinations(range(ns), size))
    examined = 0
    for k in range(fat_budget + 1):
        for chosen in combinations_with_replacement(subsets, k):
            edges = list(g.edges)
            base = g.vertex_count
            for i, sub in enumerate(chosen):
                edges += [(v, base + i) for v in sub]
            container = hoffman(ns, g.fat_count + k, edges)
            if validate_hoffman(container) is not None:
                continue
            cadj = {v: fat_neighbors(container, v) for v in range(ns)}
            for blocks in set_partitions(ns):
                examined += 1
                if examined > cap:
                    return None
                parts = []
                for block in blocks:
                    fats = set()
                    for v in block:
                        fats |= cadj[v]
                    parts.append(frozenset(block) | fats)
                d = Decomposition(container, tuple(parts))
                if validate_decomposition(d) is not None:
                    continue
                keys = [canonical_key(pg) for pg in d.part_graphs()]
                if all(key in family_keys for key in keys):
                    w = HLineWitness(g, container, tuple(range(g.vertex_count)),
                                     d, tuple(key.hex() for key in keys))
                    if verify_hline_witness(w, family_keys):
                        return w
    return None
