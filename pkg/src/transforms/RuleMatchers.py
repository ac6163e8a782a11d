#!/usr/bin/env python3
"""
Rule Matchers

Pattern matchers, edge rewrites and closed form W_p differences for the rewrite
catalog. A matcher yields every binding of a rule's pattern variables as a tuple of
vertex labels; the rewrite of a binding is a pair (removed edges, added edges); a
closed form evaluates W_p(before) - W_p(after) from the degrees around the binding.

f(x) below is d(x) - 1.
"""

from itertools import permutations
from typing import Iterator, List, Tuple

from src.trees.ChemicalTree import ChemicalTree
from src.trees.PathStructure import INTERNAL, classify_paths, has_long_internal_path

Site = Tuple[int, ...]
Rewrite = Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]


def _path(t: ChemicalTree, source: int, target: int) -> List[int]:
    return t.path_between(source, target)


def _f(t: ChemicalTree, v: int) -> int:
    return t.degree(v) - 1


def _neighbor_sum(t: ChemicalTree, v: int) -> int:
    return sum(_f(t, x) for x in t.neighbors(v))


def _branching(t: ChemicalTree, v: int) -> bool:
    return t.degree(v) >= 3


def _of_degree(t: ChemicalTree, degree: int) -> List[int]:
    return [v for v in range(t.order) if t.degree(v) == degree]


# adjacent degree-3 vertices

def match_r1(t: ChemicalTree) -> Iterator[Site]:
    for w in _of_degree(t, 3):
        for z in t.neighbors(w):
            if t.degree(z) != 3:
                continue
            w1, w2 = (x for x in t.neighbors(w) if x != z)
            for u in t.branch(w, z):
                if t.degree(u) > 2:
                    continue
                for v in t.neighbors(u):
                    if t.degree(v) == 4:
                        yield (w, z, w1, w2, u, v)


def rewrite_r1(t: ChemicalTree, site: Site) -> Rewrite:
    w, _, w1, w2, u, _ = site
    return [(w, w1), (w, w2)], [(u, w1), (u, w2)]


def delta_r1(t: ChemicalTree, site: Site) -> int:
    _, _, w1, w2, u, _ = site
    return 4 + (1 - t.degree(u)) * (_f(t, w1) + _f(t, w2)) - 2 * _neighbor_sum(t, u)


# degree-3 vertex between two degree-4 vertices

def match_r2(t: ChemicalTree) -> Iterator[Site]:
    for z in _of_degree(t, 3):
        heavy = [x for x in t.neighbors(z) if t.degree(x) == 4]
        if len(heavy) < 2:
            continue
        for x, y in ((a, b) for a in heavy for b in heavy if a < b):
            rest = [s for s in t.neighbors(z) if s not in (x, y)][0]
            excluded = set(t.branch(z, rest)) | {z}
            for u in range(t.order):
                if u in excluded or t.degree(u) > 2:
                    continue
                for v in t.neighbors(u):
                    if v != z and _branching(t, v):
                        yield (z, x, y, u, v)


def rewrite_r2(t: ChemicalTree, site: Site) -> Rewrite:
    z, x, y, u, v = site
    return [(x, z), (z, y), (u, v)], [(x, y), (u, z), (z, v)]


def delta_r2(t: ChemicalTree, site: Site) -> int:
    _, _, _, u, v = site
    du, dv = t.degree(u), t.degree(v)
    return du * dv - 3 * du - 3 * dv + 8


# degree-2 vertex absorbing a neighboring degree-3 vertex

def match_r3a(t: ChemicalTree) -> Iterator[Site]:
    for v in _of_degree(t, 2):
        a, c = t.neighbors(v)
        for u, w in ((a, c), (c, a)):
            if t.degree(w) == 3:
                w1, w2 = (x for x in t.neighbors(w) if x != v)
                yield (u, v, w, w1, w2)


def rewrite_r3a(t: ChemicalTree, site: Site) -> Rewrite:
    _, v, w, w1, w2 = site
    return [(w, w1), (w, w2)], [(v, w1), (v, w2)]


def delta_r3a(t: ChemicalTree, site: Site) -> int:
    u, _, _, w1, w2 = site
    return 2 - 2 * _f(t, u) - _f(t, w1) - _f(t, w2)


# degree-3 vertex relocated onto a degree-2 neighbor of a degree-4 vertex

def match_r3b(t: ChemicalTree) -> Iterator[Site]:
    for v in _of_degree(t, 2):
        a, c = t.neighbors(v)
        for u, w in ((a, c), (c, a)):
            if t.degree(w) != 4:
                continue
            for z in _of_degree(t, 3):
                x = _path(t, z, w)[1]
                z1, z2 = (s for s in t.neighbors(z) if s != x)
                yield (u, v, w, z, z1, z2)


def rewrite_r3b(t: ChemicalTree, site: Site) -> Rewrite:
    _, v, _, z, z1, z2 = site
    return [(z, z1), (z, z2)], [(v, z1), (v, z2)]


def delta_r3b(t: ChemicalTree, site: Site) -> int:
    u, _, w, z, z1, z2 = site
    if z == u:
        return -4 - _f(t, z1) - _f(t, z2)
    x = _path(t, z, w)[1]
    return -6 - 2 * _f(t, u) - _f(t, z1) - _f(t, z2) + 2 * _f(t, x)


# pendent path of length above 1 folded onto an internal edge

def _internal_directions(t: ChemicalTree) -> set:
    """(v, w) pairs where the segment leaving branching v through w is internal."""
    result = set()
    for path in classify_paths(t):
        if path.kind == INTERNAL:
            vertices = path.segment.vertices
            result.add((vertices[0], vertices[1]))
            result.add((vertices[-1], vertices[-2]))
    return result


def match_pendent_fold(t: ChemicalTree) -> Iterator[Site]:
    if not any(_branching(t, v) for v in range(t.order)):
        return
    internal = _internal_directions(t)
    for u0 in _of_degree(t, 1):
        walk = [u0, t.neighbors(u0)[0]]
        while t.degree(walk[-1]) == 2:
            a, c = t.neighbors(walk[-1])
            walk.append(c if a == walk[-2] else a)
        v = walk[-1]
        if not _branching(t, v) or len(walk) < 3:
            continue
        u_prev, u_t = walk[-3], walk[-2]
        for w in t.neighbors(v):
            if w != u_t and t.degree(w) >= 2 and (v, w) in internal:
                yield (u0, u_prev, u_t, v, w)


def rewrite_pendent_fold(t: ChemicalTree, site: Site) -> Rewrite:
    u0, u_prev, u_t, v, w = site
    return [(u_prev, u_t), (v, w)], [(v, u0), (u_prev, w)]


def delta_pendent_fold(t: ChemicalTree, site: Site) -> int:
    _, _, _, v, w = site
    return (t.degree(w) - 1) * (t.degree(v) - 2)


# degree-2 vertex moved from a long internal path onto a branching edge

def match_internal_shift(t: ChemicalTree) -> Iterator[Site]:
    if not any(_branching(t, v) for v in range(t.order)):
        return
    heavy_edges = [(u, v) for u, v in t.edges() if _branching(t, u) and _branching(t, v)]
    if not heavy_edges:
        return
    for path in classify_paths(t):
        if path.kind != INTERNAL or path.length < 3:
            continue
        vertices = path.segment.vertices
        for oriented in (vertices, vertices[::-1]):
            u1, u2, u3 = oriented[:3]
            for u, v in heavy_edges:
                yield (u1, u2, u3, u, v)


def rewrite_internal_shift(t: ChemicalTree, site: Site) -> Rewrite:
    u1, u2, u3, u, v = site
    return [(u1, u2), (u2, u3), (u, v)], [(u1, u3), (u, u2), (u2, v)]


def delta_internal_shift(t: ChemicalTree, site: Site) -> int:
    _, _, _, u, v = site
    du, dv = t.degree(u), t.degree(v)
    return du * dv - 2 * du - 2 * dv + 4


# degree-4 vertex handing one subtree down to a leaf

def match_r6(t: ChemicalTree) -> Iterator[Site]:
    for u in _of_degree(t, 4):
        for u1 in t.neighbors(u):
            if t.degree(u1) < 2:
                continue
            for u2 in t.neighbors(u):
                if u2 == u1:
                    continue
                for w1 in t.branch(u, u2):
                    if t.degree(w1) == 1:
                        yield (u, u1, u2, w1)


def rewrite_r6(t: ChemicalTree, site: Site) -> Rewrite:
    u, u1, _, w1 = site
    return [(u, u1)], [(w1, u1)]


def delta_r6(t: ChemicalTree, site: Site) -> int:
    u, u1, _, w1 = site
    parent = t.neighbors(w1)[0]
    if parent == u:
        return _neighbor_sum(t, u) + _f(t, u1) - 2
    return _neighbor_sum(t, u) + _f(t, u1) - _f(t, parent)


# degree-3 vertex split between two other degree-3 vertices

def match_r7(t: ChemicalTree) -> Iterator[Site]:
    if has_long_internal_path(t):
        return
    cubic = _of_degree(t, 3)
    for u, w in permutations(cubic, 2):
        path = _path(t, u, w)
        inner = [x for x in path[1:-1] if t.degree(x) == 3]
        if len(inner) != 1:
            continue
        w1, w2 = (x for x in t.neighbors(w) if x != path[-2])
        yield (u, inner[0], w, w1, w2)


def rewrite_split(t: ChemicalTree, site: Site) -> Rewrite:
    u, v, w, w1, w2 = site
    return [(w, w1), (w, w2)], [(u, w1), (v, w2)]


def delta_r7(t: ChemicalTree, site: Site) -> int:
    u, v, w, w1, w2 = site
    z0 = _path(t, u, w)[-2]
    return (-_neighbor_sum(t, u) - _neighbor_sum(t, v) + 2 * _f(t, z0) - _f(t, w1) - _f(t, w2)
            - int(t.has_edge(u, v)) + 2 * int(t.has_edge(v, w)))


def _three_cubic_on_a_path(t: ChemicalTree, cubic: List[int]) -> bool:
    cubic_set = set(cubic)
    for a in cubic:
        for b in cubic:
            if a < b and sum(1 for x in _path(t, a, b)[1:-1] if x in cubic_set):
                return True
    return False


def match_r8(t: ChemicalTree) -> Iterator[Site]:
    cubic = _of_degree(t, 3)
    if len(cubic) < 3 or has_long_internal_path(t) or _three_cubic_on_a_path(t, cubic):
        return
    for w in cubic:
        for u in cubic:
            for v in cubic:
                if not (u < v and w not in (u, v)):
                    continue
                step = _path(t, w, u)[1]
                if _path(t, w, v)[1] != step:
                    continue
                w1, w2 = (x for x in t.neighbors(w) if x != step)
                yield (u, v, w, w1, w2)


# degree-3 vertex moved off a branching pair onto an edge below a degree-4 vertex

def match_r9(t: ChemicalTree) -> Iterator[Site]:
    paths = t.shortest_paths()
    for u in _of_degree(t, 3):
        heavy = [x for x in t.neighbors(u) if _branching(t, x)]
        for v, w in permutations(heavy, 2):
            for x in t.branch(u, w):
                if t.degree(x) != 4:
                    continue
                if sum(1 for s in t.neighbors(x) if _branching(t, s)) != 1:
                    continue
                for y in t.neighbors(x):
                    if t.degree(y) <= 2 and len(paths[u][y]) == len(paths[u][x]) + 1:
                        yield (u, v, w, x, y)


def rewrite_r9(t: ChemicalTree, site: Site) -> Rewrite:
    u, v, w, x, y = site
    return [(v, u), (u, w), (x, y)], [(v, w), (x, u), (u, y)]


def delta_r9(t: ChemicalTree, site: Site) -> int:
    _, v, w, _, y = site
    fv, fw = _f(t, v), _f(t, w)
    return 2 * fv + 2 * fw + _f(t, y) - fv * fw - 6


# degree-3 vertex on a longest path traded for two degree-4 vertices

def match_r11(t: ChemicalTree) -> Iterator[Site]:
    if max(t.degrees()) > 3:
        return
    paths = t.shortest_paths()
    diameter = max(len(p) for row in paths.values() for p in row.values())
    if diameter < 7:
        return
    found = set()
    for source, row in paths.items():
        for target, path in row.items():
            if len(path) != diameter:
                continue
            r = len(path)
            v2, v3, v_r2, v_r1 = path[1], path[2], path[r - 3], path[r - 2]
            if t.degree(v2) != 3 or t.degree(v_r1) != 3 or t.degree(v_r2) != 2:
                continue
            for i in range(3, r - 3):
                vi = path[i]
                if t.degree(vi) != 3:
                    continue
                a, c = path[i - 1], path[i + 1]
                w = [x for x in t.neighbors(vi) if x not in (a, c)][0]
                if t.degree(w) != 1 or t.degree(v3) > min(t.degree(a), t.degree(c)):
                    continue
                found.add((v2, v3, a, vi, c, v_r2, v_r1, w))
    yield from sorted(found)


def rewrite_r11(t: ChemicalTree, site: Site) -> Rewrite:
    v2, _, a, vi, c, _, v_r1, w = site
    return [(w, vi), (a, vi), (vi, c)], [(a, c), (vi, v_r1), (v2, w)]


def delta_r11(t: ChemicalTree, site: Site) -> int:
    _, v3, a, _, c, _, _, _ = site
    da, dc = t.degree(a), t.degree(c)
    return 3 * da + 3 * dc - da * dc - t.degree(v3) - 5


# degree-2 vertex moved onto an edge with a larger degree sum

def match_r13(t: ChemicalTree) -> Iterator[Site]:
    heavy_edges = [(a, b) for a, b in t.edges() if _branching(t, a) and _branching(t, b)]
    for z in _of_degree(t, 2):
        x, y = t.neighbors(z)
        total = t.degree(x) + t.degree(y)
        if t.degree(x) < 2 or t.degree(y) < 2 or not 4 < total < 8:
            continue
        for a, b in heavy_edges:
            if t.degree(a) + t.degree(b) > total:
                yield (z, x, y, a, b)


def rewrite_r13(t: ChemicalTree, site: Site) -> Rewrite:
    z, x, y, a, b = site
    return [(x, z), (z, y), (a, b)], [(x, y), (a, z), (z, b)]


def delta_r13(t: ChemicalTree, site: Site) -> int:
    _, x, y, a, b = site
    dx, dy, da, db = t.degree(x), t.degree(y), t.degree(a), t.degree(b)
    return (da * db - 2 * (da + db)) - (dx * dy - 2 * (dx + dy))
