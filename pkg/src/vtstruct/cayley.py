"""Balls in the directed Cayley graph of a RAAG.

Arcs follow left multiplication: ``w -> a_i w`` for every generator ``a_i``.
A ball is the induced subdigraph on all elements of word length <= radius.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import LabeledDigraph
from .raag import CommutationGraph, Word, exponent_sum, generators, label, normal_form, parse_word

DEFAULT_BALL_CAP = 20_000


class BallTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CayleyBall:
    graph: CommutationGraph
    radius: int
    digraph: LabeledDigraph
    center: str = "e"

    def word(self, v: str) -> Word:
        return parse_word(v)

    def length(self, v: str) -> int:
        return len(parse_word(v))


def cayley_ball(g: CommutationGraph, r: int, cap: int = DEFAULT_BALL_CAP) -> CayleyBall:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    letters = list(generators(g))
    seen = {(): 0}
    frontier = deque([()])
    while frontier:
        w = frontier.popleft()
        if seen[w] == r:
            continue
        for x in letters:
            u = normal_form(g, (x,) + w)
            if u not in seen:
                seen[u] = seen[w] + 1
                if len(seen) > cap:
                    raise BallTooLarge(f"ball of radius {r} exceeds {cap} vertices")
                frontier.append(u)
    words = sorted(seen, key=lambda w: (len(w), [(a, 0 if s > 0 else 1) for a, s in w]))
    arcs = set()
    for w in words:
        for i in range(g.n):
            u = normal_form(g, ((i, 1),) + w)
            if u in seen:
                arcs.add((label(w), label(u)))
    return CayleyBall(g, r, LabeledDigraph(tuple(label(w) for w in words), frozenset(arcs)))


def _sub_ball(ball: CayleyBall, around: Word, r_small: int) -> set:
    g = ball.graph
    inv = tuple((a, -s) for a, s in reversed(around))
    return {v for v in ball.digraph.vertices if len(normal_form(g, parse_word(v) + inv)) <= r_small}


def check_local_transitivity(ball: CayleyBall, r_small: int) -> bool:
    """Right translation by each interior v must carry B(e, r_small) onto B(v, r_small) arc-exactly."""
    if r_small < 0 or 2 * r_small > ball.radius:
        raise ValueError(f"need 0 <= r_small <= radius/2, got r_small={r_small}, radius={ball.radius}")
    g = ball.graph
    d = ball.digraph
    base = [parse_word(v) for v in _sub_ball(ball, (), r_small)]
    for v in d.vertices:
        vw = parse_word(v)
        if len(vw) > ball.radius - r_small:
            continue
        image = {u: label(normal_form(g, u + vw)) for u in base}
        if set(image.values()) != _sub_ball(ball, vw, r_small):
            return False
        for u1 in base:
            for u2 in base:
                if u1 != u2 and d.has_arc(label(u1), label(u2)) != d.has_arc(image[u1], image[u2]):
                    return False
    return True


def grading_violations(ball: CayleyBall) -> list:
    """Arcs that do not raise the exponent sum by exactly one."""
    es = {v: exponent_sum(parse_word(v)) for v in ball.digraph.vertices}
    return sorted((u, v) for u, v in ball.digraph.arcs if es[v] != es[u] + 1)


def is_acyclic(d: LabeledDigraph) -> bool:
    indeg = {v: len(d.inn[v]) for v in d.vertices}
    queue = deque(v for v in d.vertices if indeg[v] == 0)
    done = 0
    while queue:
        v = queue.popleft()
        done += 1
        for w in d.out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done == len(d.vertices)


def check_acyclic(ball: CayleyBall) -> bool:
    """No directed cycle, and every arc is explained by the grading.

    For a genuine ball the grading alone forces acyclicity; both are
    checked so a tampered digraph cannot pass on either count.
    """
    return is_acyclic(ball.digraph) and not grading_violations(ball)


def minimal_distinguishing_radius(g1: CommutationGraph, g2: CommutationGraph, max_radius: int = 3, cap: int = 64):
    """Smallest r whose balls are non-isomorphic, or None up to ``max_radius``."""
    from .core import are_isomorphic

    for r in range(max_radius + 1):
        b1, b2 = cayley_ball(g1, r), cayley_ball(g2, r)
        if are_isomorphic(b1.digraph, b2.digraph, cap=cap) is None:
            return r
    return None
