"""The orbital graph of the all-zero ray: a labelled two-ended line.

Vertices are the rays with finitely many 1s.  The right half-line
(gamma plus) consists of the all-zero ray together with the rays whose
last 1 sits at an odd position; its unlabelled shape does not depend on
the defining sequence, only the edge labels do.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .elements import Ray, ZERO_RAY, _apply_letter
from .omega import OmegaSequence

GENERATOR_COLORS = {"a": "red", "b": "blue", "c": "green", "d": "orange"}


def in_gamma_plus(x: Ray) -> bool:
    """Right half-line membership."""
    return not x.digits or len(x.digits) % 2 == 1


def in_gamma_plus_tilde(x: Ray) -> bool:
    """Right half-line with the all-zero ray removed."""
    return bool(x.digits) and len(x.digits) % 2 == 1


def prepend(bit: str, x: Ray) -> Ray:
    if bit not in ("0", "1"):
        raise ValueError(f"invalid digit {bit!r}")
    return Ray.from_digits(bit + x.digits)


class LabelledEdge(NamedTuple):
    source: Ray
    target: Ray
    label: str


def neighbors(omega: OmegaSequence, x: Ray) -> list[LabelledEdge]:
    """The four labelled edges at x, loops included."""
    return [
        LabelledEdge(x, Ray(_apply_letter(s, omega, x.digits)), s)
        for s in "abcd"
    ]


def ball(omega: OmegaSequence, center: Ray, radius: int) -> set[Ray]:
    """Vertices within the given edge distance of the center."""
    seen = {center}
    frontier = [center]
    for _ in range(radius):
        new = []
        for x in frontier:
            for _, y, _ in neighbors(omega, x):
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


@lru_cache(maxsize=None)
def line_coordinate(omega: OmegaSequence, x: Ray) -> int:
    """Signed distance from the all-zero ray, positive on the gamma plus side."""
    if x == ZERO_RAY:
        return 0
    seen = {ZERO_RAY}
    frontier = [ZERO_RAY]
    dist = 0
    while frontier:
        dist += 1
        new = []
        for v in frontier:
            for _, y, _ in neighbors(omega, v):
                if y not in seen:
                    if y == x:
                        return dist if in_gamma_plus(x) else -dist
                    seen.add(y)
                    new.append(y)
        frontier = new
    raise ValueError(f"unreachable vertex {x!r}")


def _sort_key(omega: OmegaSequence):
    return lambda v: (line_coordinate(omega, v), v.digits)


def ball_edges(omega: OmegaSequence, center: Ray, radius: int) -> list[LabelledEdge]:
    """Edges with both endpoints in the ball, one per unordered pair and label.

    Sorted by endpoint line coordinates and label, so output is diffable.
    """
    vertices = ball(omega, center, radius)
    key = _sort_key(omega)
    edges = set()
    for x in vertices:
        for _, y, label in neighbors(omega, x):
            if y in vertices:
                s, t = sorted((x, y), key=key)
                edges.add(LabelledEdge(s, t, label))
    return sorted(edges, key=lambda e: (key(e.source), key(e.target), e.label))


def edge_records(omega: OmegaSequence, radius: int, center: Ray = ZERO_RAY) -> list[dict]:
    """JSON-ready {source, target, label} records for the ball graph."""
    return [
        {"source": s.text(), "target": t.text(), "label": label}
        for s, t, label in ball_edges(omega, center, radius)
    ]


def to_dot(omega: OmegaSequence, radius: int, center: Ray = ZERO_RAY) -> str:
    """Graphviz source for the ball graph, stable-sorted."""
    vertices = sorted(ball(omega, center, radius), key=_sort_key(omega))
    lines = ["graph schreier {", "  node [shape=circle];"]
    lines += [f'  "{v.text()}";' for v in vertices]
    lines += [
        f'  "{s.text()}" -- "{t.text()}" [label="{label}", color="{GENERATOR_COLORS[label]}"];'
        for s, t, label in ball_edges(omega, center, radius)
    ]
    lines.append("}")
    return "\n".join(lines) + "\n"
