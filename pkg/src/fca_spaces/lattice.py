"""Concept lattices: Hasse covers, levels, and JSON/DOT exports.

Concept ids are positions in the enumeration order, so they are stable for a
given context.  The cover relation is the transitive reduction of extent
containment; levels measure the longest cover path down from the top, which
keeps "one level apart" aligned with cover edges even when the lattice is
not graded.
"""

from __future__ import annotations

import html
import json

from .context import FormalContext
from .enumeration import FormalConcept, attribute_concept, enumerate_concepts, object_concept
from .errors import BadId, MixedContext


def leq(a: FormalConcept, b: FormalConcept) -> bool:
    """Subconcept test: true iff extent(a) is contained in extent(b).

    Both concepts must come from the same context; this free function cannot
    check that, :meth:`ConceptLattice.leq` can.
    """
    return a.extent_set <= b.extent_set


class ConceptLattice:
    """All concepts of one context plus the cover (Hasse) structure.

    Immutable after construction; safe for concurrent reads.  Build through
    :func:`build_lattice`.
    """

    def __init__(
        self,
        context: FormalContext,
        concepts: list[FormalConcept],
        upper: list[tuple[int, ...]],
        lower: list[tuple[int, ...]],
        levels: list[int],
        top_id: int,
        bottom_id: int,
    ):
        self.context = context
        self.concepts = tuple(concepts)
        self._upper = tuple(upper)
        self._lower = tuple(lower)
        self._levels = tuple(levels)
        self.top_id = top_id
        self.bottom_id = bottom_id
        self._extent_masks = tuple(
            sum(1 << g for g in c.extent) for c in self.concepts
        )
        self._id_by_intent = {c.intent: i for i, c in enumerate(self.concepts)}

    def __len__(self) -> int:
        return len(self.concepts)

    def _check_id(self, concept_id: int) -> int:
        if not isinstance(concept_id, int) or isinstance(concept_id, bool):
            raise BadId(concept_id, len(self.concepts))
        if not 0 <= concept_id < len(self.concepts):
            raise BadId(concept_id, len(self.concepts))
        return concept_id

    def concept(self, concept_id: int) -> FormalConcept:
        return self.concepts[self._check_id(concept_id)]

    def index_of(self, concept: FormalConcept) -> int:
        """Id of ``concept`` in this lattice; MixedContext if it is foreign."""
        try:
            found = self._id_by_intent[concept.intent]
        except (KeyError, TypeError):
            raise MixedContext(f"concept {concept!r} does not belong to this lattice") from None
        if self.concepts[found] != concept:
            raise MixedContext(f"concept {concept!r} does not belong to this lattice")
        return found

    def _resolve(self, concept_or_id: FormalConcept | int) -> int:
        if isinstance(concept_or_id, FormalConcept):
            return self.index_of(concept_or_id)
        return self._check_id(concept_or_id)

    def leq(self, a: FormalConcept | int, b: FormalConcept | int) -> bool:
        """Order test on ids or concepts of this lattice."""
        ma = self._extent_masks[self._resolve(a)]
        mb = self._extent_masks[self._resolve(b)]
        return ma & mb == ma

    def upper_covers(self, concept_id: int) -> tuple[int, ...]:
        """Ids of the immediate superconcepts; empty only for the top."""
        return self._upper[self._check_id(concept_id)]

    def lower_covers(self, concept_id: int) -> tuple[int, ...]:
        """Ids of the immediate subconcepts; empty only for the bottom."""
        return self._lower[self._check_id(concept_id)]

    def level_of(self, concept_id: int) -> int:
        """Longest cover-path length from the top down to this concept."""
        return self._levels[self._check_id(concept_id)]

    def cover_edges(self) -> list[tuple[int, int]]:
        """All (lower_id, upper_id) cover pairs, sorted."""
        return sorted(
            (low, up) for low, ups in enumerate(self._upper) for up in ups
        )

    def height(self) -> int:
        """Longest cover path from top to bottom."""
        return self._levels[self.bottom_id]


def build_lattice(ctx: FormalContext) -> ConceptLattice:
    """Order the concepts of ``ctx`` into their Hasse diagram."""
    concepts = enumerate_concepts(ctx)
    n = len(concepts)
    extent_masks = [sum(1 << g for g in c.extent) for c in concepts]

    # Ids ascend as extent size descends, so any strict superconcept of i
    # has a smaller id.  Upper covers of i are the minimal elements among
    # its strict superconcepts; scanning candidates smallest-extent-first
    # lets earlier accepted covers veto everything above them.
    upper: list[tuple[int, ...]] = []
    for i in range(n):
        mi = extent_masks[i]
        ups = [j for j in range(i) if mi & extent_masks[j] == mi and mi != extent_masks[j]]
        ups.sort(key=lambda j: extent_masks[j].bit_count())
        covers: list[int] = []
        for j in ups:
            mj = extent_masks[j]
            if not any(extent_masks[c] & mj == extent_masks[c] for c in covers):
                covers.append(j)
        upper.append(tuple(sorted(covers)))

    lower: list[list[int]] = [[] for _ in range(n)]
    for i, ups in enumerate(upper):
        for j in ups:
            lower[j].append(i)

    levels = [0] * n
    for i in range(n):  # upper covers always have smaller ids: topological
        if upper[i]:
            levels[i] = max(levels[j] for j in upper[i]) + 1

    top_id = 0
    bottom_id = n - 1
    assert extent_masks[top_id] == ctx._all_objects_mask or not ctx.objects
    assert all(extent_masks[bottom_id] & m == extent_masks[bottom_id] for m in extent_masks)

    return ConceptLattice(
        ctx,
        concepts,
        upper,
        [tuple(sorted(ls)) for ls in lower],
        levels,
        top_id,
        bottom_id,
    )


def recompute_covers_pairwise(lat: ConceptLattice) -> list[tuple[int, int]]:
    """Cover edges recomputed straight from the definition.

    For every ordered pair a < b, keep the edge iff no concept sits strictly
    between.  Quadratic-ish and deliberately independent of the construction
    used by :func:`build_lattice`; backs ``fca validate``.
    """
    masks = lat._extent_masks
    n = len(masks)

    def less(x: int, y: int) -> bool:
        return masks[x] != masks[y] and masks[x] & masks[y] == masks[x]

    edges = []
    for a in range(n):
        for b in range(n):
            if less(a, b) and not any(less(a, c) and less(c, b) for c in range(n)):
                edges.append((a, b))
    return sorted(edges)


def _check_same_context(lat: ConceptLattice, ctx: FormalContext) -> None:
    if lat.context != ctx:
        raise MixedContext("lattice was not built from the given context")


def export_json(lat: ConceptLattice, ctx: FormalContext) -> str:
    """Render the lattice as JSON with stable key order and sorted arrays."""
    _check_same_context(lat, ctx)
    payload = {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "concepts": [
            {
                "id": i,
                "extent": [ctx.objects[g] for g in c.extent],
                "intent": [ctx.attributes[m] for m in c.intent],
                "level": lat.level_of(i),
            }
            for i, c in enumerate(lat.concepts)
        ],
        "covers": [[low, up] for low, up in lat.cover_edges()],
        "top": lat.top_id,
        "bottom": lat.bottom_id,
    }
    return json.dumps(payload, indent=2)


def _dot_label(attr_names: list[str], obj_names: list[str]) -> str:
    rows = []
    if attr_names:
        cell = "<BR/>".join(html.escape(a) for a in attr_names)
        rows.append(f'<TR><TD BGCOLOR="gray83">{cell}</TD></TR>')
    if obj_names:
        cell = "<BR/>".join(html.escape(g) for g in obj_names)
        rows.append(f'<TR><TD BGCOLOR="white">{cell}</TD></TR>')
    inner = "".join(rows)
    return f'<<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0">{inner}</TABLE>>'


def export_dot(lat: ConceptLattice, ctx: FormalContext) -> str:
    """Render the lattice in DOT with reduced labeling.

    Each attribute name appears once, on its attribute concept, in a filled
    cell; each object name appears once, on its object concept, in an
    unfilled cell.  Unlabeled concepts render as small circles.  Edges run
    lower -> upper with ``rankdir=BT``.
    """
    _check_same_context(lat, ctx)
    attr_labels: dict[int, list[str]] = {}
    for m, name in enumerate(ctx.attributes):
        cid = lat.index_of(attribute_concept(ctx, m))
        attr_labels.setdefault(cid, []).append(name)
    obj_labels: dict[int, list[str]] = {}
    for g, name in enumerate(ctx.objects):
        cid = lat.index_of(object_concept(ctx, g))
        obj_labels.setdefault(cid, []).append(name)

    lines = [
        "digraph concept_lattice {",
        "  rankdir=BT;",
        '  node [shape=circle, width=0.18, fixedsize=true, label=""];',
    ]
    for i in range(len(lat)):
        attrs = attr_labels.get(i, [])
        objs = obj_labels.get(i, [])
        if attrs or objs:
            label = _dot_label(attrs, objs)
            lines.append(f"  c{i} [shape=plaintext, fixedsize=false, label={label}];")
        else:
            lines.append(f"  c{i};")
    for low, up in lat.cover_edges():
        lines.append(f"  c{low} -> c{up};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "ConceptLattice",
    "build_lattice",
    "leq",
    "recompute_covers_pairwise",
    "export_json",
    "export_dot",
]
