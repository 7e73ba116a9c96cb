"""Binary formal contexts and their derivation operators.

A context is a cross table: objects in rows, attributes in columns, a 0/1
incidence relation between them.  Rows and columns keep their input order;
that order is part of the context's identity and anchors every deterministic
output further down the pipeline (concept ids, exports, golden files).

Incidence is mirrored internally as per-row and per-column integer bitmasks,
which makes the derivation operators cheap set intersections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    BadIndex,
    ContextError,
    DuplicateName,
    InvalidName,
    MalformedCell,
    RaggedRow,
)

DOMAIN_TAGS = ("Fingers", "Wrist", "Forces", "Grasp")


@dataclass(frozen=True)
class AttributeMeta:
    """Quality-dimension tag attached to an attribute."""

    domain_tag: str

    def __post_init__(self):
        if self.domain_tag not in DOMAIN_TAGS:
            raise ValueError(
                f"unknown domain tag {self.domain_tag!r}; expected one of {DOMAIN_TAGS}"
            )


def _check_name(kind: str, name: str) -> None:
    if not isinstance(name, str) or not name:
        raise InvalidName(kind, name, "name must be a non-empty string")
    if name != name.strip():
        raise InvalidName(kind, name, "surrounding whitespace is trimmed by the CSV format")
    if "," in name:
        raise InvalidName(kind, name, "commas are reserved as the CSV cell separator")
    if "\n" in name or "\r" in name:
        raise InvalidName(kind, name, "line breaks are not allowed in names")


@dataclass(frozen=True)
class FormalContext:
    """Immutable object x attribute cross table.

    ``incidence`` holds ``(object_index, attribute_index)`` pairs.
    ``attribute_meta`` is optional annotation (attribute index -> AttributeMeta);
    it is carried along but excluded from equality, which is defined on the
    ordered object/attribute lists plus the incidence relation.

    Instances are safe to share across threads once constructed.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: frozenset[tuple[int, int]]
    attribute_meta: Mapping[int, AttributeMeta] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "incidence", frozenset(map(tuple, self.incidence)))

        seen: set[str] = set()
        for name in self.objects:
            _check_name("object", name)
            if name in seen:
                raise DuplicateName("object", name)
            seen.add(name)
        seen.clear()
        for name in self.attributes:
            _check_name("attribute", name)
            if name in seen:
                raise DuplicateName("attribute", name)
            seen.add(name)

        n_obj, n_attr = len(self.objects), len(self.attributes)
        for g, m in self.incidence:
            if not 0 <= g < n_obj:
                raise BadIndex("object", g, n_obj)
            if not 0 <= m < n_attr:
                raise BadIndex("attribute", m, n_attr)
        if self.attribute_meta:
            for m in self.attribute_meta:
                if not 0 <= m < n_attr:
                    raise BadIndex("attribute", m, n_attr)

    @cached_property
    def _row_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.objects)
        for g, m in self.incidence:
            masks[g] |= 1 << m
        return tuple(masks)

    @cached_property
    def _col_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.attributes)
        for g, m in self.incidence:
            masks[m] |= 1 << g
        return tuple(masks)

    @property
    def _all_objects_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def _all_attributes_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def object_index(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise KeyError(name) from None

    def attribute_index(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise KeyError(name) from None

    def object_names(self, indices: Iterable[int]) -> tuple[str, ...]:
        """Names for the given object indices, in context (index) order."""
        return tuple(self.objects[g] for g in sorted(set(indices)))

    def attribute_names(self, indices: Iterable[int]) -> tuple[str, ...]:
        """Names for the given attribute indices, in context (index) order."""
        return tuple(self.attributes[m] for m in sorted(set(indices)))

    def domain_tag(self, m: int) -> str | None:
        if not 0 <= m < len(self.attributes):
            raise BadIndex("attribute", m, len(self.attributes))
        if self.attribute_meta and m in self.attribute_meta:
            return self.attribute_meta[m].domain_tag
        return None


def _object_set_to_mask(ctx: FormalContext, objs: Iterable[int]) -> int:
    n = len(ctx.objects)
    mask = 0
    for g in objs:
        if not 0 <= g < n:
            raise BadIndex("object", g, n)
        mask |= 1 << g
    return mask


def _attribute_set_to_mask(ctx: FormalContext, attrs: Iterable[int]) -> int:
    n = len(ctx.attributes)
    mask = 0
    for m in attrs:
        if not 0 <= m < n:
            raise BadIndex("attribute", m, n)
        mask |= 1 << m
    return mask


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _intent_mask(ctx: FormalContext, object_mask: int) -> int:
    """Attributes common to every object in the mask (all attributes for the empty mask)."""
    result = ctx._all_attributes_mask
    rows = ctx._row_masks
    while object_mask:
        low = object_mask & -object_mask
        result &= rows[low.bit_length() - 1]
        if not result:
            break
        object_mask ^= low
    return result


def _extent_mask(ctx: FormalContext, attribute_mask: int) -> int:
    """Objects carrying every attribute in the mask (all objects for the empty mask)."""
    result = ctx._all_objects_mask
    cols = ctx._col_masks
    while attribute_mask:
        low = attribute_mask & -attribute_mask
        result &= cols[low.bit_length() - 1]
        if not result:
            break
        attribute_mask ^= low
    return result


def _closure_mask(ctx: FormalContext, attribute_mask: int) -> int:
    return _intent_mask(ctx, _extent_mask(ctx, attribute_mask))


def derive_intent(ctx: FormalContext, objs: Iterable[int]) -> frozenset[int]:
    """Attribute indices shared by all given objects.

    The empty object set derives to the full attribute set.  Antitone:
    more objects can only shrink the result.
    """
    return _mask_to_set(_intent_mask(ctx, _object_set_to_mask(ctx, objs)))


def derive_extent(ctx: FormalContext, attrs: Iterable[int]) -> frozenset[int]:
    """Object indices carrying all given attributes.

    The empty attribute set derives to the full object set.  Antitone.
    """
    return _mask_to_set(_extent_mask(ctx, _attribute_set_to_mask(ctx, attrs)))


def closure_attributes(ctx: FormalContext, attrs: Iterable[int]) -> frozenset[int]:
    """Double derivation of an attribute set: the smallest intent containing it.

    A closure operator: extensive, monotone, and idempotent.
    """
    return _mask_to_set(_closure_mask(ctx, _attribute_set_to_mask(ctx, attrs)))


def parse_context(text: str) -> FormalContext:
    """Parse the context CSV format.

    Line 1 is ``,attr1,attr2,...`` (empty corner cell); each further line is
    ``objName,c1,c2,...`` with cells in {0, 1}.  Whitespace around cells is
    trimmed; every other deviation raises, it is never repaired.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline
    if not lines:
        raise MalformedCell(0, 0, "empty input: missing attribute header")

    header = [cell.strip() for cell in lines[0].split(",")]
    if header[0] != "":
        raise MalformedCell(0, 0, f"corner cell must be empty, got {header[0]!r}")
    attributes = header[1:]
    for j, name in enumerate(attributes, start=1):
        if name == "":
            raise MalformedCell(0, j, "empty attribute name (only the corner cell may be empty)")
    seen: set[str] = set()
    for name in attributes:
        if name in seen:
            raise DuplicateName("attribute", name)
        seen.add(name)

    n_attr = len(attributes)
    objects: list[str] = []
    seen.clear()
    incidence: set[tuple[int, int]] = set()
    for i, line in enumerate(lines[1:], start=1):
        cells = line.split(",")
        if len(cells) != n_attr + 1:
            raise RaggedRow(i, n_attr + 1, len(cells))
        name = cells[0].strip()
        if name == "":
            raise MalformedCell(i, 0, "empty object name")
        if name in seen:
            raise DuplicateName("object", name)
        seen.add(name)
        g = len(objects)
        objects.append(name)
        for j, raw in enumerate(cells[1:], start=1):
            value = raw.strip()
            if value == "1":
                incidence.add((g, j - 1))
            elif value != "0":
                raise MalformedCell(i, j, f"cell must be '0' or '1', got {value!r}")

    return FormalContext(tuple(objects), tuple(attributes), frozenset(incidence))


def serialize_context(ctx: FormalContext) -> str:
    """Render a context back to the CSV format.

    Inverse of :func:`parse_context`: ``parse_context(serialize_context(ctx))``
    equals ``ctx`` (attribute metadata has no CSV representation and is dropped).
    Output uses LF line endings and a trailing newline.
    """
    lines = [",".join(("",) + ctx.attributes)]
    rows = ctx._row_masks
    for g, name in enumerate(ctx.objects):
        mask = rows[g]
        cells = ["1" if mask >> m & 1 else "0" for m in range(len(ctx.attributes))]
        lines.append(",".join([name] + cells))
    return "\n".join(lines) + "\n"


__all__ = [
    "DOMAIN_TAGS",
    "AttributeMeta",
    "FormalContext",
    "ContextError",
    "parse_context",
    "serialize_context",
    "derive_intent",
    "derive_extent",
    "closure_attributes",
]
