"""Independent set-based reference implementations for cross-checking.

Everything here is written straight from the definitions using frozensets
and itertools, deliberately sharing no code with the package (which works
on integer bitmasks with different algorithms).  Inputs are plain data:
``rows`` is a list of frozensets of attribute indices, one per object.
"""

from itertools import combinations


def ref_intent(rows, n_attr, objs):
    """Attributes common to all objects in ``objs``; all attributes when empty."""
    result = frozenset(range(n_attr))
    for g in objs:
        result &= rows[g]
    return result


def ref_extent(rows, attrs):
    """Objects whose rows contain every attribute in ``attrs``."""
    attrs = frozenset(attrs)
    return frozenset(g for g, row in enumerate(rows) if attrs <= row)


def ref_closure(rows, n_attr, attrs):
    return ref_intent(rows, n_attr, ref_extent(rows, attrs))


def ref_all_concepts(rows, n_attr):
    """Every closed (extent, intent) pair, via closure of all 2^n_attr subsets."""
    concepts = set()
    universe = tuple(range(n_attr))
    for r in range(n_attr + 1):
        for combo in combinations(universe, r):
            extent = ref_extent(rows, combo)
            intent = ref_intent(rows, n_attr, extent)
            concepts.add((extent, intent))
    return concepts


def ref_sorted_concepts(rows, n_attr):
    """Reference concepts in the package's output order, as sorted tuples."""
    concepts = ref_all_concepts(rows, n_attr)
    ordered = [(tuple(sorted(e)), tuple(sorted(i))) for e, i in concepts]
    ordered.sort(key=lambda c: (-len(c[0]), c[1]))
    return ordered


def ref_hasse_edges(extents):
    """(lower, upper) pairs of the transitive reduction of extent containment.

    ``extents`` is the list of extent sets indexed by concept id.
    """
    n = len(extents)

    def less(a, b):
        return extents[a] != extents[b] and extents[a] <= extents[b]

    edges = set()
    for a in range(n):
        for b in range(n):
            if less(a, b) and not any(less(a, c) and less(c, b) for c in range(n)):
                edges.add((a, b))
    return edges


def ref_levels(n, edges):
    """Longest path length from the top for every concept id.

    ``edges`` are (lower, upper) cover pairs; the top is the unique id with
    no upper cover.
    """
    uppers = {i: set() for i in range(n)}
    for low, up in edges:
        uppers[low].add(up)
    levels = {}

    def height(i):
        if i not in levels:
            ups = uppers[i]
            levels[i] = 0 if not ups else max(height(j) for j in ups) + 1
        return levels[i]

    for i in range(n):
        height(i)
    return levels


def ref_distances(n, edges, start):
    """BFS distances from ``start`` in the undirected cover graph."""
    adjacent = {i: set() for i in range(n)}
    for low, up in edges:
        adjacent[low].add(up)
        adjacent[up].add(low)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for nb in adjacent[c]:
                if nb not in dist:
                    dist[nb] = dist[c] + 1
                    nxt.append(nb)
        frontier = nxt
    return dist
