"""Bipartite matching by augmenting paths, with optional capacities on the right side.

Left vertices are processed in the given order and each tries its right
neighbours in the given order, so results are deterministic.
"""

from __future__ import annotations


def saturating_matching(left, adj, capacity=None) -> dict | None:
    """Assign every left vertex a right neighbour, respecting capacities.

    ``adj[u]`` lists the admissible right vertices of ``u`` in preference
    order; ``capacity[v]`` defaults to 1.  Returns ``{u: v}`` or None when no
    assignment saturating the left side exists.
    """
    cap = capacity or {}
    holders: dict = {}
    match: dict = {}

    def augment(u, visited) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            held = holders.setdefault(v, [])
            if len(held) < cap.get(v, 1):
                held.append(u)
                match[u] = v
                return True
            for w in list(held):
                if augment(w, visited):
                    held.remove(w)
                    held.append(u)
                    match[u] = v
                    return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: match[u] for u in left}
