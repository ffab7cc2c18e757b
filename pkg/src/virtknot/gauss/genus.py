"""Supporting genus of a Gauss code.

The underlying 4-valent graph is thickened into a ribbon surface using a
fixed rotation at each crossing; boundary circles are traced and capped with
disks.  Half-edge slots at a crossing are named ``ui``/``uo`` (under strand
in/out) and ``oi``/``oo`` (over strand in/out).
"""

from __future__ import annotations

from .code import GaussCode, require_valid

# Cyclic order of the four band ends.  Negative crossings mirror the over strand.
ROTATION = {
    1: ("ui", "oi", "uo", "oo"),
    -1: ("ui", "oo", "uo", "oi"),
}


def _darts(code: GaussCode):
    """Edge pairing (alpha) and rotation successor (sigma) on half-edges.

    A half-edge is ``(crossing, slot)``.  Each segment of a component runs
    from the *out* slot of one passage to the *in* slot of the next.
    """
    alpha = {}
    for comp in code.components:
        n = len(comp)
        for i, p in enumerate(comp):
            q = comp[(i + 1) % n]
            tail = (p.crossing, p.role.lower() + "o")
            head = (q.crossing, q.role.lower() + "i")
            alpha[tail] = head
            alpha[head] = tail
    sigma = {}
    for cid, sign in code.signs().items():
        rot = ROTATION[sign]
        for k, slot in enumerate(rot):
            sigma[(cid, slot)] = (cid, rot[(k + 1) % 4])
    return alpha, sigma


def boundary_circles(code: GaussCode):
    """Boundary circles of the thickened graph, as lists of half-edges."""
    alpha, sigma = _darts(code)
    seen = set()
    faces = []
    for start in sorted(alpha):
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            dart = sigma[alpha[dart]]
        faces.append(face)
    return faces


def _graph_components(code: GaussCode):
    """Crossing sets of the connected pieces of the diagram graph.

    Crossingless components are returned as empty sets, one per circle.
    """
    parent = {cid: cid for cid in code.crossings()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pieces = []
    for comp in code.components:
        if not comp:
            pieces.append(set())
            continue
        first = find(comp[0].crossing)
        for p in comp[1:]:
            root = find(p.crossing)
            if root != first:
                parent[root] = first
    groups = {}
    for cid in parent:
        groups.setdefault(find(cid), set()).add(cid)
    return list(groups.values()) + pieces


def genus_report(code: GaussCode) -> dict:
    """Per-piece Euler characteristic bookkeeping behind :func:`supporting_genus`."""
    require_valid(code)
    faces = boundary_circles(code)
    face_owner = {}
    for k, face in enumerate(faces):
        face_owner[k] = face[0][0]
    pieces = []
    for crossings in _graph_components(code):
        if not crossings:
            # a bare circle thickens to an annulus; two caps give a sphere
            pieces.append({"crossings": 0, "edges": 1, "faces": 2, "genus": 0})
            continue
        v = len(crossings)
        e = 2 * v
        f = sum(1 for k in face_owner if face_owner[k] in crossings)
        chi = v - e + f
        pieces.append({"crossings": v, "edges": e, "faces": f, "genus": (2 - chi) // 2})
    return {
        "genus": sum(p["genus"] for p in pieces),
        "pieces": pieces,
        "disconnected": len(pieces) > 1,
    }


def supporting_genus(code: GaussCode) -> int:
    """Genus of the closed surface carrying the diagram (0 iff realizable)."""
    return genus_report(code)["genus"]


def is_realizable(code: GaussCode) -> bool:
    return supporting_genus(code) == 0
