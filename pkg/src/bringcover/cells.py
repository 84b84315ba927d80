"""Cells of the compactified moduli space of n marked real points on a line.

A cell is an equivalence class of a labeled n-gon carrying pairwise
non-crossing diagonals: sides are labeled 1..n, a diagonal joins two
non-adjacent corners, and two polygons mark the same cell when related by
the dihedral group together with twists (cut along a diagonal, flip one
part, reglue).  A polygon with k diagonals marks a cell of dimension
n - 3 - k.

Positions are 0-based: side i runs between corners i and i+1 (mod n) and
carries ``labels[i]``; a diagonal is a corner pair (a, b) with a < b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _chords_cross(c1, c2) -> bool:
    a, b = c1
    c, d = c2
    return (a < c < b < d) or (c < a < d < b)


def _chord_admissible(n: int, chord) -> bool:
    a, b = chord
    if not (0 <= a < b < n):
        return False
    spread = b - a
    return 2 <= spread <= n - 2


@dataclass(frozen=True, order=True)
class LabeledPolygon:
    n: int
    labels: tuple
    diags: tuple  # sorted tuple of (a, b) corner pairs, a < b

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("polygon needs at least 3 sides")
        if sorted(self.labels) != list(range(1, self.n + 1)):
            raise ValueError(f"labels must be a permutation of 1..{self.n}")
        if tuple(sorted(self.diags)) != self.diags:
            raise ValueError("diags must be stored sorted")
        for c in self.diags:
            if not _chord_admissible(self.n, c):
                raise ValueError(f"inadmissible chord {c} in an {self.n}-gon")
        for i, c1 in enumerate(self.diags):
            for c2 in self.diags[i + 1:]:
                if _chords_cross(c1, c2):
                    raise ValueError(f"crossing chords {c1} and {c2}")

    def to_text(self) -> str:
        labels = ",".join(map(str, self.labels))
        diags = ", ".join(f"({a},{b})" for a, b in self.diags)
        return f"n={self.n}; labels=({labels}); diags={{{diags}}}"


def polygon(n: int, labels, diags=()) -> LabeledPolygon:
    return LabeledPolygon(n, tuple(labels),
                          tuple(sorted(tuple(sorted(c)) for c in diags)))


def twist(p: LabeledPolygon, diag) -> LabeledPolygon:
    """Cut along ``diag``, flip one part, reglue: with the chord rotated
    to (0, k), the sides k..n-1 read backwards afterwards, so label order
    (z1,...,zk, z_{k+1},...,zn) becomes (z1,...,zk, zn,...,z_{k+1}).

    Chords riding inside the flipped part are reflected along; the flip
    is an exact involution on the polygon data.
    """
    diag = tuple(sorted(diag))
    if diag not in p.diags:
        raise ValueError(f"{diag} is not a diagonal of the polygon")
    a, b = diag
    n = p.n
    q = _rotate(p, a)  # chord now (0, k)
    k = b - a

    def flip_corner(c):
        if c == 0:
            return k
        if c == k:
            return 0
        return k + n - c  # interior of the flipped part: k < c < n

    labels = list(q.labels)
    labels[k:] = labels[k:][::-1]
    new_diags = []
    for c, d in q.diags:
        inside_flipped = (c == 0 or c >= k) and (d == 0 or d >= k)
        if inside_flipped:
            c, d = flip_corner(c), flip_corner(d)
        new_diags.append((c, d))
    return _rotate(polygon(n, labels, new_diags), (n - a) % n)


def _rotate(p: LabeledPolygon, k: int) -> LabeledPolygon:
    n = p.n
    labels = tuple(p.labels[(i + k) % n] for i in range(n))
    diags = [((a - k) % n, (b - k) % n) for a, b in p.diags]
    return polygon(n, labels, diags)


def _reflect(p: LabeledPolygon) -> LabeledPolygon:
    """Reflection fixing corner 0: corner c -> -c, so side i -> n-1-i."""
    n = p.n
    labels = tuple(reversed(p.labels))
    diags = [((-a) % n, (-b) % n) for a, b in p.diags]
    return polygon(n, labels, diags)


def _key(p: LabeledPolygon):
    return (p.labels, p.diags)


def orbit(p: LabeledPolygon) -> set:
    """Closure of {p} under twists and the dihedral group, as a set of
    (labels, diags) keys."""
    seen = {_key(p)}
    frontier = [p]
    while frontier:
        q = frontier.pop()
        images = []
        for k in range(q.n):
            r = _rotate(q, k)
            images.append(r)
            images.append(_reflect(r))
        images.extend(twist(q, d) for d in q.diags)
        for r in images:
            key = _key(r)
            if key not in seen:
                seen.add(key)
                frontier.append(r)
    return seen


@dataclass(frozen=True, order=True)
class CellClass:
    """A cell, held by its canonical representative: the lexicographic
    minimum of (labels, diags) over the whole orbit."""

    rep: LabeledPolygon
    orbit_size: int

    @property
    def dimension(self) -> int:
        return self.rep.n - 3 - len(self.rep.diags)

    def to_text(self) -> str:
        return self.rep.to_text()


def canonical_class(p: LabeledPolygon) -> CellClass:
    orb = orbit(p)
    labels, diags = min(orb)
    return CellClass(rep=LabeledPolygon(p.n, labels, diags),
                     orbit_size=len(orb))


@lru_cache(maxsize=None)
def _admissible_chord_sets(n: int, k: int) -> tuple:
    """All size-k sets of pairwise non-crossing admissible chords."""
    chords = [(a, b) for a in range(n) for b in range(a + 1, n)
              if _chord_admissible(n, (a, b))]
    out = []

    def backtrack(start, acc):
        if len(acc) == k:
            out.append(tuple(acc))
            return
        for i in range(start, len(chords)):
            c = chords[i]
            if all(not _chords_cross(c, d) for d in acc):
                acc.append(c)
                backtrack(i + 1, acc)
                acc.pop()

    backtrack(0, [])
    return tuple(out)


def _all_labelings(n: int):
    """Labelings with label 1 fixed on side 0 (a rotation section: every
    class has such a representative)."""
    from itertools import permutations

    for rest in permutations(range(2, n + 1)):
        yield (1,) + rest


def enumerate_cells(n: int, k: int) -> list:
    """All distinct cell classes of the n-point space with k diagonals,
    sorted by canonical representative."""
    if not 3 <= n <= 8:
        raise ValueError("n out of the supported range 3..8")
    if not 0 <= k <= n - 3:
        raise ValueError(f"diagonal count {k} out of range 0..{n - 3}")
    classes = {}
    visited = set()
    for labels in _all_labelings(n):
        for diags in _admissible_chord_sets(n, k):
            p = LabeledPolygon(n, labels, diags)
            if _key(p) in visited:
                continue
            orb = orbit(p)
            visited.update(orb)
            rep_labels, rep_diags = min(orb)
            rep = LabeledPolygon(n, rep_labels, rep_diags)
            classes[_key(rep)] = CellClass(rep=rep, orbit_size=len(orb))
    return [classes[key] for key in sorted(classes)]


def refinements(c: CellClass) -> list:
    """Classes obtained by adding one admissible diagonal, deduplicated."""
    if c.dimension < 1:
        raise ValueError("cannot refine a 0-dimensional cell")
    p = c.rep
    found = {}
    for chord in _admissible_chord_sets(p.n, 1):
        (new,) = chord
        if new in p.diags:
            continue
        if any(_chords_cross(new, d) for d in p.diags):
            continue
        q = polygon(p.n, p.labels, p.diags + (new,))
        cls = canonical_class(q)
        found[_key(cls.rep)] = cls
    return [found[key] for key in sorted(found)]


# The boundary 5-cycle of a pentagon cell: the five diagonals listed so
# that consecutive ones share a corner (and so do not cross).  This is
# the cyclic side order of every 2-cell of the n=5 complex.
PENTAGON_SIDE_ORDER = ((0, 2), (2, 4), (1, 4), (1, 3), (0, 3))


@dataclass(frozen=True)
class CellComplexData:
    """Incidence structure of the n=5 cell complex.

    ``face_sides[f][t]`` is the edge class id of side t of face f;
    ``face_corners[f][t]`` the vertex class id of the corner between
    sides t and t+1 (mod 5).  Side t therefore runs from corner t-1 to
    corner t in the face's reference direction.
    """

    faces: tuple        # CellClass, dimension 2
    edges: tuple        # CellClass, dimension 1
    vertices: tuple     # CellClass, dimension 0
    face_sides: tuple   # per face: 5 edge ids
    face_corners: tuple  # per face: 5 vertex ids
    edge_faces: dict    # edge id -> ((f, t), (f, t))
    edge_vertices: dict  # edge id -> (vertex id, vertex id), distinct


def build_complex5() -> CellComplexData:
    faces = enumerate_cells(5, 0)
    edges = enumerate_cells(5, 1)
    vertices = enumerate_cells(5, 2)
    assert (len(faces), len(edges), len(vertices)) == (12, 30, 15)
    edge_id = {_key(c.rep): i for i, c in enumerate(edges)}
    vert_id = {_key(c.rep): i for i, c in enumerate(vertices)}

    face_sides = []
    face_corners = []
    edge_faces = {}
    for f, cls in enumerate(faces):
        p = cls.rep
        sides = []
        corners = []
        for t in range(5):
            d_here = PENTAGON_SIDE_ORDER[t]
            d_next = PENTAGON_SIDE_ORDER[(t + 1) % 5]
            e = edge_id[_key(canonical_class(
                polygon(5, p.labels, (d_here,))).rep)]
            v = vert_id[_key(canonical_class(
                polygon(5, p.labels, (d_here, d_next))).rep)]
            sides.append(e)
            corners.append(v)
            edge_faces.setdefault(e, []).append((f, t))
        assert len(set(sides)) == 5
        face_sides.append(tuple(sides))
        face_corners.append(tuple(corners))

    edge_vertices = {}
    for e, uses in edge_faces.items():
        assert len(uses) == 2, f"edge {e} has {len(uses)} cofaces"
        endpoint_sets = []
        for f, t in uses:
            ends = (face_corners[f][(t - 1) % 5], face_corners[f][t])
            assert ends[0] != ends[1]
            endpoint_sets.append(frozenset(ends))
        assert endpoint_sets[0] == endpoint_sets[1]
        edge_vertices[e] = tuple(sorted(endpoint_sets[0]))

    corner_count = {}
    for corners in face_corners:
        for v in corners:
            corner_count[v] = corner_count.get(v, 0) + 1
    assert all(corner_count[v] == 4 for v in range(15))

    return CellComplexData(
        faces=tuple(faces),
        edges=tuple(edges),
        vertices=tuple(vertices),
        face_sides=tuple(face_sides),
        face_corners=tuple(face_corners),
        edge_faces={e: tuple(u) for e, u in edge_faces.items()},
        edge_vertices=edge_vertices,
    )
