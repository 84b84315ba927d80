from math import factorial

import pytest

from bringcover.cells import (
    PENTAGON_SIDE_ORDER,
    build_complex5,
    canonical_class,
    enumerate_cells,
    polygon,
    refinements,
    twist,
)


def test_polygon_validation():
    with pytest.raises(ValueError):
        polygon(5, (1, 2, 3, 4, 4))
    with pytest.raises(ValueError):
        polygon(5, (1, 2, 3, 4, 5), [(0, 1)])  # adjacent corners
    with pytest.raises(ValueError):
        polygon(5, (1, 2, 3, 4, 5), [(0, 2), (1, 3)])  # crossing


def test_twist_label_order():
    # chord (0,2) keeps the first two labels and reverses the rest
    p = polygon(5, (1, 2, 3, 4, 5), [(0, 2)])
    t = twist(p, (0, 2))
    assert t.labels == (1, 2, 5, 4, 3)
    assert t.diags == ((0, 2),)


def test_twist_is_involution():
    p = polygon(6, (3, 1, 4, 2, 6, 5), [(1, 4), (1, 3)])
    assert twist(twist(p, (1, 4)), (1, 4)) == p
    assert twist(twist(p, (1, 3)), (1, 3)) == p


def test_twist_preserves_diagonal_count_and_class():
    p = polygon(5, (2, 4, 1, 5, 3), [(1, 3)])
    t = twist(p, (1, 3))
    assert len(t.diags) == len(p.diags)
    assert canonical_class(p) == canonical_class(t)


def test_twist_requires_diagonal():
    with pytest.raises(ValueError):
        twist(polygon(5, (1, 2, 3, 4, 5)), (0, 2))


def test_dihedral_images_share_class():
    base = polygon(5, (1, 2, 3, 4, 5))
    cls = canonical_class(base)
    assert cls.orbit_size == 10
    # every rotation of the label cycle lands in the same class
    labels = (1, 2, 3, 4, 5)
    for k in range(5):
        rotated = labels[k:] + labels[:k]
        assert canonical_class(polygon(5, rotated)) == cls
        assert canonical_class(polygon(5, rotated[::-1])) == cls


def test_canonical_representative_stable():
    p = polygon(5, (3, 5, 1, 2, 4), [(2, 4)])
    cls = canonical_class(p)
    assert canonical_class(cls.rep) == cls
    assert canonical_class(twist(p, (2, 4))) == cls


@pytest.mark.parametrize("n,k,count", [
    (5, 0, 12), (5, 1, 30), (5, 2, 15),
    (4, 0, 3), (4, 1, 3),
    (6, 0, 60),
])
def test_cell_counts(n, k, count):
    assert len(enumerate_cells(n, k)) == count


def test_top_cell_formula():
    for n in (4, 5, 6):
        assert len(enumerate_cells(n, 0)) == factorial(n - 1) // 2


def test_enumerate_bounds():
    with pytest.raises(ValueError):
        enumerate_cells(9, 0)
    with pytest.raises(ValueError):
        enumerate_cells(5, 3)


def test_enumerate_practical_bound():
    # the formula (n-1)!/2 keeps holding at the top of the supported range
    assert len(enumerate_cells(7, 0)) == factorial(6) // 2
    assert len(enumerate_cells(8, 0)) == factorial(7) // 2


def test_enumerate_deterministic():
    assert enumerate_cells(5, 1) == enumerate_cells(5, 1)


def test_degenerate_triangle():
    assert len(enumerate_cells(3, 0)) == 1


def test_refinements_of_pentagons():
    for cls in enumerate_cells(5, 0):
        refs = refinements(cls)
        assert len(refs) == 5
        assert all(r.dimension == cls.dimension - 1 for r in refs)


def test_refinements_of_pentagon_edges():
    for cls in enumerate_cells(5, 1):
        refs = refinements(cls)
        assert len(refs) == 2
        assert all(r.dimension == 0 for r in refs)


def test_refinements_n4_against_enumeration():
    # the 3 one-diagonal classes exist in total; each square class
    # refines to exactly 2 of them
    edge_classes = set(enumerate_cells(4, 1))
    assert len(edge_classes) == 3
    for cls in enumerate_cells(4, 0):
        refs = refinements(cls)
        assert len(refs) == 2
        assert set(refs) <= edge_classes


def test_refinements_rejects_points():
    with pytest.raises(ValueError):
        refinements(enumerate_cells(5, 2)[0])


def test_text_form():
    p = polygon(5, (1, 2, 3, 4, 5), [(0, 2)])
    assert p.to_text() == "n=5; labels=(1,2,3,4,5); diags={(0,2)}"
    assert polygon(5, (1, 2, 3, 4, 5)).to_text() == \
        "n=5; labels=(1,2,3,4,5); diags={}"


def test_side_order_is_noncrossing_cycle():
    from bringcover.cells import _chords_cross

    for t in range(5):
        a = PENTAGON_SIDE_ORDER[t]
        b = PENTAGON_SIDE_ORDER[(t + 1) % 5]
        assert not _chords_cross(a, b)
        assert len(set(a) & set(b)) == 1
    for t in range(5):
        a = PENTAGON_SIDE_ORDER[t]
        b = PENTAGON_SIDE_ORDER[(t + 2) % 5]
        assert _chords_cross(a, b)


@pytest.fixture(scope="module")
def cx():
    return build_complex5()


class TestComplex5:
    def test_counts(self, cx):
        assert len(cx.faces) == 12
        assert len(cx.edges) == 30
        assert len(cx.vertices) == 15

    def test_face_edge_regularity(self, cx):
        assert all(len(sides) == 5 for sides in cx.face_sides)
        assert all(len(uses) == 2 for uses in cx.edge_faces.values())
        assert sum(len(s) for s in cx.face_sides) == 60

    def test_edge_vertex_regularity(self, cx):
        assert all(len(set(vs)) == 2 for vs in cx.edge_vertices.values())
        corner_count = {}
        for corners in cx.face_corners:
            for v in corners:
                corner_count[v] = corner_count.get(v, 0) + 1
        assert all(corner_count[v] == 4 for v in range(15))

    def test_edge_cofaces_are_removal_and_twist_partner(self, cx):
        for e, uses in cx.edge_faces.items():
            rep = cx.edges[e].rep
            (chord,) = rep.diags
            smooth = canonical_class(polygon(5, rep.labels))
            twisted = canonical_class(
                polygon(5, twist(rep, chord).labels))
            expected = {smooth, twisted}
            got = {cx.faces[f] for f, _ in uses}
            assert got == expected

    def test_dimensions(self, cx):
        assert all(c.dimension == 2 for c in cx.faces)
        assert all(c.dimension == 1 for c in cx.edges)
        assert all(c.dimension == 0 for c in cx.vertices)
