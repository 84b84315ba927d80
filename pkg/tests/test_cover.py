import pytest

from bringcover.cells import build_complex5
from bringcover.cover import (
    build_d,
    cover_to_dessin,
    euler_characteristic,
    is_orientable,
    make_surface,
    orientation_cover,
    surface_from_cells,
)
from bringcover.dessins import acts_freely, automorphism_group, build_i4, isomorphic
from bringcover.perms import cycle_type, identify_closure


def two_triangle_sphere():
    # two triangles glued along all three edges, vertices A=0, B=1, C=2
    face_edges = [(0, 1, 2), (0, 1, 2)]
    face_corners = [(1, 2, 0), (1, 2, 0)]
    return make_surface(face_edges, face_corners, n_vertices=3)


def hemi_cube():
    """The projective plane as 3 squares: antipodal quotient of the cube.

    Vertices 0..3 (antipodal vertex pairs), edges 0..5 = the pairs
    01, 02, 03, 12, 13, 23 in that order.
    """
    face_edges = [(0, 4, 5, 1), (2, 4, 3, 1), (2, 5, 3, 0)]
    face_corners = [(1, 3, 2, 0), (3, 1, 2, 0), (3, 2, 1, 0)]
    return make_surface(face_edges, face_corners, n_vertices=4)


@pytest.fixture(scope="module")
def surface5():
    return surface_from_cells(build_complex5())


@pytest.fixture(scope="module")
def cover5(surface5):
    return orientation_cover(surface5)


@pytest.fixture(scope="module")
def dessin_d(cover5):
    return cover_to_dessin(cover5)


def test_sphere_euler():
    assert euler_characteristic(two_triangle_sphere()) == 2


def test_sphere_orientable():
    assert is_orientable(two_triangle_sphere())


def test_sphere_cover_two_components():
    cov = orientation_cover(two_triangle_sphere())
    assert cov.components == 2
    assert not cov.is_connected
    with pytest.raises(ValueError):
        cov.genus()
    with pytest.raises(ValueError):
        cover_to_dessin(cov)


def test_hemi_cube_is_projective_plane():
    rp2 = hemi_cube()
    assert euler_characteristic(rp2) == 1
    assert not is_orientable(rp2)


def test_hemi_cube_cover_is_cube():
    cov = orientation_cover(hemi_cube())
    assert cov.is_connected
    assert (cov.n_faces, cov.n_edges, cov.n_vertices) == (6, 12, 8)
    assert cov.genus() == 0
    cube = cover_to_dessin(cov)
    p = cube.passport()
    assert p.black == tuple([3] * 8)
    assert p.white == tuple([2] * 12)
    assert p.face == tuple([4] * 6)
    assert cube.genus() == 0
    assert automorphism_group(cube).order == 24


def test_make_surface_rejects_dangling_edge():
    with pytest.raises(ValueError):
        make_surface([(0, 1, 2)], [(1, 2, 0)], n_vertices=3)


def test_base_euler(surface5):
    assert euler_characteristic(surface5) == 15 - 30 + 12 == -3


def test_base_nonorientable(surface5):
    assert not is_orientable(surface5)


def test_cover_summary(cover5):
    assert cover5.summary() == {
        "faces": 24, "edges": 60, "vertices": 30,
        "components": 1, "orientable": True, "genus": 4,
    }


def test_cover_doubles_base(surface5, cover5):
    assert cover5.n_faces == 2 * surface5.n_faces
    assert cover5.n_edges == 2 * surface5.n_edges
    assert cover5.n_vertices == 2 * surface5.n_vertices
    assert cover5.euler_characteristic() == 2 * euler_characteristic(surface5)


def test_cover_vertex_valencies(cover5):
    assert all(len(cyc) == 4 for cyc in cover5.vertex_corners)


def test_dessin_passport(dessin_d):
    p = dessin_d.passport()
    assert dessin_d.n_darts == 120
    assert p.black == tuple([4] * 30)
    assert p.white == tuple([2] * 60)
    assert p.face == tuple([5] * 24)
    assert dessin_d.is_connected
    assert dessin_d.genus() == 4


def test_dessin_faces_are_ten_gons(dessin_d):
    # a face cycle of dart-length 5 alternates 5 black and 5 white corners
    assert cycle_type(dessin_d.sigma_inf) == tuple([5] * 24)


def test_dessin_deterministic(cover5, dessin_d):
    assert cover_to_dessin(cover5) == dessin_d
    assert build_d() == dessin_d


def test_opposite_orientation_is_mirror(cover5, dessin_d):
    assert cover_to_dessin(cover5, orientation=-1) == dessin_d.mirror()


def test_d_regular(dessin_d):
    grp = automorphism_group(dessin_d)
    assert grp.order == 120
    assert acts_freely(dessin_d, grp)
    assert identify_closure(grp) == "S5"


def test_main_isomorphism(dessin_d):
    j = build_i4().union_with_dual().dual().recolor()
    assert j.passport() == dessin_d.passport()
    m = isomorphic(dessin_d, j)
    mirrored = False
    if m is None:
        m = isomorphic(dessin_d.mirror(), j)
        mirrored = True
    assert m is not None
    # with these conventions no global mirror is needed
    assert not mirrored
