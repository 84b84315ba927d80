"""Dessins d'enfants as pairs of permutations on a common dart set.

A dessin is (sigma0, sigma1): the rotation of darts around black vertices
and around white vertices.  A dart is one edge of the bicolored graph, so
a face of combinatorial valency k (a 2k-gon on the surface) is a length-k
cycle of sigma_inf = (sigma0 . sigma1)^-1.

The transforms below (recolor, subdivide, dual, union with the dual)
mirror the classical Belyi-function substitutions 1-b, 4b(1-b), 1/b and
4b/(b+1)^2 at the permutation level; each one is pinned down by exact
involution identities and by the census of the 4-icosahedron.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import (
    GroupClosure,
    closure,
    compose,
    cycle_string,
    cycle_type,
    cycles,
    identity,
    inverse,
    num_cycles,
    parse_cycle_string,
)


@dataclass(frozen=True)
class Passport:
    black: tuple
    white: tuple
    face: tuple

    def as_dict(self):
        return {"black": list(self.black), "white": list(self.white),
                "face": list(self.face)}


class Dessin:
    """Immutable two-permutation constellation."""

    __slots__ = ("n_darts", "sigma0", "sigma1", "sigma_inf", "_connected")

    def __init__(self, sigma0, sigma1):
        sigma0 = tuple(sigma0)
        sigma1 = tuple(sigma1)
        if len(sigma0) != len(sigma1):
            raise ValueError(
                f"degree mismatch: {len(sigma0)} vs {len(sigma1)}"
            )
        self_set = super().__setattr__
        self_set("n_darts", len(sigma0))
        self_set("sigma0", sigma0)
        self_set("sigma1", sigma1)
        self_set("sigma_inf", inverse(compose(sigma0, sigma1)))
        self_set("_connected", None)
        # product identity holds by construction; assert it anyway
        assert compose(compose(self.sigma0, self.sigma1), self.sigma_inf) \
            == identity(self.n_darts)

    def __setattr__(self, *a):
        raise AttributeError("Dessin is immutable")

    def __eq__(self, other):
        return (isinstance(other, Dessin)
                and self.sigma0 == other.sigma0
                and self.sigma1 == other.sigma1)

    def __hash__(self):
        return hash((self.sigma0, self.sigma1))

    def __repr__(self):
        return (f"Dessin({self.n_darts} darts, "
                f"sigma0={cycle_string(self.sigma0)}, "
                f"sigma1={cycle_string(self.sigma1)})")

    # -- invariants ---------------------------------------------------

    @property
    def is_connected(self) -> bool:
        if self._connected is None:
            super().__setattr__("_connected", self._compute_connected())
        return self._connected

    def _compute_connected(self) -> bool:
        if self.n_darts == 0:
            return False
        seen = [False] * self.n_darts
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for p in (self.sigma0, self.sigma1):
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == self.n_darts

    def passport(self) -> Passport:
        return Passport(
            black=cycle_type(self.sigma0),
            white=cycle_type(self.sigma1),
            face=cycle_type(self.sigma_inf),
        )

    def genus(self) -> int:
        if not self.is_connected:
            raise ValueError("genus is defined for connected dessins only")
        chi = (num_cycles(self.sigma0) + num_cycles(self.sigma1)
               + num_cycles(self.sigma_inf) - self.n_darts)
        assert chi % 2 == 0 and chi <= 2
        return (2 - chi) // 2

    # -- Belyi-substitution transforms ---------------------------------

    def recolor(self) -> "Dessin":
        """Swap vertex colors (Belyi function b -> 1-b)."""
        return Dessin(self.sigma1, self.sigma0)

    def mirror(self) -> "Dessin":
        """Reverse the surface orientation: both rotations invert."""
        return Dessin(inverse(self.sigma0), inverse(self.sigma1))

    def subdivide(self) -> "Dessin":
        """Insert a valency-2 white vertex in the middle of every edge
        (b -> 4b(1-b)); old white vertices turn black.

        Darts double: dart e keeps its black end, dart e+d is the half
        beyond the new midpoint.
        """
        d = self.n_darts
        s0 = [0] * (2 * d)
        s1 = [0] * (2 * d)
        for e in range(d):
            s0[e] = self.sigma0[e]
            s0[d + e] = d + self.sigma1[e]
            s1[e] = d + e
            s1[d + e] = e
        return Dessin(s0, s1)

    def dual(self) -> "Dessin":
        """Face centers become black vertices, white vertices persist
        (b -> 1/b).  Realized on the same darts as
        (sigma_inf, sigma0 . sigma1 . sigma0^-1); an exact involution.
        """
        return Dessin(
            self.sigma_inf,
            compose(compose(self.sigma0, self.sigma1), inverse(self.sigma0)),
        )

    def union_with_dual(self) -> "Dessin":
        """Superimpose the dessin and its dual (b -> 4b/(b+1)^2).

        Darts are E + E^ with e^ = e + d.  Around a white vertex the dual
        edges interleave: e -> e^ -> sigma1(e), doubling every white
        valency.  On the dual copy the black rotation is the face
        successor; the direction (sigma_inf rather than its inverse) is
        the one that keeps a planar dessin planar.
        """
        if not self.is_connected:
            raise ValueError("union with dual needs a connected dessin")
        d = self.n_darts
        s0 = [0] * (2 * d)
        s1 = [0] * (2 * d)
        for e in range(d):
            s0[e] = self.sigma0[e]
            s0[d + e] = d + self.sigma_inf[e]
            s1[e] = d + e
            s1[d + e] = self.sigma1[e]
        return Dessin(s0, s1)

    # -- serialization --------------------------------------------------

    def to_text(self) -> str:
        return (f"darts: {self.n_darts}\n"
                f"sigma0: {cycle_string(self.sigma0)}\n"
                f"sigma1: {cycle_string(self.sigma1)}\n")

    @staticmethod
    def from_text(text: str) -> "Dessin":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if len(lines) != 3:
            raise ValueError("dessin text needs exactly 3 lines")
        fields = {}
        for ln, key in zip(lines, ("darts", "sigma0", "sigma1")):
            prefix = key + ":"
            if not ln.startswith(prefix):
                raise ValueError(f"expected {prefix!r} line, got {ln!r}")
            fields[key] = ln[len(prefix):].strip()
        d = int(fields["darts"])
        return Dessin(parse_cycle_string(fields["sigma0"], d),
                      parse_cycle_string(fields["sigma1"], d))

    def to_dot(self) -> str:
        """Bipartite multigraph in DOT, deterministic byte-for-byte.

        Black node ``b<i>`` is the i-th sigma0 cycle, white ``w<j>`` the
        j-th sigma1 cycle; every dart is an edge whose ``bo``/``wo``
        attributes give its position in each rotation.
        """
        b_cycles = cycles(self.sigma0)
        w_cycles = cycles(self.sigma1)
        b_at = {}
        for i, cyc in enumerate(b_cycles):
            for pos, dart in enumerate(cyc):
                b_at[dart] = (i, pos)
        w_at = {}
        for j, cyc in enumerate(w_cycles):
            for pos, dart in enumerate(cyc):
                w_at[dart] = (j, pos)
        out = ["graph dessin {"]
        for i in range(len(b_cycles)):
            out.append(f'  b{i} [shape=circle, style=filled, fillcolor=black, label=""];')
        for j in range(len(w_cycles)):
            out.append(f'  w{j} [shape=circle, label=""];')
        for dart in range(self.n_darts):
            (i, bp), (j, wp) = b_at[dart], w_at[dart]
            out.append(f"  b{i} -- w{j} [bo={bp}, wo={wp}];")
        out.append("}")
        return "\n".join(out) + "\n"


def new_dessin(sigma0, sigma1) -> Dessin:
    return Dessin(sigma0, sigma1)


@dataclass(frozen=True)
class IsoMap:
    """Dart bijection h with h.sigma = sigma'.h for both rotations."""

    mapping: tuple

    def is_valid(self, src: Dessin, dst: Dessin) -> bool:
        h = self.mapping
        if sorted(h) != list(range(dst.n_darts)) or len(h) != src.n_darts:
            return False
        return all(
            h[src.sigma0[x]] == dst.sigma0[h[x]]
            and h[src.sigma1[x]] == dst.sigma1[h[x]]
            for x in range(src.n_darts)
        )


def _extend_from_anchor(src: Dessin, dst: Dessin, target: int):
    """Deterministic extension of dart 0 -> target along sigma words;
    None when it collides."""
    d = src.n_darts
    h = [-1] * d
    h[0] = target
    stack = [0]
    pairs = (
        (src.sigma0, dst.sigma0),
        (src.sigma1, dst.sigma1),
        (inverse(src.sigma0), inverse(dst.sigma0)),
        (inverse(src.sigma1), inverse(dst.sigma1)),
    )
    while stack:
        x = stack.pop()
        for ps, pd in pairs:
            y = ps[x]
            img = pd[h[x]]
            if h[y] == -1:
                h[y] = img
                stack.append(y)
            elif h[y] != img:
                return None
    if -1 in h or sorted(h) != list(range(d)):
        return None
    return tuple(h)


def isomorphic(a: Dessin, b: Dessin) -> IsoMap | None:
    """Color- and orientation-preserving isomorphism, or None.

    Anchor-and-extend over all candidate images of dart 0; O(d^2), fine
    for the at most 240 darts this suite builds.
    """
    if not (a.is_connected and b.is_connected):
        raise ValueError("isomorphism search needs connected dessins")
    if a.n_darts != b.n_darts:
        return None
    if a.passport() != b.passport():
        return None
    for target in range(b.n_darts):
        h = _extend_from_anchor(a, b, target)
        if h is not None:
            m = IsoMap(h)
            assert m.is_valid(a, b)
            return m
    return None


def automorphism_group(d: Dessin) -> GroupClosure:
    """All dart bijections commuting with both rotations, as a group of
    permutations of the darts."""
    if not d.is_connected:
        raise ValueError("automorphisms need a connected dessin")
    maps = []
    for target in range(d.n_darts):
        h = _extend_from_anchor(d, d, target)
        if h is not None:
            maps.append(h)
    grp = closure(maps)
    assert grp.order == len(maps)
    return grp


def acts_freely(d: Dessin, grp: GroupClosure) -> bool:
    """No nonidentity automorphism fixes a dart."""
    e = identity(d.n_darts)
    return all(g == e or all(g[x] != x for x in range(d.n_darts))
               for g in grp.elements)


# Rotation system of the Platonic icosahedron: vertex -> neighbors in
# counterclockwise order as seen from outside the solid.  Hard-coded so
# the combinatorial core stays float-free; validated by the genus-0 and
# automorphism-order tests rather than re-derived from coordinates.
ICOSAHEDRON_ROTATION = (
    (2, 5, 10, 8, 4),
    (3, 6, 8, 10, 7),
    (0, 4, 9, 11, 5),
    (1, 7, 11, 9, 6),
    (0, 8, 6, 9, 2),
    (0, 2, 11, 7, 10),
    (1, 3, 9, 4, 8),
    (1, 10, 5, 11, 3),
    (0, 10, 1, 6, 4),
    (2, 4, 6, 3, 11),
    (0, 5, 7, 1, 8),
    (2, 9, 3, 7, 5),
)


def _icosahedron_perms():
    edges = sorted({tuple(sorted((v, w)))
                    for v in range(12) for w in ICOSAHEDRON_ROTATION[v]})
    assert len(edges) == 30
    eidx = {e: i for i, e in enumerate(edges)}

    def dart(v, w):
        e = tuple(sorted((v, w)))
        return 2 * eidx[e] + (0 if v == e[0] else 1)

    s0 = [0] * 60
    for v in range(12):
        cyc = ICOSAHEDRON_ROTATION[v]
        for i, w in enumerate(cyc):
            s0[dart(v, w)] = dart(v, cyc[(i + 1) % 5])
    s1 = [0] * 60
    for i in range(30):
        s1[2 * i] = 2 * i + 1
        s1[2 * i + 1] = 2 * i
    return tuple(s0), tuple(s1)


def build_icosahedron() -> Dessin:
    """The icosahedron as a clean dessin: black vertices at the 12 solid
    vertices, white vertices at the 30 edge midpoints, 60 darts."""
    s0, s1 = _icosahedron_perms()
    return Dessin(s0, s1)


def build_i4() -> Dessin:
    """The 4-icosahedron: same graph, every black rotation replaced by
    its square, which re-embeds it on a genus-4 surface."""
    s0, s1 = _icosahedron_perms()
    return Dessin(compose(s0, s0), s1)
