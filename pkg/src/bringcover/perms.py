"""Exact permutation arithmetic and small-group identification.

A permutation of degree n is a tuple of n distinct ints in [0, n): the
image of each point.  Everything here is immutable and pure; the largest
group this package ever needs is the symmetric group on 5 points acting
on itself (order 120), so closure is plain breadth-first multiplication
with a safety cap and no stabilizer-chain machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, lcm

Perm = tuple

DEFAULT_CLOSURE_CAP = 10_000


def is_perm(p) -> bool:
    return sorted(p) == list(range(len(p)))


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p . q)(x) = p(q(x)); q is applied first."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest point, sorted by it.

    Fixed points are included as length-1 cycles.
    """
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Multiset of cycle lengths, sorted descending, fixed points included."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p: Perm) -> int:
    return len(cycles(p))


def order(p: Perm) -> int:
    return lcm(*(len(c) for c in cycles(p))) if p else 1


def from_cycles(n: int, cycs) -> Perm:
    """Permutation of degree n from an iterable of cycles (tuples of points)."""
    images = list(range(n))
    for cyc in cycs:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    p = tuple(images)
    if not is_perm(p):
        raise ValueError(f"cycles do not define a permutation of degree {n}")
    return p


def cycle_string(p: Perm) -> str:
    """Text form: disjoint cycles like ``(0 1 4)(2 3)``, fixed points omitted,
    ``()`` for the identity."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"


def parse_cycle_string(s: str, degree: int) -> Perm:
    """Inverse of :func:`cycle_string` for a known degree."""
    s = s.strip()
    if s == "()":
        return identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a cycle string: {s!r}")
    cycs = []
    for chunk in s[1:-1].split(")("):
        pts = tuple(int(tok) for tok in chunk.split())
        if len(pts) < 2:
            raise ValueError(f"degenerate cycle in {s!r}")
        cycs.append(pts)
    return from_cycles(degree, cycs)


@dataclass(frozen=True)
class GroupClosure:
    """The group generated by a list of permutations of a common degree.

    ``elements`` is sorted lexicographically, which fixes the canonical
    enumeration used by :func:`regular_representation`.  When the closure
    would exceed ``cap`` the enumeration stops and ``cap_exceeded`` is set;
    ``elements`` is then incomplete and ``order`` meaningless.
    """

    generators: tuple
    elements: tuple
    cap_exceeded: bool = False
    _index: dict = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, g: Perm) -> int:
        if self._index is None:
            object.__setattr__(
                self, "_index", {p: i for i, p in enumerate(self.elements)}
            )
        try:
            return self._index[tuple(g)]
        except KeyError:
            raise ValueError(f"{cycle_string(g)} is not in the group") from None

    def __contains__(self, g) -> bool:
        if self._index is None:
            self.index_of(self.elements[0])
        return tuple(g) in self._index

    def __iter__(self):
        return iter(self.elements)


def closure(gens, cap: int = DEFAULT_CLOSURE_CAP) -> GroupClosure:
    """All products of the generators, by breadth-first multiplication.

    The empty generating set yields the trivial group of degree 0.
    """
    gens = [tuple(g) for g in gens]
    if cap < 1:
        raise ValueError("cap must be >= 1")
    degrees = {len(g) for g in gens}
    if len(degrees) > 1:
        raise ValueError(f"generators of mixed degree: {sorted(degrees)}")
    n = degrees.pop() if degrees else 0
    for g in gens:
        if not is_perm(g):
            raise ValueError(f"not a permutation: {g}")

    elements = {identity(n)}
    frontier = [identity(n)]
    exceeded = False
    while frontier and not exceeded:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        exceeded = True
        frontier = nxt
    return GroupClosure(
        generators=tuple(gens),
        elements=tuple(sorted(elements)),
        cap_exceeded=exceeded,
    )


def regular_representation(g: Perm, group: GroupClosure) -> Perm:
    """Left multiplication x -> g.x as a permutation of the group's
    canonical element order."""
    if group.cap_exceeded:
        raise ValueError("group enumeration incomplete (cap exceeded)")
    g = tuple(g)
    group.index_of(g)  # membership check
    return tuple(group.index_of(compose(g, x)) for x in group.elements)


def _is_a5(group: GroupClosure) -> bool:
    """Presentation witness: x of order 5, y of order 2, (xy)^3 = 1,
    with <x, y> the whole group."""
    if group.order != 60:
        return False
    fives = [g for g in group.elements if order(g) == 5]
    twos = [g for g in group.elements if order(g) == 2]
    n = len(group.elements[0])
    for x in fives:
        for y in twos:
            xy = compose(x, y)
            if compose(xy, compose(xy, xy)) != identity(n):
                continue
            if closure([x, y], cap=61).order == 60:
                return True
    return False


def _center_is_trivial(group: GroupClosure) -> bool:
    n = len(group.elements[0])
    e = identity(n)
    for g in group.elements:
        if g == e:
            continue
        if all(compose(g, h) == compose(h, g) for h in group.generators):
            return False
    return True


def _derived_subgroup(group: GroupClosure) -> GroupClosure:
    comms = set()
    for g in group.elements:
        gi = inverse(g)
        for h in group.elements:
            comms.add(compose(compose(gi, inverse(h)), compose(g, h)))
    return closure(sorted(comms), cap=group.order)


def identify_group(gens, cap: int = DEFAULT_CLOSURE_CAP) -> str:
    """Classify the generated group as ``"A5"``, ``"S5"`` or ``"Other(n)"``.

    A5: order 60 plus a presentation witness.  S5: order 120, trivial
    center, derived subgroup identified as A5.  Sound for the only groups
    this suite asserts; everything else reports its order.
    """
    grp = closure(gens, cap=cap)
    if grp.cap_exceeded:
        raise ValueError("closure cap exceeded; cannot classify")
    return identify_closure(grp)


def identify_closure(grp: GroupClosure) -> str:
    if grp.cap_exceeded:
        raise ValueError("closure cap exceeded; cannot classify")
    if grp.order == 60 and _is_a5(grp):
        return "A5"
    if grp.order == 120 and _center_is_trivial(grp):
        derived = _derived_subgroup(grp)
        if _is_a5(derived):
            return "S5"
    return f"Other({grp.order})"


def random_perm(n: int, rng) -> Perm:
    """Uniform permutation from a ``random.Random`` instance."""
    images = list(range(n))
    rng.shuffle(images)
    return tuple(images)


def symmetric_group(n: int) -> GroupClosure:
    """S_n in canonical element order (used for sheet bookkeeping, n <= 5)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return closure([identity(1)])
    gens = [from_cycles(n, [(0, 1)]), from_cycles(n, [tuple(range(n))])]
    grp = closure(gens)
    assert grp.order == factorial(n)
    return grp
