"""Finite groups as multiplication tables.

Elements are indices 0..order-1 with the identity pinned at index 0; tables
handed to the constructor are relabeled to honour that convention and the
relabeling is kept.  Everything downstream (cochains, actions, extensions)
builds on these tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class GroupError(Exception):
    """Base class for malformed group data."""


class NoIdentityError(GroupError):
    pass


class NotAssociativeError(GroupError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"associativity fails at {triple}")


class NoInverseError(GroupError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no inverse")


class NotASubgroupError(GroupError):
    pass


class GroupTooLargeError(GroupError):
    pass


class FiniteGroup:
    """Immutable multiplication-table group with identity at index 0."""

    __slots__ = ("order", "table", "inverses", "label", "relabeling", "_hash")

    def __init__(self, table, label: str | None = None, relabeling=None):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.label = label
        self.relabeling = tuple(relabeling) if relabeling is not None else None
        self._validate()
        self.inverses = self._compute_inverses()
        self._hash = hash(self.table)

    def _validate(self) -> None:
        n = self.order
        if n == 0:
            raise NoIdentityError("empty table")
        for row in self.table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise GroupError("table is not a square array of indices in range")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise NoIdentityError("index 0 is not a two-sided identity")
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for c in range(n):
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise NotAssociativeError((a, b, c))

    def _compute_inverses(self):
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0 and self.table[b][a] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise NoInverseError(a)
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def elements(self) -> range:
        return range(self.order)

    def prod(self, elems) -> int:
        out = 0
        for e in elems:
            out = self.mul(out, e)
        return out

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        out = 0
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.order)
            for b in range(a)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"FiniteGroup({name}, order={self.order})"


def group_from_table(table, label: str | None = None) -> FiniteGroup:
    """Validate a raw multiplication table, relabeling the identity to 0.

    Raises NoIdentityError / NotAssociativeError / NoInverseError naming the
    witnessing element or triple.
    """
    rows = [list(row) for row in table]
    n = len(rows)
    if n == 0:
        raise NoIdentityError("empty table")
    for row in rows:
        if len(row) != n or any(not isinstance(v, int) or not (0 <= v < n) for v in row):
            raise GroupError("table is not a square array of indices in range")
    ident = None
    for e in range(n):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
            ident = e
            break
    if ident is None:
        raise NoIdentityError("no two-sided identity element")
    relabeling = None
    if ident != 0:
        # swap labels 0 <-> ident; perm[new] = old, and a transposition is
        # its own inverse so it also relabels old -> new
        perm = list(range(n))
        perm[0], perm[ident] = perm[ident], perm[0]
        rows = [
            [perm[rows[perm[a]][perm[b]]] for b in range(n)]
            for a in range(n)
        ]
        relabeling = perm
    return FiniteGroup(rows, label=label, relabeling=relabeling)


def cyclic_group(n: int, label: str | None = None) -> FiniteGroup:
    return FiniteGroup(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        label=label or f"Z{n}",
    )


def direct_product(g: FiniteGroup, h: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """Product group with index (a, b) -> a * |h| + b."""
    n, m = g.order, h.order
    table = [
        [
            g.mul(a1, a2) * m + h.mul(b1, b2)
            for a2 in range(n)
            for b2 in range(m)
        ]
        for a1 in range(n)
        for b1 in range(m)
    ]
    lab = label or f"{g.label or 'G'}x{h.label or 'H'}"
    return FiniteGroup(table, label=lab)


def klein_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2), label="K4")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n from explicit permutation composition, identity first."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # compose left-to-right as functions: (p*q)(x) = p(q(x))
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        for p in perms
    ]
    return FiniteGroup(table, label=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """D_n of order 2n: elements r^a s^e encoded as a + n*e."""
    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        if e == 0:
            return (a + b) % n + n * f
        return (a - b) % n + n * (1 - f)

    return FiniteGroup(
        [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)],
        label=f"D{n}",
    )


def quaternion_group() -> FiniteGroup:
    """Q8 with elements 1,-1,i,-i,j,-j,k,-k encoded 0..7."""
    # encode units as (sign, axis): 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
    def mul(x, y):
        sx, ax = x % 2, x // 2
        sy, ay = y % 2, y // 2
        if ax == 0:
            return 2 * ay + (sx + sy) % 2
        if ay == 0:
            return 2 * ax + (sx + sy) % 2
        if ax == ay:
            return (sx + sy + 1) % 2
        # i*j=k, j*k=i, k*i=j and anticommute
        table = {(1, 2): (3, 0), (2, 3): (1, 0), (3, 1): (2, 0),
                 (2, 1): (3, 1), (3, 2): (1, 1), (1, 3): (2, 1)}
        az, sz = table[(ax, ay)]
        return 2 * az + (sx + sy + sz) % 2

    return FiniteGroup([[mul(x, y) for y in range(8)] for x in range(8)], label="Q8")


def centre(group: FiniteGroup):
    """Sorted tuple of elements commuting with everything."""
    return tuple(
        z
        for z in group.elements()
        if all(group.mul(z, a) == group.mul(a, z) for a in group.elements())
    )


def is_subgroup(group: FiniteGroup, subset) -> bool:
    elems = set(subset)
    if 0 not in elems:
        return False
    return all(
        group.mul(a, b) in elems and group.inv(a) in elems
        for a in elems
        for b in elems
    )


def subgroup_generated(group: FiniteGroup, gens):
    """Sorted tuple of the subgroup generated by gens."""
    seen = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
            y = group.mul(x, group.inv(g))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return tuple(sorted(seen))


def minimal_generating_sequence(group: FiniteGroup):
    """Lexicographically first generating sequence of minimal length."""
    if group.order == 1:
        return ()
    for size in range(1, group.order + 1):
        for combo in itertools.combinations(range(1, group.order), size):
            if len(subgroup_generated(group, combo)) == group.order:
                return combo
    raise GroupError("unreachable: the group generates itself")


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the full image tuple on source indices."""

    source: FiniteGroup
    target: FiniteGroup
    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if len(self.image) != self.source.order:
            raise GroupError("image tuple must cover every source element")
        if self.image[0] != 0:
            raise GroupError("homomorphism must send identity to identity")
        for a in self.source.elements():
            for b in self.source.elements():
                if self.image[self.source.mul(a, b)] != self.target.mul(
                    self.image[a], self.image[b]
                ):
                    raise GroupError(f"not a homomorphism at ({a}, {b})")

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_bijective(self) -> bool:
        return len(set(self.image)) == self.source.order == self.target.order

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source.order

    def kernel(self):
        return tuple(sorted(a for a in self.source.elements() if self.image[a] == 0))

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise GroupError("composition mismatch")
        return GroupHom(other.source, self.target, tuple(self.image[v] for v in other.image))


def identity_hom(group: FiniteGroup) -> GroupHom:
    return GroupHom(group, group, tuple(group.elements()))


@dataclass(frozen=True)
class CosetSection:
    """Right cosets Hx with a chosen transversal and the splitting x = x' xbar.

    rep_of[x] is the representative of Hx (minimal index, identity coset
    represented by 0) and h_part[x] = x * rep_of[x]^-1 lies in H.
    """

    group: FiniteGroup
    subgroup: tuple
    transversal: tuple
    rep_of: tuple
    h_part: tuple
    sub_group: FiniteGroup = field(compare=False)
    to_sub: dict = field(compare=False)

    @property
    def cosets(self) -> int:
        return len(self.transversal)

    def coset_index(self, x: int) -> int:
        return self.transversal.index(self.rep_of[x])


def coset_section(group: FiniteGroup, subgroup) -> CosetSection:
    """Deterministic transversal for the right cosets of a subgroup."""
    sub = tuple(sorted(set(subgroup)))
    if not is_subgroup(group, sub):
        raise NotASubgroupError(f"{sub} is not a subgroup")
    rep_of = [None] * group.order
    transversal = []
    for x in group.elements():
        if rep_of[x] is not None:
            continue
        coset = sorted(group.mul(h, x) for h in sub)
        rep = coset[0]
        transversal.append(rep)
        for y in coset:
            rep_of[y] = rep
    h_part = tuple(group.mul(x, group.inv(rep_of[x])) for x in group.elements())
    sub_group, to_sub = materialize_subgroup(group, sub)
    return CosetSection(
        group=group,
        subgroup=sub,
        transversal=tuple(transversal),
        rep_of=tuple(rep_of),
        h_part=h_part,
        sub_group=sub_group,
        to_sub=to_sub,
    )


def materialize_subgroup(group: FiniteGroup, subset):
    """Subgroup as its own FiniteGroup plus the ambient->local index map."""
    sub = tuple(sorted(set(subset)))
    if not is_subgroup(group, sub):
        raise NotASubgroupError(f"{sub} is not a subgroup")
    to_sub = {amb: i for i, amb in enumerate(sub)}
    table = [[to_sub[group.mul(a, b)] for b in sub] for a in sub]
    lab = f"{group.label}|sub{len(sub)}" if group.label else None
    return FiniteGroup(table, label=lab), to_sub


def is_normal(group: FiniteGroup, subset) -> bool:
    elems = set(subset)
    return all(group.conj(g, x) in elems for g in group.elements() for x in elems)


def quotient_group(group: FiniteGroup, normal):
    """Quotient by a normal subgroup.

    Returns (quotient, projection image tuple, section tuple), where the
    section picks the minimal element of each coset and section[0] = 0.
    """
    n = tuple(sorted(set(normal)))
    if not is_normal(group, n):
        raise NotASubgroupError("subgroup is not normal")
    coset_of = [None] * group.order
    reps = []
    for x in group.elements():
        if coset_of[x] is not None:
            continue
        coset = sorted(group.mul(h, x) for h in n)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_of[y] = idx
    table = [
        [coset_of[group.mul(reps[a], reps[b])] for b in range(len(reps))]
        for a in range(len(reps))
    ]
    quotient = FiniteGroup(table, label=f"{group.label}/N" if group.label else None)
    return quotient, tuple(coset_of), tuple(reps)


@dataclass(frozen=True)
class AutData:
    """Automorphism group data: Aut, Inn, Out and a set-section Out -> Aut."""

    group: FiniteGroup
    aut_group: FiniteGroup
    aut_maps: tuple  # GroupHom per aut_group element
    inn_subgroup: tuple
    out_group: FiniteGroup
    out_projection: tuple  # aut index -> out index
    out_section: tuple  # out index -> aut index

    def aut(self, i: int) -> GroupHom:
        return self.aut_maps[i]


AUTOMORPHISM_ORDER_BOUND = 24


def automorphisms(group: FiniteGroup, bound: int = AUTOMORPHISM_ORDER_BOUND) -> AutData:
    """All automorphisms by brute force over images of a minimal generating set.

    Rejects groups with order above `bound`; the search is exponential and
    meant for desk-scale instances only.
    """
    if group.order > bound:
        raise GroupTooLargeError(
            f"order {group.order} exceeds the automorphism search bound {bound}"
        )
    gens = minimal_generating_sequence(group)
    words = _generator_words(group, gens)
    orders = [group.element_order(g) for g in gens]
    candidates = [
        [x for x in group.elements() if group.element_order(x) == o] for o in orders
    ]
    images = []
    for choice in itertools.product(*candidates):
        img = _extend_by_words(group, words, choice)
        if img is None or len(set(img)) != group.order:
            continue
        ok = all(
            img[group.mul(a, b)] == group.mul(img[a], img[b])
            for a in group.elements()
            for b in group.elements()
        )
        if ok:
            images.append(tuple(img))
    ident = tuple(group.elements())
    images = [ident] + sorted(img for img in images if img != ident)
    index = {img: i for i, img in enumerate(images)}
    table = [
        [index[tuple(a[b[x]] for x in group.elements())] for b in images]
        for a in images
    ]
    aut_group = FiniteGroup(table, label=f"Aut({group.label})" if group.label else "Aut")
    aut_maps = tuple(GroupHom(group, group, img) for img in images)
    inn = tuple(
        sorted(
            {
                index[tuple(group.conj(g, x) for x in group.elements())]
                for g in group.elements()
            }
        )
    )
    out_group, out_projection, out_reps = quotient_group(aut_group, inn)
    return AutData(
        group=group,
        aut_group=aut_group,
        aut_maps=aut_maps,
        inn_subgroup=inn,
        out_group=out_group,
        out_projection=out_projection,
        out_section=out_reps,
    )


def _generator_words(group: FiniteGroup, gens):
    """Express every element as a word (tuple of generator indices) by BFS."""
    words = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = group.mul(x, g)
                if y not in words:
                    words[y] = words[x] + (gi,)
                    nxt.append(y)
        frontier = nxt
    if len(words) != group.order:
        raise GroupError("generators do not generate")
    return [words[x] for x in group.elements()]


def _extend_by_words(group: FiniteGroup, words, gen_images):
    img = []
    for word in words:
        y = 0
        for gi in word:
            y = group.mul(y, gen_images[gi])
        img.append(y)
    return img


def conjugation_hom(group: FiniteGroup, aut_data: AutData) -> GroupHom:
    """g -> Inn_g as a hom into Aut; its kernel is the centre."""
    lookup = {aut.image: i for i, aut in enumerate(aut_data.aut_maps)}
    image = tuple(
        lookup[tuple(group.conj(g, x) for x in group.elements())]
        for g in group.elements()
    )
    return GroupHom(group, aut_data.aut_group, image)


def opposite_group(group: FiniteGroup) -> FiniteGroup:
    """Same elements with reversed multiplication."""
    table = [[group.mul(b, a) for b in group.elements()] for a in group.elements()]
    lab = f"{group.label}^op" if group.label else None
    return FiniteGroup(table, label=lab)
