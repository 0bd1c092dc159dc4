"""Ideals, congruences, ideal-induced relations, and quotients.

Subsets of a validated algebra are classified against the full ideal
taxonomy (order ideal, ideal, normal, sub-algebra, R1, Riesz, twist-closed),
partitions are classified against the congruence conditions C1-C5 and their
unital/Riesz refinements, and the two constructions connecting them are
provided: the relation induced by an ideal (``a`` related to ``b`` when both
become equal after removing a small piece) and the quotient algebra of a
congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    BudgetExceededError,
    FiniteGpea,
    InvariantViolation,
    MalformedTableError,
)

__all__ = [
    "CongruenceFlags",
    "IdealFlags",
    "LemmaVerdict",
    "NotEquivalenceError",
    "Partition",
    "RoundtripVerdict",
    "all_partitions",
    "classify_relation",
    "classify_subset",
    "congruences",
    "enumerate_ideals",
    "gcr_condition",
    "normal_ideal_lemmas",
    "normal_riesz_ideals",
    "quotient",
    "riesz_congruence_roundtrip",
    "sim_from_ideal",
    "smallest_normal_riesz_ideal",
]


class NotEquivalenceError(InvariantViolation):
    """The ideal-induced relation failed transitivity (reported, never closed)."""


# ------------------------------------------------------------------ subsets


@dataclass(frozen=True)
class IdealFlags:
    """Verdicts for one subset.  ``gamma_closed`` is ``None`` when no twist
    automorphism was supplied."""

    order_ideal: bool
    ideal: bool
    normal: bool
    sub_gpea: bool
    r1: bool
    riesz: bool
    gamma_closed: bool | None

    def items(self) -> list[tuple[str, bool | None]]:
        return [
            ("order_ideal", self.order_ideal),
            ("ideal", self.ideal),
            ("normal", self.normal),
            ("sub_gpea", self.sub_gpea),
            ("r1", self.r1),
            ("riesz", self.riesz),
            ("gamma_closed", self.gamma_closed),
        ]


def _subset_mask(g: FiniteGpea, members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        if not 0 <= x < g.size:
            raise MalformedTableError(f"subset member {x} out of range")
        mask |= 1 << x
    return mask


def _require_automorphism(g: FiniteGpea, gamma: Sequence[int]) -> tuple[int, ...]:
    gamma = tuple(gamma)
    if sorted(gamma) != list(range(g.size)):
        raise MalformedTableError("twist map is not a permutation of the carrier")
    for (a, b), s in g.op.items():
        if g.op.get((gamma[a], gamma[b])) != gamma[s]:
            raise MalformedTableError("twist map is not an automorphism")
    inv = [0] * g.size
    for i, v in enumerate(gamma):
        inv[v] = i
    for (a, b), s in g.op.items():
        if g.op.get((inv[a], inv[b])) != inv[s]:
            raise MalformedTableError("twist map inverse is not a morphism")
    return gamma


def classify_subset(
    g: FiniteGpea,
    members: Iterable[int],
    gamma: Sequence[int] | None = None,
) -> IdealFlags:
    """Classify ``members`` against the whole ideal taxonomy.

    The R1 and Riesz verdicts presuppose an ideal and are reported false
    otherwise.  The empty subset gets all-false verdicts.  ``gamma``, when
    given, must be an automorphism; the closure verdict is then
    ``members == gamma(members)``.
    """
    g.require_validated()
    if gamma is not None:
        gamma = _require_automorphism(g, gamma)
    mask = _subset_mask(g, members)
    if mask == 0:
        return IdealFlags(False, False, False, False, False, False,
                          False if gamma is not None else None)
    n = g.size
    op = g.op
    down = g.order.down_masks
    inside = [x for x in range(n) if mask >> x & 1]

    order_ideal = all(down[x] & ~mask == 0 for x in inside)
    sum_closed = all(
        mask >> s & 1
        for (a, b), s in op.items()
        if mask >> a & 1 and mask >> b & 1
    )
    ideal = order_ideal and sum_closed

    normal = ideal
    if normal:
        rows = g.rows
        cols = g.cols
        for c in range(n):
            for a, v in cols[c].items():  # a + c
                for b, w in rows[c].items():  # c + b
                    if v == w and (mask >> a & 1) != (mask >> b & 1):
                        normal = False
                        break
                if not normal:
                    break
            if not normal:
                break

    sub_gpea = True
    for (a, b), c in op.items():
        ins = (mask >> a & 1) + (mask >> b & 1) + (mask >> c & 1)
        if ins == 2:
            sub_gpea = False
            break

    r1 = ideal and _check_r1(g, mask, inside)
    riesz = r1 and _check_r2(g, mask, inside)

    gamma_closed: bool | None = None
    if gamma is not None:
        gamma_closed = all((mask >> gamma[x] & 1) == (mask >> x & 1) for x in range(n))

    return IdealFlags(
        order_ideal=order_ideal,
        ideal=ideal,
        normal=normal,
        sub_gpea=sub_gpea,
        r1=r1,
        riesz=riesz,
        gamma_closed=gamma_closed,
    )


def _check_r1(g: FiniteGpea, mask: int, inside: list[int]) -> bool:
    """Every member below a defined sum splits below the summands.

    For each member ``i`` with ``i <= a + b`` there must be members
    ``j <= a`` and ``k <= b`` whose sum is defined and dominates ``i``.
    """
    op = g.op
    le = g.le
    down = g.order.down_masks
    lower_members: list[list[int]] = [
        [j for j in inside if down[a] >> j & 1] for a in range(g.size)
    ]
    for (a, b), s in op.items():
        under_s = [i for i in inside if le(i, s)]
        if not under_s:
            continue
        covers = 0  # bitmask of members i already justified
        for j in lower_members[a]:
            row_j = g.rows[j]
            for k in lower_members[b]:
                t = row_j.get(k)
                if t is not None:
                    covers |= down[t]
        for i in under_s:
            if not covers >> i & 1:
                return False
    return True


def _check_r2(g: FiniteGpea, mask: int, inside: list[int]) -> bool:
    """The two residual-compatibility clauses of a Riesz ideal.

    Clause one: for ``i <= a``, whenever ``(a minus i) + b`` is defined some
    member ``j <= b`` makes ``a + (j-to-b residual)`` defined.  Clause two:
    whenever ``b + (i-to-a residual)`` is defined some member ``k <= b``
    makes ``(b minus k) + a`` defined.
    """
    n = g.size
    op = g.op
    le = g.le
    down = g.order.down_masks
    lower_members: list[list[int]] = [
        [j for j in inside if down[b] >> j & 1] for b in range(n)
    ]
    for i in inside:
        for a in range(n):
            if not le(i, a):
                continue
            a_minus_i = g.right_subtraction(i, a)  # x with x + i == a
            i_into_a = g.left_subtraction(i, a)  # y with i + y == a
            for b in range(n):
                if (a_minus_i, b) in op:
                    ok = False
                    for j in lower_members[b]:
                        resid = g.left_subtraction(j, b)  # j + resid == b
                        if resid is not None and (a, resid) in op:
                            ok = True
                            break
                    if not ok:
                        return False
                if (b, i_into_a) in op:
                    ok = False
                    for k in lower_members[b]:
                        rem = g.right_subtraction(k, b)  # rem + k == b
                        if rem is not None and (rem, a) in op:
                            ok = True
                            break
                    if not ok:
                        return False
    return True


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of a pointwise lemma check, with the first failing instance."""

    passed: bool
    witness: tuple | None = None


def normal_ideal_lemmas(g: FiniteGpea, members: Iterable[int]) -> LemmaVerdict:
    """Pointwise checks that membership respects sum cancellation.

    For every defined ``a + b``: ``b`` is a member iff ``(a+b) minus a``
    (from the right) is, and ``a`` is a member iff the residual of ``b``
    into ``a+b`` is.  On unital algebras, additionally: membership of ``a``,
    of its double supplements, and the two single supplements agree as the
    classical lemma states.  Requires a normal ideal.
    """
    flags = classify_subset(g, members)
    if not (flags.ideal and flags.normal):
        raise MalformedTableError("normal_ideal_lemmas requires a normal ideal")
    mask = _subset_mask(g, members)

    def member(x: int) -> bool:
        return bool(mask >> x & 1)

    for (a, b), s in g.op.items():
        peel_right = g.right_subtraction(a, s)  # x with x + a == a + b
        if peel_right is None or member(b) != member(peel_right):
            return LemmaVerdict(False, ("sum-peel right", a, b))
        peel_left = g.left_subtraction(b, s)  # y with b + y == a + b
        if peel_left is None or member(a) != member(peel_left):
            return LemmaVerdict(False, ("sum-peel left", a, b))

    if g.flags.has_unit:
        view = g.pea
        for a in range(g.size):
            if not (member(a) == member(view.ll(a)) == member(view.rr(a))):
                return LemmaVerdict(False, ("double supplement membership", a))
            if member(view.left_supp[a]) != member(view.right_supp[a]):
                return LemmaVerdict(False, ("single supplement membership", a))
    return LemmaVerdict(True)


# ---------------------------------------------------------------- partitions


class Partition:
    """An equivalence relation on ``0 .. size-1`` stored as blocks.

    Blocks are canonically ordered by their least element, so the block of
    ``0`` is always block ``0``.
    """

    def __init__(self, size: int, blocks: Iterable[Iterable[int]]):
        blocks = [frozenset(b) for b in blocks]
        if any(not b for b in blocks):
            raise MalformedTableError("partition blocks must be nonempty")
        seen: set[int] = set()
        for b in blocks:
            for x in b:
                if not 0 <= x < size or x in seen:
                    raise MalformedTableError("blocks must disjointly cover the carrier")
                seen.add(x)
        if len(seen) != size:
            raise MalformedTableError("blocks must disjointly cover the carrier")
        self.size = size
        self.blocks: tuple[frozenset[int], ...] = tuple(sorted(blocks, key=min))
        self.block_of: tuple[int, ...] = tuple(
            next(i for i, b in enumerate(self.blocks) if x in b) for x in range(size)
        )

    @classmethod
    def identity(cls, size: int) -> "Partition":
        return cls(size, [[x] for x in range(size)])

    @classmethod
    def single_block(cls, size: int) -> "Partition":
        return cls(size, [range(size)])

    @classmethod
    def from_block_of(cls, labels: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls(len(labels), groups.values())

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def block(self, a: int) -> frozenset[int]:
        return self.blocks[self.block_of[a]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.block_of == other.block_of

    def __hash__(self) -> int:
        return hash(self.block_of)

    def __repr__(self) -> str:
        body = " | ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return f"Partition({body})"


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``0 .. n-1``, by restricted growth strings."""
    labels = [0] * n

    def rec(i: int, maxlab: int) -> Iterator[Partition]:
        if i == n:
            yield Partition.from_block_of(labels)
            return
        for lab in range(maxlab + 2):
            labels[i] = lab
            yield from rec(i + 1, max(maxlab, lab))

    if n == 0:
        return
    yield from rec(1, 0)


# -------------------------------------------------------- relation classifier


@dataclass(frozen=True)
class CongruenceFlags:
    """Condition-by-condition verdicts for a partition.

    ``c4prime`` is ``None`` on non-unital algebras; ``gcr`` is ``None``
    without a reference ideal; ``gamma_congruence`` is ``None`` without a
    twist automorphism.
    """

    c1: bool
    c2: bool
    c3: bool
    c4: bool
    c5: bool
    c4prime: bool | None
    c5prime: bool
    cr: bool
    gcr: bool | None
    gamma_congruence: bool | None

    @property
    def weak_congruence(self) -> bool:
        return self.c1 and self.c2

    @property
    def congruence(self) -> bool:
        return self.c1 and self.c2 and self.c3

    @property
    def riesz_congruence(self) -> bool:
        return self.congruence and self.c4 and self.c5prime and self.cr

    def items(self) -> list[tuple[str, bool | None]]:
        return [
            ("C1", self.c1),
            ("C2", self.c2),
            ("C3", self.c3),
            ("C4", self.c4),
            ("C5", self.c5),
            ("C4prime", self.c4prime),
            ("C5prime", self.c5prime),
            ("CR", self.cr),
            ("GCR", self.gcr),
            ("gamma_congruence", self.gamma_congruence),
        ]


def _check_c2(g: FiniteGpea, rel: Partition) -> bool:
    result_block: dict[tuple[int, int], int] = {}
    bl = rel.block_of
    for (a, b), s in g.op.items():
        key = (bl[a], bl[b])
        prev = result_block.get(key)
        if prev is None:
            result_block[key] = bl[s]
        elif prev != bl[s]:
            return False
    return True


def _check_c3(g: FiniteGpea, rel: Partition) -> bool:
    bl = rel.block_of
    defined_pairs = {(bl[a], bl[b]) for (a, b) in g.op}
    rows = g.rows
    cols = g.cols
    for ba, bb in defined_pairs:
        for a1 in rel.blocks[ba]:
            if not any(bl[b1] == bb for b1 in rows[a1]):
                return False
        for b2 in rel.blocks[bb]:
            if not any(bl[a2] == ba for a2 in cols[b2]):
                return False
    return True


def _check_c4(g: FiniteGpea, rel: Partition) -> bool:
    bl = rel.block_of
    left_partner: dict[tuple[int, int], int] = {}
    right_partner: dict[tuple[int, int], int] = {}
    for (a, a1), s in g.op.items():
        key = (bl[a], bl[s])
        prev = left_partner.get(key)
        if prev is None:
            left_partner[key] = bl[a1]
        elif prev != bl[a1]:
            return False
        key = (bl[a1], bl[s])
        prev = right_partner.get(key)
        if prev is None:
            right_partner[key] = bl[a]
        elif prev != bl[a]:
            return False
    return True


def _check_c5(g: FiniteGpea, rel: Partition) -> bool:
    bl = rel.block_of
    zero = bl[0]
    return all(
        bl[a] == zero and bl[b] == zero
        for (a, b), s in g.op.items()
        if bl[s] == zero
    )


def _check_c4prime(g: FiniteGpea, rel: Partition) -> bool:
    view = g.pea
    bl = rel.block_of
    for block in rel.blocks:
        rs_blocks = {bl[view.right_supp[a]] for a in block}
        ls_blocks = {bl[view.left_supp[a]] for a in block}
        if len(rs_blocks) > 1 or len(ls_blocks) > 1:
            return False
    return True


def _check_c5prime(g: FiniteGpea, rel: Partition) -> bool:
    bl = rel.block_of
    decomps: list[set[tuple[int, int]]] = [set() for _ in range(g.size)]
    for (u, v), s in g.op.items():
        decomps[s].add((bl[u], bl[v]))
    needed: set[tuple[int, int, int]] = set()
    for (b, c), s in g.op.items():
        for a in rel.blocks[bl[s]]:
            needed.add((a, bl[b], bl[c]))
    return all((ba, bc) in decomps[a] for (a, ba, bc) in needed)


def _check_cr(g: FiniteGpea, rel: Partition) -> bool:
    bl = rel.block_of
    zero = bl[0]
    up = g.order.up_masks
    down = g.order.down_masks
    n = g.size
    for block in rel.blocks:
        for a in block:
            for b in block:
                if a > b:
                    continue
                ok = False
                lows = down[a] & down[b]
                highs = up[a] & up[b]
                for c in range(n):
                    if not lows >> c & 1:
                        continue
                    if bl[g.right_subtraction(c, a)] != zero:
                        continue
                    if bl[g.right_subtraction(c, b)] != zero:
                        continue
                    for d in range(n):
                        if not highs >> d & 1:
                            continue
                        if (
                            bl[g.right_subtraction(a, d)] == zero
                            and bl[g.right_subtraction(b, d)] == zero
                        ):
                            ok = True
                            break
                    if ok:
                        break
                if not ok:
                    return False
    return True


def gcr_condition(
    g: FiniteGpea, rel: Partition, ideal_members: Iterable[int], form: int = 1
) -> bool:
    """Related elements admit member-padded equal sums.

    Form 1: for all related ``a, b`` there are members ``i, j`` with
    ``i + a == j + b``.  Form 2: members on the right, ``a + k == b + l``.
    """
    g.require_validated()
    mask = _subset_mask(g, ideal_members)
    inside = [x for x in range(g.size) if mask >> x & 1]
    cols = g.cols
    rows = g.rows
    for block in rel.blocks:
        for a in block:
            for b in block:
                if a >= b:
                    continue
                if form == 1:
                    left = {cols[a][i] for i in inside if i in cols[a]}
                    right = {cols[b][j] for j in inside if j in cols[b]}
                else:
                    left = {rows[a][k] for k in inside if k in rows[a]}
                    right = {rows[b][l] for l in inside if l in rows[b]}
                if not left & right:
                    return False
    return True


def _check_gamma_congruence(rel: Partition, gamma: Sequence[int]) -> bool:
    bl = rel.block_of
    for block in rel.blocks:
        if len({bl[gamma[a]] for a in block}) > 1:
            return False
    image_blocks = {frozenset(gamma[a] for a in block) for block in rel.blocks}
    return image_blocks == set(rel.blocks)


def classify_relation(
    g: FiniteGpea,
    rel: Partition,
    ideal_for_gcr: Iterable[int] | None = None,
    gamma: Sequence[int] | None = None,
) -> CongruenceFlags:
    """Compute every congruence condition for a partition by direct search."""
    g.require_validated()
    if rel.size != g.size:
        raise MalformedTableError("partition size does not match the carrier")
    if gamma is not None:
        gamma = _require_automorphism(g, gamma)
    c1 = True  # partitions are equivalences by construction
    c2 = _check_c2(g, rel)
    c3 = _check_c3(g, rel)
    c4 = _check_c4(g, rel)
    c5 = _check_c5(g, rel)
    c4prime = _check_c4prime(g, rel) if g.flags.has_unit else None
    c5prime = _check_c5prime(g, rel)
    cr = _check_cr(g, rel)
    gcr = (
        gcr_condition(g, rel, ideal_for_gcr, form=1)
        if ideal_for_gcr is not None
        else None
    )
    gamma_congruence = (
        _check_gamma_congruence(rel, gamma) if gamma is not None else None
    )
    return CongruenceFlags(
        c1=c1, c2=c2, c3=c3, c4=c4, c5=c5,
        c4prime=c4prime, c5prime=c5prime, cr=cr, gcr=gcr,
        gamma_congruence=gamma_congruence,
    )


# ------------------------------------------------------- induced relation


def sim_from_ideal(g: FiniteGpea, members: Iterable[int]) -> Partition:
    """The relation "equal after peeling a member off each side".

    ``a`` is related to ``b`` iff there are members ``i <= a`` and
    ``j <= b`` with ``a minus i == b minus j`` (right subtraction).  The
    relation is reflexive and symmetric by construction; transitivity is
    *checked*, and a failure raises :class:`NotEquivalenceError` rather than
    silently taking the transitive closure.  For normal ideals the
    left-subtraction variant must induce the same relation and is verified.
    """
    flags = classify_subset(g, members)
    if not flags.ideal:
        raise MalformedTableError("sim_from_ideal requires an ideal")
    mask = _subset_mask(g, members)
    n = g.size
    inside = [x for x in range(n) if mask >> x & 1]
    down = g.order.down_masks

    def peels(a: int, use_left: bool) -> frozenset[int]:
        out = set()
        for i in inside:
            if down[a] >> i & 1:
                r = g.left_subtraction(i, a) if use_left else g.right_subtraction(i, a)
                out.add(r)
        return frozenset(out)

    right_peels = [peels(a, use_left=False) for a in range(n)]
    related = [[bool(right_peels[a] & right_peels[b]) for b in range(n)] for a in range(n)]

    if flags.normal:
        left_peels = [peels(a, use_left=True) for a in range(n)]
        for a in range(n):
            for b in range(n):
                if bool(left_peels[a] & left_peels[b]) != related[a][b]:
                    raise InvariantViolation(
                        "left- and right-peel relations differ on a normal ideal"
                    )

    for a in range(n):
        for b in range(n):
            if related[a][b]:
                for c in range(n):
                    if related[b][c] and not related[a][c]:
                        raise NotEquivalenceError(
                            f"NOT_EQUIVALENCE: transitivity fails at ({a}, {b}, {c})"
                        )

    labels = [-1] * n
    fresh = 0
    for a in range(n):
        if labels[a] < 0:
            for b in range(a, n):
                if related[a][b]:
                    labels[b] = fresh
            fresh += 1
    return Partition.from_block_of(labels)


# ------------------------------------------------------------------ quotient


def quotient(g: FiniteGpea, rel: Partition) -> FiniteGpea:
    """The block algebra of a congruence.

    Requires a congruence whose quotient is again an algebra of the same
    kind (conditions C4 and C5); the result is validated, and a validation
    failure is surfaced as a bug rather than returned.
    """
    flags = classify_relation(g, rel)
    if not (flags.congruence and flags.c4 and flags.c5):
        raise MalformedTableError(
            "quotient requires a congruence satisfying C4 and C5"
        )
    bl = rel.block_of
    table: dict[tuple[int, int], int] = {}
    for (a, b), s in g.op.items():
        key = (bl[a], bl[b])
        if key in table and table[key] != bl[s]:
            raise InvariantViolation("quotient table is not well defined")
        table[key] = bl[s]
    names = {
        i: "{" + ",".join(g.name(x) for x in sorted(block)) + "}"
        for i, block in enumerate(rel.blocks)
    }
    q = FiniteGpea(len(rel.blocks), table, names)
    q.validate()  # raises InvalidAlgebraError loudly on an implementation bug
    return q


@dataclass(frozen=True)
class RoundtripVerdict:
    """Outcome of the Riesz-congruence/directed-classes/zero-class roundtrip."""

    passed: bool
    riesz_congruence: bool
    classes_directed: bool
    zero_class: frozenset[int]
    detail: str = ""


def riesz_congruence_roundtrip(g: FiniteGpea, rel: Partition) -> RoundtripVerdict:
    """Check that a C4+C5' congruence is Riesz iff its classes are directed.

    When the relation is Riesz, additionally require that its zero class is
    a normal Riesz ideal and that the relation induced by that ideal equals
    the input relation.
    """
    flags = classify_relation(g, rel)
    if not (flags.congruence and flags.c4 and flags.c5prime):
        raise MalformedTableError(
            "roundtrip requires a congruence satisfying C4 and C5'"
        )
    directed = all(
        g.subset_upward_directed(block) and g.subset_downward_directed(block)
        for block in rel.blocks
    )
    riesz = flags.riesz_congruence
    if riesz != directed:
        return RoundtripVerdict(
            False, riesz, directed, rel.block(0),
            detail="Riesz verdict disagrees with class directedness",
        )
    if not riesz:
        return RoundtripVerdict(True, riesz, directed, rel.block(0))
    zero_class = rel.block(0)
    zflags = classify_subset(g, zero_class)
    if not (zflags.normal and zflags.riesz):
        return RoundtripVerdict(
            False, riesz, directed, zero_class,
            detail="zero class of a Riesz congruence is not a normal Riesz ideal",
        )
    if sim_from_ideal(g, zero_class) != rel:
        return RoundtripVerdict(
            False, riesz, directed, zero_class,
            detail="relation induced by the zero class differs from the input",
        )
    return RoundtripVerdict(True, riesz, directed, zero_class)


# ------------------------------------------------------------- enumeration


def ideal_closure(g: FiniteGpea, seed: int) -> int:
    """Least ideal (as bitmask) containing the seed bitmask."""
    down = g.order.down_masks
    op = g.op
    mask = seed | 1  # ideals contain 0
    while True:
        new = mask
        for x in range(g.size):
            if mask >> x & 1:
                new |= down[x]
        for (a, b), s in op.items():
            if new >> a & 1 and new >> b & 1:
                new |= 1 << s
        if new == mask:
            return mask
        mask = new


def enumerate_ideals(g: FiniteGpea) -> list[frozenset[int]]:
    """All ideals, smallest first (by size, then by sorted members).

    Generated as closures: starting from the zero ideal, repeatedly adjoin
    one new element and close under downward membership and defined sums.
    Every ideal is reachable this way, so the enumeration is complete.
    """
    g.require_validated()
    n = g.size
    seen: set[int] = set()
    frontier = [ideal_closure(g, 1)]
    seen.add(frontier[0])
    while frontier:
        current = frontier.pop()
        for x in range(n):
            if not current >> x & 1:
                grown = ideal_closure(g, current | 1 << x)
                if grown not in seen:
                    seen.add(grown)
                    frontier.append(grown)
    subsets = [
        frozenset(x for x in range(n) if mask >> x & 1) for mask in seen
    ]
    return sorted(subsets, key=lambda s: (len(s), sorted(s)))


def normal_riesz_ideals(
    g: FiniteGpea,
    gamma: Sequence[int] | None = None,
    include_improper: bool = True,
    nontrivial_only: bool = True,
) -> list[frozenset[int]]:
    """All (nontrivial) normal Riesz ideals, optionally twist-closed."""
    out = []
    for members in enumerate_ideals(g):
        if nontrivial_only and members == frozenset({0}):
            continue
        if not include_improper and len(members) == g.size:
            continue
        flags = classify_subset(g, members, gamma)
        if flags.normal and flags.riesz and (gamma is None or flags.gamma_closed):
            out.append(members)
    return out


def smallest_normal_riesz_ideal(
    g: FiniteGpea,
    gamma: Sequence[int] | None = None,
    include_improper: bool = True,
) -> frozenset[int] | None:
    """The nontrivial normal Riesz (twist-closed) ideal contained in all
    others, or ``None`` when the family is empty or has no minimum."""
    family = normal_riesz_ideals(
        g, gamma, include_improper=include_improper, nontrivial_only=True
    )
    if not family:
        return None
    candidate = min(family, key=len)
    if all(candidate <= other for other in family):
        return candidate
    return None


# ------------------------------------------------------------- congruences


def congruences(g: FiniteGpea, max_size: int = 8) -> Iterator[Partition]:
    """All congruences (C1-C3) of a small algebra, via partition search.

    The carrier must have at most ``max_size`` elements (the search walks
    every partition, of which there are Bell-number many); the cheap C2
    check runs first as a filter.
    """
    g.require_validated()
    if g.size > max_size:
        raise BudgetExceededError(
            f"congruence search over all partitions is limited to {max_size} elements"
        )
    for rel in all_partitions(g.size):
        if not _check_c2(g, rel):
            continue
        if _check_c3(g, rel):
            yield rel
