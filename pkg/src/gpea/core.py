"""Finite partial algebras with a two-sided zero, and the GPEA axioms.

A generalized pseudo effect algebra (GPEA) is a set with a partial binary
operation ``+`` and a neutral element ``0`` satisfying associativity (in the
strong, existence-transferring sense), a conjugation property (every defined
sum can be rewritten with its arguments on either side), cancellation on both
sides, neutrality of ``0``, and positivity (only ``0 + 0`` is ``0``).  This
module represents such algebras as explicit operation tables over elements
``0 .. size-1`` and provides axiom validation, the induced partial order,
subtraction, structural classification, the unital (PEA) view with its two
supplement maps, and brute-force isomorphism search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "AXIOMS",
    "AlgebraError",
    "AxiomReport",
    "BudgetExceededError",
    "FiniteGpea",
    "InvalidAlgebraError",
    "InvariantViolation",
    "MalformedTableError",
    "NoUnitError",
    "NotValidatedError",
    "OrderRelation",
    "PeaView",
    "StructureFlags",
    "classify",
    "element_budget",
    "extended_cancellation_witness",
    "find_morphisms",
    "induced_order",
    "pea_view",
    "subtract",
    "validate_axioms",
]

#: The five defining axioms, in their conventional order.
AXIOMS = ("associativity", "conjugation", "cancellation", "neutrality", "positivity")

#: Hard default on how many elements any constructed algebra may have.
DEFAULT_ELEMENT_BUDGET = 4096


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTableError(AlgebraError):
    """An operation table is structurally broken (bad size, out-of-range index)."""


class NotValidatedError(AlgebraError):
    """An operation requiring a validated algebra received a raw table."""


class InvalidAlgebraError(AlgebraError):
    """Validation was requested on a table that fails the axioms."""

    def __init__(self, report: "AxiomReport"):
        self.report = report
        failing = ", ".join(
            f"{name}@{report.witnesses[name]}" for name in AXIOMS if not report.verdicts[name]
        )
        super().__init__(f"table is not a GPEA: {failing}")


class NoUnitError(AlgebraError):
    """A unital (PEA) operation was requested on an algebra with no top element."""


class BudgetExceededError(AlgebraError):
    """A construction would materialize more elements than the configured budget."""


class InvariantViolation(AlgebraError):
    """An internally guaranteed identity failed; indicates a bug, not bad input."""


def element_budget() -> int:
    """Maximum carrier size for constructed algebras (env ``GPEA_BUDGET`` overrides)."""
    raw = os.environ.get("GPEA_BUDGET")
    if raw is None:
        return DEFAULT_ELEMENT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise MalformedTableError(f"GPEA_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise MalformedTableError("GPEA_BUDGET must be positive")
    return value


class FiniteGpea:
    """A finite partial algebra ``(P, +, 0)`` given by an explicit table.

    ``op`` maps index pairs ``(i, j)`` to ``i + j``; absent pairs are
    undefined.  Element ``0`` is always the designated zero.  A fresh
    instance is a *raw table*: it is structurally well-formed but makes no
    axiom promises until :meth:`validate` has passed, and all
    order-theoretic accessors refuse to run before that.
    """

    def __init__(
        self,
        size: int,
        op: Mapping[tuple[int, int], int],
        names: Mapping[int, str] | Sequence[str] | None = None,
    ):
        if not isinstance(size, int) or size < 1:
            raise MalformedTableError(f"size must be a positive integer, got {size!r}")
        budget = element_budget()
        if size > budget:
            raise BudgetExceededError(
                f"carrier of {size} elements exceeds the budget of {budget} "
                "(set GPEA_BUDGET to raise it)"
            )
        table: dict[tuple[int, int], int] = {}
        for key, value in op.items():
            try:
                i, j = key
            except (TypeError, ValueError) as exc:
                raise MalformedTableError(f"op key {key!r} is not an index pair") from exc
            if not (0 <= i < size and 0 <= j < size and 0 <= value < size):
                raise MalformedTableError(
                    f"op entry ({i}, {j}) -> {value} out of range for size {size}"
                )
            table[(i, j)] = value
        self.size = size
        self.op = table
        if names is None:
            self.names: dict[int, str] = {}
        elif isinstance(names, Mapping):
            self.names = {int(i): str(t) for i, t in names.items()}
        else:
            self.names = {i: str(t) for i, t in enumerate(names)}
        for i in self.names:
            if not 0 <= i < size:
                raise MalformedTableError(f"name for out-of-range element {i}")
        self._validated = False
        self._cache: dict[str, object] = {}

    # ------------------------------------------------------------------ basic

    @property
    def elements(self) -> range:
        return range(self.size)

    def name(self, i: int) -> str:
        return self.names.get(i, str(i))

    def value(self, a: int, b: int) -> int | None:
        """``a + b`` or ``None`` when undefined."""
        return self.op.get((a, b))

    def defined(self, a: int, b: int) -> bool:
        return (a, b) in self.op

    def same_table(self, other: "FiniteGpea") -> bool:
        return self.size == other.size and self.op == other.op

    def table_key(self) -> tuple[int, ...]:
        """Row-major flattened table with ``size`` as the undefined sentinel."""
        n = self.size
        return tuple(self.op.get((i, j), n) for i in range(n) for j in range(n))

    def relabel(self, perm: Sequence[int]) -> "FiniteGpea":
        """The same algebra with element ``i`` renamed to ``perm[i]``.

        ``perm`` must be a bijection on the carrier fixing ``0``.
        """
        n = self.size
        if sorted(perm) != list(range(n)) or perm[0] != 0:
            raise MalformedTableError("relabeling must be a permutation fixing 0")
        op = {(perm[i], perm[j]): perm[k] for (i, j), k in self.op.items()}
        names = {perm[i]: t for i, t in self.names.items()}
        out = FiniteGpea(n, op, names)
        if self._validated:
            out._validated = True
        return out

    def with_names(self, names: Mapping[int, str] | Sequence[str]) -> "FiniteGpea":
        out = FiniteGpea(self.size, self.op, names)
        out._validated = self._validated
        return out

    def __repr__(self) -> str:
        state = "validated" if self._validated else "raw"
        return f"FiniteGpea(size={self.size}, defined={len(self.op)}, {state})"

    # ------------------------------------------------------------- validation

    @property
    def is_validated(self) -> bool:
        return self._validated

    def validate(self) -> "FiniteGpea":
        """Check all five axioms; mark the table validated or raise."""
        if not self._validated:
            report = validate_axioms(self)
            if not report.passed:
                raise InvalidAlgebraError(report)
            self._validated = True
        return self

    def require_validated(self) -> None:
        if not self._validated:
            raise NotValidatedError(
                "operation requires a validated algebra; call .validate() first"
            )

    # ------------------------------------------------------------ table views

    @property
    def rows(self) -> list[dict[int, int]]:
        """``rows[a][b] == a + b`` over the defined entries."""
        got = self._cache.get("rows")
        if got is None:
            got = [dict() for _ in range(self.size)]
            for (a, b), v in self.op.items():
                got[a][b] = v
            self._cache["rows"] = got
        return got  # type: ignore[return-value]

    @property
    def cols(self) -> list[dict[int, int]]:
        """``cols[b][a] == a + b`` over the defined entries."""
        got = self._cache.get("cols")
        if got is None:
            got = [dict() for _ in range(self.size)]
            for (a, b), v in self.op.items():
                got[b][a] = v
            self._cache["cols"] = got
        return got  # type: ignore[return-value]

    # ------------------------------------------------------------------ order

    @property
    def order(self) -> "OrderRelation":
        got = self._cache.get("order")
        if got is None:
            got = induced_order(self)
            self._cache["order"] = got
        return got  # type: ignore[return-value]

    def le(self, a: int, b: int) -> bool:
        """``a <= b`` in the induced order."""
        return bool(self.order.up_masks[a] >> b & 1)

    @property
    def _subtractions(self) -> tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]]:
        got = self._cache.get("subs")
        if got is None:
            left: dict[tuple[int, int], int] = {}
            right: dict[tuple[int, int], int] = {}
            for (a, c), b in self.op.items():
                left[(a, b)] = c
                right[(c, b)] = a
            got = (left, right)
            self._cache["subs"] = got
        return got  # type: ignore[return-value]

    def left_subtraction(self, a: int, b: int) -> int | None:
        """The unique ``c`` with ``a + c == b``, or ``None`` when ``a <= b`` fails."""
        self.require_validated()
        return self._subtractions[0].get((a, b))

    def right_subtraction(self, a: int, b: int) -> int | None:
        """The unique ``d`` with ``d + a == b``, or ``None`` when ``a <= b`` fails."""
        self.require_validated()
        return self._subtractions[1].get((a, b))

    # ------------------------------------------------------------- structure

    @property
    def flags(self) -> "StructureFlags":
        got = self._cache.get("flags")
        if got is None:
            got = classify(self)
            self._cache["flags"] = got
        return got  # type: ignore[return-value]

    @property
    def pea(self) -> "PeaView":
        got = self._cache.get("pea")
        if got is None:
            got = pea_view(self)
            self._cache["pea"] = got
        return got  # type: ignore[return-value]

    def subset_upward_directed(self, members: Iterable[int]) -> bool:
        """Every two members have a common upper bound inside the subset."""
        self.require_validated()
        mask = 0
        for x in members:
            mask |= 1 << x
        up = self.order.up_masks
        xs = [x for x in self.elements if mask >> x & 1]
        return all(up[a] & up[b] & mask for a in xs for b in xs)

    def subset_downward_directed(self, members: Iterable[int]) -> bool:
        """Every two members have a common lower bound inside the subset."""
        self.require_validated()
        mask = 0
        for x in members:
            mask |= 1 << x
        down = self.order.down_masks
        xs = [x for x in self.elements if mask >> x & 1]
        return all(down[a] & down[b] & mask for a in xs for b in xs)


# ---------------------------------------------------------------------- types


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with one witness triple for each failure.

    Witness conventions (always the lexicographically smallest failing
    triple for the axiom):

    * associativity — ``(a, b, c)`` where the two-sided reading of
      ``(a+b)+c == a+(b+c)`` fails (existence transfer or equality);
    * conjugation — ``(a, b, a+b)`` where no ``c + a`` or no ``b + d``
      reproduces the sum;
    * cancellation — ``(a, b, c)`` with ``a != b`` but ``a+c == b+c``
      or ``c+a == c+b``;
    * neutrality — ``(0, x, x)`` or ``(x, 0, x)`` for the broken side;
    * positivity — ``(a, b, 0)`` with ``a + b == 0`` but ``(a, b) != (0, 0)``.
    """

    verdicts: dict[str, bool]
    witnesses: dict[str, tuple[int, int, int] | None]

    @property
    def passed(self) -> bool:
        return all(self.verdicts[name] for name in AXIOMS)

    def lines(self) -> list[str]:
        out = []
        for name in AXIOMS:
            if self.verdicts[name]:
                out.append(f"{name}=pass")
            else:
                out.append(f"{name}=fail witness={self.witnesses[name]}")
        return out


class OrderRelation:
    """The induced partial order: ``a <= b`` iff some ``c`` has ``a + c == b``."""

    def __init__(self, size: int, pairs: Iterable[tuple[int, int]]):
        self.size = size
        self.pairs = frozenset(pairs)
        up = [0] * size
        down = [0] * size
        for a, b in self.pairs:
            up[a] |= 1 << b
            down[b] |= 1 << a
        #: ``up_masks[a]`` is the bitmask of all ``b`` with ``a <= b``.
        self.up_masks = up
        #: ``down_masks[b]`` is the bitmask of all ``a`` with ``a <= b``.
        self.down_masks = down

    def le(self, a: int, b: int) -> bool:
        return bool(self.up_masks[a] >> b & 1)

    @property
    def maximal_elements(self) -> list[int]:
        return [a for a in range(self.size) if self.up_masks[a] == 1 << a]

    @property
    def maximum(self) -> int | None:
        """The top element when one exists."""
        full = (1 << self.size) - 1
        for m in range(self.size):
            if self.down_masks[m] == full:
                return m
        return None

    def check_partial_order(self) -> None:
        """Reflexivity, antisymmetry, transitivity, and minimality of 0."""
        n = self.size
        full = (1 << n) - 1
        if self.up_masks[0] != full:
            raise InvariantViolation("0 is not below every element")
        for a in range(n):
            if not self.up_masks[a] >> a & 1:
                raise InvariantViolation(f"order not reflexive at {a}")
            for b in range(n):
                if a != b and self.le(a, b) and self.le(b, a):
                    raise InvariantViolation(f"order not antisymmetric at ({a}, {b})")
                if self.le(a, b) and self.up_masks[b] & ~self.up_masks[a]:
                    raise InvariantViolation(f"order not transitive above ({a}, {b})")


@dataclass(frozen=True)
class StructureFlags:
    """Global structural classification of a validated algebra."""

    total: bool
    weakly_commutative: bool
    commutative: bool
    has_unit: bool
    upward_directed: bool
    downward_directed: bool

    def items(self) -> list[tuple[str, bool]]:
        return [
            ("total", self.total),
            ("weakly_commutative", self.weakly_commutative),
            ("commutative", self.commutative),
            ("has_unit", self.has_unit),
            ("upward_directed", self.upward_directed),
            ("downward_directed", self.downward_directed),
        ]


@dataclass(frozen=True)
class PeaView:
    """Unital view of an algebra: top element and the two supplement maps.

    ``right_supp[a]`` is the unique ``a'`` with ``a + a' == unit`` and
    ``left_supp[a]`` the unique ``a''`` with ``a'' + a == unit``.
    """

    unit: int
    right_supp: tuple[int, ...]
    left_supp: tuple[int, ...]

    def rr(self, a: int) -> int:
        """Double right supplement."""
        return self.right_supp[self.right_supp[a]]

    def ll(self, a: int) -> int:
        """Double left supplement."""
        return self.left_supp[self.left_supp[a]]

    @property
    def double_left_map(self) -> tuple[int, ...]:
        """The permutation ``a -> ll(a)``; for unitizations this is the twist."""
        return tuple(self.ll(a) for a in range(len(self.right_supp)))


# ----------------------------------------------------------------- validation


def validate_axioms(table: FiniteGpea) -> AxiomReport:
    """Check the five axioms on a raw table, reporting smallest witnesses.

    Associativity is verified as a full biconditional: for every triple,
    ``(a+b)+c`` exists iff ``a+(b+c)`` exists, and the values agree whenever
    both sides are defined.
    """
    n = table.size
    op = table.op
    rows = table.rows
    cols = table.cols

    verdicts: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, int, int] | None] = {}

    def record(name: str, fails: list[tuple[int, int, int]]) -> None:
        verdicts[name] = not fails
        witnesses[name] = min(fails) if fails else None

    # associativity: every failing triple has at least one side defined, so
    # scanning "left side exists" and "right side exists" covers all failures.
    fails: list[tuple[int, int, int]] = []
    for (a, b), s in op.items():
        row_s, row_b, row_a = rows[s], rows[b], rows[a]
        for c, u in row_s.items():  # (a+b)+c defined
            t = row_b.get(c)
            v = row_a.get(t) if t is not None else None
            if v is None or v != u:
                fails.append((a, b, c))
    for (b, c), t in op.items():
        col_t = cols[t]
        for a in col_t:  # a+(b+c) defined
            s = op.get((a, b))
            if s is None or c not in rows[s]:
                fails.append((a, b, c))
    record("associativity", fails)

    # conjugation: a+b == some c+a and some b+d.
    fails = []
    row_value_sets = [set(r.values()) for r in rows]
    col_value_sets = [set(c.values()) for c in cols]
    for (a, b), s in op.items():
        if s not in col_value_sets[a] or s not in row_value_sets[b]:
            fails.append((a, b, s))
    record("conjugation", fails)

    # cancellation: rows and columns are injective on their defined entries.
    fails = []
    for c in range(n):
        seen: dict[int, int] = {}
        for a in sorted(cols[c]):
            v = cols[c][a]
            if v in seen:
                fails.append((seen[v], a, c))
            else:
                seen[v] = a
        seen = {}
        for a in sorted(rows[c]):
            v = rows[c][a]
            if v in seen:
                fails.append((seen[v], a, c))
            else:
                seen[v] = a
    record("cancellation", fails)

    # neutrality of 0 on both sides.
    fails = []
    for x in range(n):
        if op.get((0, x)) != x:
            fails.append((0, x, x))
        if op.get((x, 0)) != x:
            fails.append((x, 0, x))
    record("neutrality", fails)

    # positivity: only 0 + 0 gives 0.
    fails = [(a, b, 0) for (a, b), s in op.items() if s == 0 and (a, b) != (0, 0)]
    record("positivity", fails)

    return AxiomReport(verdicts, witnesses)


# ---------------------------------------------------------------------- order


def induced_order(g: FiniteGpea) -> OrderRelation:
    """Compute ``a <= b iff exists c: a + c == b`` and sanity-check it.

    The same relation read from the other side (``exists d: d + a == b``)
    must coincide; both are computed and compared.
    """
    g.require_validated()
    left_pairs = {(a, b) for (a, c), b in g.op.items()}
    right_pairs = {(a, b) for (d, a), b in g.op.items()}
    if left_pairs != right_pairs:
        raise InvariantViolation("left- and right-divisibility orders differ")
    order = OrderRelation(g.size, left_pairs)
    order.check_partial_order()
    return order


def subtract(g: FiniteGpea, a: int, b: int) -> tuple[int, int] | None:
    """``(a-from-the-left, a-from-the-right)`` against ``b``, or ``None``.

    When ``a <= b`` returns the pair ``(c, d)`` with ``a + c == b`` and
    ``d + a == b``; both components exist and are unique.  When ``a <= b``
    fails, returns ``None`` (this is a signal, not an error).
    """
    g.require_validated()
    left = g.left_subtraction(a, b)
    right = g.right_subtraction(a, b)
    if (left is None) != (right is None):
        raise InvariantViolation(f"one-sided subtraction at ({a}, {b})")
    if left is None:
        return None
    return (left, right)


def extended_cancellation_witness(g: FiniteGpea) -> tuple[int, int, int] | None:
    """A triple violating ``a+c <= b+c  or  c+a <= c+b  implies  a <= b``.

    Returns ``None`` when the (always guaranteed) property holds; exposed so
    suites can assert it explicitly on every instance.
    """
    g.require_validated()
    le = g.le
    for c in range(g.size):
        col = g.cols[c]
        for a, sa in col.items():
            for b, sb in col.items():
                if le(sa, sb) and not le(a, b):
                    return (a, b, c)
        row = g.rows[c]
        for a, sa in row.items():
            for b, sb in row.items():
                if le(sa, sb) and not le(a, b):
                    return (a, b, c)
    return None


# ------------------------------------------------------------- classification


def classify(g: FiniteGpea) -> StructureFlags:
    """Global structural flags of a validated algebra."""
    g.require_validated()
    n = g.size
    op = g.op
    total = len(op) == n * n
    weakly_commutative = all((b, a) in op for (a, b) in op)
    commutative = weakly_commutative and all(op[(b, a)] == v for (a, b), v in op.items())
    order = g.order
    has_unit = order.maximum is not None
    up = order.up_masks
    down = order.down_masks
    upward_directed = all(up[a] & up[b] for a in range(n) for b in range(a + 1, n))
    downward_directed = all(down[a] & down[b] for a in range(n) for b in range(a + 1, n))
    return StructureFlags(
        total=total,
        weakly_commutative=weakly_commutative,
        commutative=commutative,
        has_unit=has_unit,
        upward_directed=upward_directed,
        downward_directed=downward_directed,
    )


# ------------------------------------------------------------------ PEA view


def pea_view(g: FiniteGpea) -> PeaView:
    """Unit and supplement maps, with every classical identity re-verified.

    Raises :class:`NoUnitError` when the order has no maximum.  On success
    the returned view has passed the full battery of supplement identities
    (double-supplement involution, the sum/supplement exchange laws, order
    reversal, existence criteria, and the subtraction formulas); any failure
    raises :class:`InvariantViolation` since these are theorems for every
    unital algebra.
    """
    g.require_validated()
    order = g.order
    unit = order.maximum
    if unit is None:
        raise NoUnitError("algebra has no top element")
    n = g.size
    op = g.op
    rs_list = []
    ls_list = []
    for a in range(n):
        r = g.left_subtraction(a, unit)
        l = g.right_subtraction(a, unit)
        if r is None or l is None:
            raise InvariantViolation(f"element {a} lacks a supplement")
        rs_list.append(r)
        ls_list.append(l)
    view = PeaView(unit=unit, right_supp=tuple(rs_list), left_supp=tuple(ls_list))
    _check_pea_identities(g, view)
    _check_subtraction_formulas(g, view)
    return view


def _check_pea_identities(g: FiniteGpea, view: PeaView) -> None:
    n = g.size
    op = g.op
    rs = view.right_supp
    ls = view.left_supp
    unit = view.unit
    le = g.le

    def fail(clause: str) -> None:
        raise InvariantViolation(f"unital identity failed: {clause}")

    if not (rs[0] == ls[0] == unit and rs[unit] == ls[unit] == 0):
        fail("supplements of 0 and unit")
    if sorted(rs) != list(range(n)) or sorted(ls) != list(range(n)):
        fail("supplement maps are not bijections")
    for a in range(n):
        if ls[rs[a]] != a or rs[ls[a]] != a:
            fail("double supplement is not the identity")

    # a+b == c  iff  ls(c)+a == ls(b)
    for (a, b), c in op.items():
        if op.get((ls[c], a)) != ls[b]:
            fail("sum/left-supplement exchange (forward)")
    for (x, a), v in op.items():
        # x = ls(c), v = ls(b)  =>  a + rs(v) must be rs(x)
        if op.get((a, rs[v])) != rs[x]:
            fail("sum/left-supplement exchange (reverse)")

    # a+rs(b) == rs(c)  iff  c+a == b
    for (a, x), y in op.items():
        # x = rs(b), y = rs(c): require c + a == b
        if op.get((ls[y], a)) != ls[x]:
            fail("sum/right-supplement exchange (forward)")
    for (c, a), b in op.items():
        if op.get((a, rs[b])) != rs[c]:
            fail("sum/right-supplement exchange (reverse)")

    # rs(a)+b == rs(c)  iff  ls(b) == c+rs(a)  iff  ls(ls(b))+c == a
    def s1(a: int, b: int, c: int) -> bool:
        return op.get((rs[a], b)) == rs[c]

    def s2(a: int, b: int, c: int) -> bool:
        return op.get((c, rs[a])) == ls[b]

    def s3(a: int, b: int, c: int) -> bool:
        return op.get((ls[ls[b]], c)) == a

    for (x, b), y in op.items():
        a, c = ls[x], ls[y]  # x = rs(a), y = rs(c)
        if not (s2(a, b, c) and s3(a, b, c)):
            fail("three-way supplement exchange (from first form)")
    for (c, x), v in op.items():
        a, b = ls[x], rs[v]  # x = rs(a), v = ls(b)
        if not (s1(a, b, c) and s3(a, b, c)):
            fail("three-way supplement exchange (from second form)")
    # invert the double-left-supplement bijection once for the third form
    dbl_left_inv = [0] * n
    for b in range(n):
        dbl_left_inv[ls[ls[b]]] = b
    for (w, c), a in op.items():
        b = dbl_left_inv[w]  # w = ls(ls(b))
        if not (s1(a, b, c) and s2(a, b, c)):
            fail("three-way supplement exchange (from third form)")

    # order reversal: a <= b implies rs(b) <= rs(a) and ls(b) <= ls(a);
    # applying it twice gives the converse, so one sweep checks the iff.
    for a, b in g.order.pairs:
        if not (le(rs[b], rs[a]) and le(ls[b], ls[a])):
            fail("supplements do not reverse the order")

    # existence criterion: a+b defined iff b <= rs(a) iff a <= ls(b)
    for a in range(n):
        for b in range(n):
            d = (a, b) in op
            if d != le(b, rs[a]) or d != le(a, ls[b]):
                fail("existence criterion via supplements")


def _check_subtraction_formulas(g: FiniteGpea, view: PeaView) -> None:
    op = g.op
    rs = view.right_supp
    ls = view.left_supp
    le = g.le
    n = g.size

    def fail(clause: str) -> None:
        raise InvariantViolation(f"subtraction formula failed: {clause}")

    for a, b in g.order.pairs:
        # b minus a from the right is ls(a + rs(b)); from the left rs(ls(b) + a)
        s = op.get((a, rs[b]))
        if s is None or g.right_subtraction(a, b) != ls[s]:
            fail("right subtraction via supplements")
        t = op.get((ls[b], a))
        if t is None or g.left_subtraction(a, b) != rs[t]:
            fail("left subtraction via supplements")
    for a in range(n):
        for b in range(n):
            bb = ls[ls[b]]
            if le(bb, a):
                s = op.get((rs[a], b))
                if s is None or g.left_subtraction(bb, a) != ls[s]:
                    fail("double-left-supplement left subtraction")
            if le(b, rs[a]):
                if not le(a, ls[b]):
                    fail("existence transfer between supplement bounds")
                s = op.get((ls[ls[b]], a))
                if s is None or g.right_subtraction(b, rs[a]) != rs[s]:
                    fail("supplement right subtraction (first form)")
                t = op.get((a, b))
                if t is None or g.right_subtraction(a, ls[b]) != ls[t]:
                    fail("supplement right subtraction (second form)")


# ----------------------------------------------------------------- morphisms


def find_morphisms(p: FiniteGpea, q: FiniteGpea, mode: str = "iso") -> list[tuple[int, ...]]:
    """All structure isomorphisms ``p -> q`` as image tuples, sorted.

    Modes: ``"iso"`` — bijections transferring existence both ways and
    preserving sums; ``"auto"`` — isomorphisms ``p -> p``; ``"pea_iso"`` —
    isomorphisms additionally required to map unit to unit (both algebras
    must be unital).  Returns the empty list when none exist.
    """
    if mode not in ("iso", "auto", "pea_iso"):
        raise ValueError(f"unknown morphism mode {mode!r}")
    if mode == "auto":
        q = p
    p.require_validated()
    q.require_validated()
    if p.size != q.size:
        return []
    n = p.size
    if mode == "pea_iso":
        pu = p.order.maximum
        qu = q.order.maximum
        if pu is None or qu is None:
            raise NoUnitError("pea_iso mode requires unital algebras")

    p_op = p.op
    q_op = q.op
    results: list[tuple[int, ...]] = []
    phi: list[int | None] = [None] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True
    if mode == "pea_iso" and pu != 0:
        if used[qu]:  # unit of q is 0 but unit of p is not: sizes disagree
            return []
        phi[pu] = qu
        used[qu] = True

    # Elements in decreasing connectivity order make the pruning bite early.
    weight = [0] * n
    for (a, b) in p_op:
        weight[a] += 1
        weight[b] += 1
    todo = sorted((x for x in range(n) if phi[x] is None), key=lambda x: -weight[x])

    def consistent(a: int, b: int) -> bool:
        fa, fb = phi[a], phi[b]
        s = p_op.get((a, b))
        t = q_op.get((fa, fb))
        if (s is None) != (t is None):
            return False
        if s is not None and phi[s] is not None and phi[s] != t:
            return False
        return True

    def extend(k: int) -> None:
        if k == len(todo):
            img = tuple(phi)  # fully assigned
            if is_isomorphism(p, q, img):
                results.append(img)
            return
        x = todo[k]
        for w in range(n):
            if used[w]:
                continue
            phi[x] = w
            used[w] = True
            ok = True
            for y in range(n):
                if phi[y] is None:
                    continue
                if not (consistent(x, y) and consistent(y, x)):
                    ok = False
                    break
            if ok:
                extend(k + 1)
            phi[x] = None
            used[w] = False

    extend(0)
    return sorted(results)


def is_isomorphism(p: FiniteGpea, q: FiniteGpea, phi: tuple[int, ...]) -> bool:
    """Whether the image tuple ``phi`` transfers definedness and sums exactly."""
    for a in range(p.size):
        for b in range(p.size):
            s = p.op.get((a, b))
            t = q.op.get((phi[a], phi[b]))
            if (s is None) != (t is None):
                return False
            if s is not None and phi[s] != t:
                return False
    return True
