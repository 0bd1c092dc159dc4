"""Built-in algebras, a text file format, infinite-example windows, enumeration.

The built-ins cover the standing examples: truncated chains, their
products, Boolean cubes, and the six-element commutative algebra whose
unit extension breaks the refinement property.

The file format ``gpea 1`` is line-oriented UTF-8: a ``gpea 1`` header,
``n <count>``, optional ``name <index> <token>`` lines, and ``op <i>
<j> <k>`` lines meaning ``i + j = k``.  ``#`` starts a comment,
unlisted pairs are undefined, and rows and columns of element 0 may be
omitted — they are implied by neutrality and added back by the parser,
which rejects any explicit entry contradicting them.

Two infinite examples are spot-checked through finite windows: the
integer triples under a parity-twisted addition, and the same carrier
under plain addition.  A window's operation is defined only when both
operands and the result stay inside the window, which deliberately
breaks closure — windows are therefore never validated and never enter
operations that require a validated algebra.

The enumerator produces every algebra on a small carrier up to
isomorphism, one canonical representative per class (the
lexicographically smallest table over relabelings fixing 0), by a
pruned depth-first search; a deliberately naive second method double
checks the counts at tiny sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import (
    BudgetExceededError,
    FiniteGpea,
    MalformedTableError,
    validate_axioms,
)

__all__ = [
    "ParseError",
    "WindowSpotCheck",
    "builtin",
    "fig1",
    "chain",
    "product",
    "boolean",
    "twisted_window",
    "enumerate_gpeas",
    "count_gpeas_naive",
    "parse",
    "serialize",
]


class ParseError(MalformedTableError):
    """A file failed to parse; carries a line number in the message."""


# ------------------------------------------------------------------ builtins


def chain(n: int) -> FiniteGpea:
    """Truncated-addition chain on ``{0..n}``: ``i + j`` defined iff ``<= n``.

    Element ``i`` is the integer ``i``.
    """
    if n < 0:
        raise MalformedTableError("chain length must be nonnegative")
    op = {
        (i, j): i + j
        for i in range(n + 1)
        for j in range(n + 1)
        if i + j <= n
    }
    return FiniteGpea(n + 1, op).validate()


def fig1() -> FiniteGpea:
    """The six-element commutative algebra 0, a, b, c, a+c, b+c.

    Elements are numbered 0..5 in that order; the only nonzero sums are
    ``a + c = c + a`` and ``b + c = c + b``.  Its operation is not
    total, the order is not upward directed (a and b have no common
    upper bound), yet it satisfies the refinement property — while its
    unit extension does not.
    """
    op = {(0, i): i for i in range(6)}
    op.update({(i, 0): i for i in range(6)})
    op.update({(1, 3): 4, (3, 1): 4, (2, 3): 5, (3, 2): 5})
    return FiniteGpea(6, op, ["0", "a", "b", "c", "a+c", "b+c"]).validate()


def product(g: FiniteGpea, h: FiniteGpea) -> FiniteGpea:
    """Direct product with the coordinatewise partial operation.

    Element ``(x, y)`` gets index ``x * h.size + y`` (first factor
    major); names combine the factor names as ``(x,y)``.
    """
    g.require_validated()
    h.require_validated()
    size = g.size * h.size
    op: dict[tuple[int, int], int] = {}
    for x1 in g.elements:
        for y1 in h.elements:
            for x2 in g.elements:
                for y2 in h.elements:
                    vx = g.value(x1, x2)
                    if vx is None:
                        continue
                    vy = h.value(y1, y2)
                    if vy is None:
                        continue
                    op[(x1 * h.size + y1, x2 * h.size + y2)] = vx * h.size + vy
    names = [
        f"({g.name(x)},{h.name(y)})" for x in g.elements for y in h.elements
    ]
    return FiniteGpea(size, op, names).validate()


def boolean(k: int) -> FiniteGpea:
    """The Boolean cube with ``2^k`` elements: the k-fold product of chain(1)."""
    if k < 1:
        raise MalformedTableError("boolean cube needs at least one factor")
    out = chain(1)
    for _ in range(k - 1):
        out = product(out, chain(1))
    return out


def builtin(text: str) -> FiniteGpea:
    """Resolve a builtin expression: ``fig1``, ``chain(n)``, ``boolean(k)``,
    or ``product(expr,expr)`` with arbitrary nesting."""
    expr = text.strip()

    def parse_expr(s: str, pos: int) -> tuple[FiniteGpea, int]:
        for name in ("fig1", "chain", "boolean", "product"):
            if s.startswith(name, pos):
                pos += len(name)
                break
        else:
            raise MalformedTableError(f"unknown builtin near {s[pos:pos + 12]!r}")
        if name == "fig1":
            return fig1(), pos
        if pos >= len(s) or s[pos] != "(":
            raise MalformedTableError(f"{name} requires parenthesized arguments")
        pos += 1
        if name in ("chain", "boolean"):
            end = pos
            while end < len(s) and (s[end].isdigit() or s[end] == "-"):
                end += 1
            if end == pos:
                raise MalformedTableError(f"{name} requires an integer argument")
            value = int(s[pos:end])
            if end >= len(s) or s[end] != ")":
                raise MalformedTableError(f"unclosed argument list for {name}")
            return (chain(value) if name == "chain" else boolean(value)), end + 1
        left, pos = parse_expr(s, pos)
        if pos >= len(s) or s[pos] != ",":
            raise MalformedTableError("product requires two comma-separated arguments")
        right, pos = parse_expr(s, pos + 1)
        if pos >= len(s) or s[pos] != ")":
            raise MalformedTableError("unclosed argument list for product")
        return product(left, right), pos + 1

    algebra, pos = parse_expr(expr.replace(" ", ""), 0)
    if pos != len(expr.replace(" ", "")):
        raise MalformedTableError(f"trailing input after builtin: {expr[pos:]!r}")
    return algebra


# ------------------------------------------------------ infinite-example windows

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class WindowSpotCheck:
    """A finite window into an infinite interval algebra.

    ``elements`` are triples ``(0, a, b)`` with ``0 <= a, b <= bound``
    and ``(1, c, d)`` with ``-bound <= c, d <= 0``; ``op`` holds the
    sums whose operands *and* result lie in the window.  Closure is
    intentionally broken, so ``not_axiom_verified`` is always true and
    a window must never be fed to operations expecting a validated
    algebra.  ``violations`` lists every in-window element whose
    computed supplements or double-supplement disagree with the closed
    formulas; ``state_violations`` lists in-window sums not respected
    by the first-coordinate valuation.
    """

    bound: int
    twisted: bool
    elements: tuple[Triple, ...]
    op: dict[tuple[Triple, Triple], Triple]
    violations: tuple[str, ...]
    state_violations: tuple[str, ...]
    not_axiom_verified: bool = True

    @property
    def passed(self) -> bool:
        return not self.violations and not self.state_violations


def twisted_window(n: int, twisted: bool = True) -> WindowSpotCheck:
    """Window of the integer-triples interval algebra, twisted or plain.

    The ambient group composes ``(a,b,c) + (x,y,z)`` to
    ``(a+x, b+y, c+z)``, except that the twisted variant swaps the last
    two coordinates of the first operand when ``x`` is odd.  The
    algebra is the interval from ``(0,0,0)`` to ``(1,0,0)``.  The spot
    check verifies, wherever every participant lies in the window:

    * right supplement of ``(0,b,c)`` is ``(1,-c,-b)`` twisted,
      ``(1,-b,-c)`` plain;
    * left supplement of ``(0,b,c)`` is ``(1,-b,-c)`` in both variants;
    * the double left supplement sends ``(0,a,b)`` to ``(0,b,a)``
      twisted and fixes it plain;
    * the first coordinate is additive over every defined sum.
    """
    if n < 1:
        raise MalformedTableError("window bound must be at least 1")
    base = [(0, a, b) for a in range(n + 1) for b in range(n + 1)]
    mirror = [(1, c, d) for c in range(-n, 1) for d in range(-n, 1)]
    elements = tuple(base + mirror)
    member = set(elements)
    unit = (1, 0, 0)

    def group_add(p: Triple, q: Triple) -> Triple:
        a, b, c = p
        x, y, z = q
        if twisted and x % 2:
            return (a + x, c + y, b + z)
        return (a + x, b + y, c + z)

    def interval_le(p: Triple, q: Triple) -> bool:
        return p[0] < q[0] or (p[0] == q[0] and p[1] <= q[1] and p[2] <= q[2])

    op: dict[tuple[Triple, Triple], Triple] = {}
    for p in elements:
        for q in elements:
            s = group_add(p, q)
            if s in member and interval_le(s, unit):
                op[(p, q)] = s

    def right_partners(p: Triple) -> list[Triple]:
        return [q for q in elements if op.get((p, q)) == unit]

    def left_partners(p: Triple) -> list[Triple]:
        return [q for q in elements if op.get((q, p)) == unit]

    violations: list[str] = []
    for a in range(n + 1):
        for b in range(n + 1):
            p = (0, a, b)
            expect_right = (1, -b, -a) if twisted else (1, -a, -b)
            expect_left = (1, -a, -b)
            if right_partners(p) != [expect_right]:
                violations.append(
                    f"right supplement of {p}: {right_partners(p)} != {expect_right}"
                )
            if left_partners(p) != [expect_left]:
                violations.append(
                    f"left supplement of {p}: {left_partners(p)} != {expect_left}"
                )
            lefts = left_partners(p)
            if len(lefts) == 1:
                second = left_partners(lefts[0])
                expect_double = (0, b, a) if twisted else p
                if second != [expect_double]:
                    violations.append(
                        f"double left supplement of {p}: {second} != {expect_double}"
                    )

    state_violations = [
        f"valuation not additive at {p} + {q} = {s}"
        for (p, q), s in op.items()
        if p[0] + q[0] != s[0]
    ]
    return WindowSpotCheck(
        bound=n,
        twisted=twisted,
        elements=elements,
        op=op,
        violations=tuple(violations),
        state_violations=tuple(state_violations),
    )


# ------------------------------------------------------------------ enumeration

ENUMERATION_LIMIT = 6


def _canonical_key(g: FiniteGpea) -> tuple[int, ...]:
    best = None
    for perm_rest in itertools.permutations(range(1, g.size)):
        perm = (0,) + perm_rest
        key = g.relabel(perm).table_key()
        if best is None or key < best:
            best = key
    return best


def _neutral_op(n: int) -> dict[tuple[int, int], int]:
    op = {(0, i): i for i in range(n)}
    op.update({(i, 0): i for i in range(n)})
    return op


def _search_tables(n: int) -> Iterator[FiniteGpea]:
    """Depth-first search over nonzero cells with local pruning.

    Prunes by positivity (no sum of nonzero elements is 0) and both
    cancellation laws (no repeated value in a row or column, counting
    the neutral entries); full axiom validation runs on each leaf.
    """
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    op = _neutral_op(n)
    row_used = [{i} for i in range(n)]
    col_used = [{j} for j in range(n)]

    def rec(k: int) -> Iterator[FiniteGpea]:
        if k == len(cells):
            g = FiniteGpea(n, dict(op))
            if validate_axioms(g).passed:
                yield g
            return
        i, j = cells[k]
        yield from rec(k + 1)
        for v in range(1, n):
            if v in row_used[i] or v in col_used[j]:
                continue
            op[(i, j)] = v
            row_used[i].add(v)
            col_used[j].add(v)
            yield from rec(k + 1)
            del op[(i, j)]
            row_used[i].remove(v)
            col_used[j].remove(v)

    return rec(0)


def enumerate_gpeas(
    size: int,
    total: bool | None = None,
    weakly_commutative: bool | None = None,
    has_unit: bool | None = None,
) -> list[FiniteGpea]:
    """All algebras on ``{0..size-1}`` up to isomorphism, canonical reps only.

    A table is kept when it equals the lexicographically smallest
    relabeling of itself (relabelings fix 0), so each isomorphism class
    contributes exactly one validated representative.  Optional keyword
    filters restrict by the structure flags.  Results are sorted by
    table key.
    """
    if size < 1:
        raise MalformedTableError("carrier must have at least the zero element")
    if size > ENUMERATION_LIMIT:
        raise BudgetExceededError(
            f"enumeration supports at most {ENUMERATION_LIMIT} elements"
        )
    out = []
    for g in _search_tables(size):
        if g.table_key() != _canonical_key(g):
            continue
        g = g.validate()
        flags = g.flags
        if total is not None and flags.total != total:
            continue
        if weakly_commutative is not None and flags.weakly_commutative != weakly_commutative:
            continue
        if has_unit is not None and flags.has_unit != has_unit:
            continue
        out.append(g)
    out.sort(key=FiniteGpea.table_key)
    return out


def count_gpeas_naive(size: int) -> int:
    """Isomorphism-class count by raw table enumeration — the cross-check.

    Enumerates every assignment of the nonzero cells (undefined or any
    value) with no pruning at all, filters by the axiom checker, and
    deduplicates by canonical key.  Exponential; intended for sizes up
    to 3.
    """
    if size < 1:
        raise MalformedTableError("carrier must have at least the zero element")
    if size > 4:
        raise BudgetExceededError("naive enumeration supports at most 4 elements")
    cells = [(i, j) for i in range(1, size) for j in range(1, size)]
    keys = set()
    for values in itertools.product([None, *range(size)], repeat=len(cells)):
        op = _neutral_op(size)
        op.update(
            {cell: v for cell, v in zip(cells, values) if v is not None}
        )
        g = FiniteGpea(size, op)
        if validate_axioms(g).passed:
            keys.add(_canonical_key(g))
    return len(keys)


# ------------------------------------------------------------------ file format


def serialize(g: FiniteGpea) -> str:
    """Render a validated algebra in the ``gpea 1`` format.

    Emits the header, the carrier size, any names differing from the
    default decimal labels, and the nonzero operation entries sorted by
    operand pair; entries implied by neutrality are omitted.
    """
    g.require_validated()
    lines = ["gpea 1", f"n {g.size}"]
    for i in g.elements:
        name = g.name(i)
        if name != str(i):
            if any(ch.isspace() for ch in name) or "#" in name:
                raise MalformedTableError(
                    f"name {name!r} cannot be serialized (whitespace or '#')"
                )
            lines.append(f"name {i} {name}")
    for (i, j), k in sorted(g.op.items()):
        if i != 0 and j != 0:
            lines.append(f"op {i} {j} {k}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> FiniteGpea:
    """Parse the ``gpea 1`` format into an unvalidated algebra.

    Neutral entries are implied and added automatically; an explicit
    entry contradicting them is rejected here, while every other axiom
    violation is left for the validator.  Errors carry the 1-based line
    number.
    """
    size: int | None = None
    names: dict[int, str] = {}
    op: dict[tuple[int, int], int] = {}
    explicit: dict[tuple[int, int], int] = {}

    def fail(line_no: int, message: str) -> None:
        raise ParseError(f"line {line_no}: {message}")

    lines = text.splitlines()
    if not lines or lines[0].split("#", 1)[0].strip() != "gpea 1":
        fail(1, "missing or malformed 'gpea 1' header")
    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        directive = fields[0]
        if directive == "n":
            if size is not None:
                fail(line_no, "duplicate 'n' directive")
            if len(fields) != 2 or not fields[1].isdigit():
                fail(line_no, "'n' requires one nonnegative integer")
            size = int(fields[1])
            if size < 1:
                fail(line_no, "carrier must have at least the zero element")
        elif directive == "name":
            if size is None:
                fail(line_no, "'name' before 'n'")
            if len(fields) != 3 or not fields[1].isdigit():
                fail(line_no, "'name' requires an index and a token")
            index = int(fields[1])
            if index >= size:
                fail(line_no, f"name index {index} out of range for n={size}")
            names[index] = fields[2]
        elif directive == "op":
            if size is None:
                fail(line_no, "'op' before 'n'")
            if len(fields) != 4 or not all(f.isdigit() for f in fields[1:]):
                fail(line_no, "'op' requires three nonnegative integers")
            i, j, k = (int(f) for f in fields[1:])
            if max(i, j, k) >= size:
                fail(line_no, f"op indices out of range for n={size}")
            if (i, j) in explicit and explicit[(i, j)] != k:
                fail(line_no, f"conflicting duplicate entry for {i} + {j}")
            if (i == 0 and k != j) or (j == 0 and k != i):
                fail(line_no, f"entry {i} + {j} = {k} contradicts neutrality of 0")
            explicit[(i, j)] = k
        else:
            fail(line_no, f"unknown directive {directive!r}")
    if size is None:
        raise ParseError("line 1: missing 'n' directive")
    op = _neutral_op(size)
    op.update(explicit)
    name_list = [names.get(i, str(i)) for i in range(size)]
    return FiniteGpea(size, op, name_list)
