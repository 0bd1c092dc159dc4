"""Kites: coordinatewise powers of a base algebra with a mirrored top half.

Given a base algebra ``P``, a finite index set, and two bijections
``lam`` and ``rho`` on the indices, the *kite* lives on two copies of
the power ``P^I``: the tuples themselves, and a mirror copy written
``η(...)``.  Sums follow four clauses:

* two tuples add coordinatewise when every coordinate sum is defined;
* ``(a_i) + (η b_i)`` is defined iff ``a_{lam(i)} <= b_i`` everywhere
  and equals ``(η c_i)`` where ``c_i + a_{lam(i)} = b_i``;
* ``(η a_i) + (b_i)`` is defined iff ``b_{rho(i)} <= a_i`` everywhere
  and equals ``(η c_i)`` where ``b_{rho(i)} + c_i = a_i``;
* two mirror elements never add.

The mirror of the zero tuple is the unit.  The construction succeeds
exactly when the *transfer condition* holds — for all tuples and every
index ``i``, ``a_{rho(i)} + b_i`` is defined iff ``b_i + a_{lam(i)}``
is.  Quantified over all tuples, that condition collapses pointwise: at
an index where the two bijections agree it says the base is weakly
commutative, and at an index where they differ it forces the base to be
total (a sum with an arbitrary partner can only transfer if every sum
exists).  The mirror-image variant of the condition collapses to the
same pointwise facts, so the two verdicts always coincide on finite
tables.

When the transfer condition holds, reindexing tuples by
``rho ∘ lam⁻¹`` is a unitizing automorphism of the power, the kite is
isomorphic to the resulting unit extension by a unique isomorphism
fixing every tuple, and the supplement maps on the kite are given by
reindexing: ``(a_i)⁻ = (η a_{rho(i)})``, ``(a_i)~ = (η a_{lam(i)})``,
``(η a_i)⁻ = (a_{lam⁻¹(i)})``, ``(η a_i)~ = (a_{rho⁻¹(i)})``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import (
    BudgetExceededError,
    FiniteGpea,
    InvalidAlgebraError,
    InvariantViolation,
    MalformedTableError,
    element_budget,
    is_isomorphism,
)
from .ideals import classify_subset, smallest_normal_riesz_ideal
from .rdp import rdp_profile
from .unitization import UnitizationAlgebra, gamma_unitize, is_unitizing

__all__ = [
    "KiteSpec",
    "PowerGpea",
    "KcVerdict",
    "KiteAlgebra",
    "KiteIsoReport",
    "ConnectivityReport",
    "power_gpea",
    "check_kc",
    "kite_gamma",
    "build_kite",
    "kite_iso",
    "index_connectivity",
]


def _check_index_permutation(perm: tuple[int, ...], k: int, label: str) -> None:
    if sorted(perm) != list(range(k)):
        raise MalformedTableError(f"{label} must be a permutation of 0..{k - 1}")


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class KiteSpec:
    """A base algebra with an index count and two index bijections."""

    base: FiniteGpea
    index_size: int
    lam: tuple[int, ...]
    rho: tuple[int, ...]

    def __post_init__(self) -> None:
        self.base.require_validated()
        if self.index_size < 1:
            raise MalformedTableError("index set must be nonempty")
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "rho", tuple(self.rho))
        _check_index_permutation(self.lam, self.index_size, "lam")
        _check_index_permutation(self.rho, self.index_size, "rho")

    @property
    def twist_indices(self) -> tuple[int, ...]:
        """The index map ``i -> rho(lam⁻¹(i))`` that realizes the twist."""
        lam_inv = _inverse(self.lam)
        return tuple(self.rho[lam_inv[i]] for i in range(self.index_size))


@dataclass(frozen=True)
class PowerGpea:
    """The coordinatewise power of a base algebra.

    Tuples are numbered in row-major order (last coordinate varies
    fastest), so index 0 is the all-zero tuple.
    """

    base: FiniteGpea
    index_size: int
    algebra: FiniteGpea
    tuples: tuple[tuple[int, ...], ...]

    def index_of(self, t: tuple[int, ...]) -> int:
        n = self.base.size
        idx = 0
        for x in t:
            idx = idx * n + x
        return idx

    def reindexing_permutation(self, sigma: tuple[int, ...]) -> tuple[int, ...]:
        """Carrier permutation sending each tuple ``a`` to ``(a[sigma[i]])_i``."""
        return tuple(
            self.index_of(tuple(t[sigma[i]] for i in range(self.index_size)))
            for t in self.tuples
        )


def power_gpea(p: FiniteGpea, k: int) -> PowerGpea:
    """Build ``p^k`` with the coordinatewise partial operation."""
    p.require_validated()
    if k < 1:
        raise MalformedTableError("index set must be nonempty")
    size = p.size**k
    if size > element_budget():
        raise BudgetExceededError(
            f"power carrier of {size} elements exceeds the budget of {element_budget()}"
        )
    tuples = tuple(itertools.product(range(p.size), repeat=k))
    op: dict[tuple[int, int], int] = {}
    for s, a in enumerate(tuples):
        for t, b in enumerate(tuples):
            total = 0
            for x, y in zip(a, b):
                v = p.value(x, y)
                if v is None:
                    break
                total = total * p.size + v
            else:
                op[(s, t)] = total
    names = ["(" + ",".join(p.name(x) for x in t) + ")" for t in tuples]
    algebra = FiniteGpea(size, op, names).validate()
    power = PowerGpea(base=p, index_size=k, algebra=algebra, tuples=tuples)
    if (
        algebra.flags.total != p.flags.total
        or algebra.flags.weakly_commutative != p.flags.weakly_commutative
    ):
        raise InvariantViolation(
            "power must be total / weakly commutative exactly when the base is"
        )
    return power


@dataclass(frozen=True)
class KcVerdict:
    """Verdicts of the two transfer conditions on a kite specification."""

    kci: bool
    kcii: bool


def check_kc(spec: KiteSpec) -> KcVerdict:
    """Evaluate both transfer conditions over all tuple pairs and indices.

    The quantifier over tuples touches only the coordinate values at the
    three positions an index names, so the check runs over those values
    directly: weak commutativity of the base where the bijections agree,
    totality where they differ (see the module docstring).
    """
    flags = spec.base.flags
    verdicts = []
    for first, second in ((spec.rho, spec.lam), (spec.lam, spec.rho)):
        ok = all(
            flags.weakly_commutative if first[i] == second[i] else flags.total
            for i in range(spec.index_size)
        )
        verdicts.append(ok)
    if flags.total and verdicts != [True, True]:
        raise InvariantViolation("a total base must satisfy both transfer conditions")
    return KcVerdict(kci=verdicts[0], kcii=verdicts[1])


def kite_gamma(spec: KiteSpec) -> tuple[int, ...]:
    """The tuple-reindexing permutation of the power induced by the twist.

    Also cross-checks the characterization: the permutation is a
    unitizing automorphism of the power exactly when the first transfer
    condition holds.
    """
    power = power_gpea(spec.base, spec.index_size)
    return _kite_gamma_on(power, spec)


def _kite_gamma_on(power: PowerGpea, spec: KiteSpec) -> tuple[int, ...]:
    gamma = power.reindexing_permutation(spec.twist_indices)
    if is_unitizing(power.algebra, gamma) != check_kc(spec).kci:
        raise InvariantViolation(
            "twist permutation is unitizing exactly when the transfer condition holds"
        )
    return gamma


@dataclass(frozen=True)
class KiteAlgebra:
    """A built kite: the specification, the power, the twist, the table.

    Layout: tuple ``t`` of the power keeps its index, its mirror is
    ``t + m`` where ``m`` is the power size; the zero tuple is 0 and the
    unit is the mirror of zero, index ``m``.
    """

    spec: KiteSpec
    power: PowerGpea
    gamma: tuple[int, ...]
    algebra: FiniteGpea

    @property
    def m(self) -> int:
        return self.power.algebra.size

    @property
    def unit(self) -> int:
        return self.m

    def eta(self, t: int) -> int:
        return t + self.m


def build_kite(spec: KiteSpec) -> KiteAlgebra:
    """Construct the kite table from the four clauses and validate it."""
    kc = check_kc(spec)
    if not kc.kci:
        raise MalformedTableError(
            "kite construction requires the transfer condition on (rho, lam)"
        )
    m = spec.base.size**spec.index_size
    if 2 * m > element_budget():
        raise BudgetExceededError(
            f"kite carrier of {2 * m} elements exceeds the budget of {element_budget()}"
        )
    power = power_gpea(spec.base, spec.index_size)
    gamma = _kite_gamma_on(power, spec)
    p = spec.base
    k = spec.index_size
    op: dict[tuple[int, int], int] = dict(power.algebra.op)
    for s, a in enumerate(power.tuples):
        for t, b in enumerate(power.tuples):
            mixed = []
            for i in range(k):
                x, y = a[spec.lam[i]], b[i]
                if not p.le(x, y):
                    break
                mixed.append(p.right_subtraction(x, y))
            else:
                op[(s, t + m)] = power.index_of(tuple(mixed)) + m
            mixed = []
            for i in range(k):
                x, y = b[spec.rho[i]], a[i]
                if not p.le(x, y):
                    break
                mixed.append(p.left_subtraction(x, y))
            else:
                op[(s + m, t)] = power.index_of(tuple(mixed)) + m
    names = [power.algebra.name(t) for t in range(m)]
    names += ["η" + power.algebra.name(t) for t in range(m)]
    try:
        algebra = FiniteGpea(2 * m, op, names).validate()
    except InvalidAlgebraError as exc:
        raise InvariantViolation(f"kite table fails the axioms: {exc}") from exc
    if not algebra.flags.has_unit or algebra.pea.unit != m:
        raise InvariantViolation("kite unit must be the mirror of the zero tuple")
    return KiteAlgebra(spec=spec, power=power, gamma=gamma, algebra=algebra)


@dataclass(frozen=True)
class KiteIsoReport:
    """The canonical isomorphism from the unit extension onto the kite.

    ``phi`` fixes every tuple of the power and sends the mirror of ``a``
    to the mirror of ``a`` reindexed by ``lam``.  Construction verifies
    that ``phi`` transfers sums both ways, that no other sum-preserving
    unit-preserving map fixes the power pointwise, and that the
    supplement maps on the kite follow the reindexing formulas, with the
    double left supplement equal to the twist.  ``searched_exhaustively``
    tells whether uniqueness was confirmed by enumerating candidate maps
    (small carriers) or by the forcing argument ("the partner of ``a``
    summing to the unit is unique").
    """

    extension: UnitizationAlgebra
    kite: KiteAlgebra
    phi: tuple[int, ...]
    searched_exhaustively: bool


def _candidate_maps(
    u: FiniteGpea, kite: FiniteGpea, m: int
) -> Iterator[tuple[int, ...]]:
    """All unit/zero-preserving sum-preserving maps fixing the first half.

    Any such map must send the mirror of ``t`` to a partner ``y`` with
    ``t + y`` equal to the kite's unit, because that sum is defined in
    the extension and must be preserved.  Candidates are enumerated from
    those partner sets and filtered by the full one-way sum check.
    """
    unit = m
    pools = [
        [y for y in kite.elements if kite.value(t, y) == unit] for t in range(m)
    ]
    for choice in itertools.product(*pools):
        psi = tuple(range(m)) + choice
        ok = True
        for (a, b), s in u.op.items():
            target = kite.value(psi[a], psi[b])
            if target is None or target != psi[s]:
                ok = False
                break
        if ok:
            yield psi


def kite_iso(spec: KiteSpec) -> KiteIsoReport:
    """Build both sides, exhibit the canonical isomorphism, verify its laws."""
    kite = build_kite(spec)
    extension = gamma_unitize(kite.power.algebra, kite.gamma)
    m = kite.m
    power = kite.power
    lam, rho = spec.lam, spec.rho
    lam_inv, rho_inv = _inverse(lam), _inverse(rho)

    def reindexed(t: int, sigma: tuple[int, ...]) -> int:
        tup = power.tuples[t]
        return power.index_of(tuple(tup[sigma[i]] for i in range(spec.index_size)))

    phi = tuple(range(m)) + tuple(reindexed(t, lam) + m for t in range(m))
    if sorted(phi) != list(range(2 * m)) or not is_isomorphism(
        extension.algebra, kite.algebra, phi
    ):
        raise InvariantViolation(
            "canonical map is not an isomorphism onto the kite"
        )

    small = 2 * m <= 64
    if small:
        found = list(
            itertools.islice(_candidate_maps(extension.algebra, kite.algebra, m), 3)
        )
        if found != [phi]:
            raise InvariantViolation(
                "identity-fixing sum-preserving map onto the kite is not unique"
            )
    else:
        for t in range(m):
            partners = [
                y for y in kite.algebra.elements if kite.algebra.value(t, y) == m
            ]
            if partners != [phi[t + m]]:
                raise InvariantViolation(
                    "unit partner in the kite is not uniquely the canonical image"
                )

    view = kite.algebra.pea
    for t in range(m):
        if view.left_supp[t] != reindexed(t, rho) + m:
            raise InvariantViolation(
                f"left supplement of tuple {t} is not its rho-reindexed mirror"
            )
        if view.right_supp[t] != reindexed(t, lam) + m:
            raise InvariantViolation(
                f"right supplement of tuple {t} is not its lam-reindexed mirror"
            )
        if view.left_supp[t + m] != reindexed(t, lam_inv):
            raise InvariantViolation(
                f"left supplement of mirror {t + m} breaks the reindexing formula"
            )
        if view.right_supp[t + m] != reindexed(t, rho_inv):
            raise InvariantViolation(
                f"right supplement of mirror {t + m} breaks the reindexing formula"
            )
        if view.ll(t) != kite.gamma[t]:
            raise InvariantViolation(
                f"double left supplement of tuple {t} differs from the twist"
            )
    return KiteIsoReport(
        extension=extension, kite=kite, phi=phi, searched_exhaustively=small
    )


@dataclass(frozen=True)
class ConnectivityReport:
    """Orbit structure of the index set under the twist, with consequences.

    ``components`` are the orbits of ``i -> rho(lam⁻¹(i))``; the index
    set is connected when there is exactly one.  For every pair of
    distinct components the tuples supported on each form twist-closed
    normal ideals of the power that meet only in zero (verified during
    construction).  When the kite exists within budget: ``kite_rdp1``
    reports its refinement property, ``kite_smallest`` /
    ``kite_smallest_proper`` the smallest nontrivial normal Riesz ideal
    of the kite under the improper-included and proper-only readings,
    and ``implication_checked`` whether the consequence "a smallest
    ideal forces a connected index set" was armed (upward-directed base,
    transfer condition, refinement property) — in which case a violation
    would have raised.
    """

    components: tuple[frozenset[int], ...]
    connected: bool
    pairs_verified: int
    kite_rdp1: bool | None
    kite_smallest: frozenset[int] | None
    kite_smallest_proper: frozenset[int] | None
    implication_checked: bool


def index_connectivity(spec: KiteSpec) -> ConnectivityReport:
    """Partition the index set into twist orbits and verify the consequences."""
    sigma = spec.twist_indices
    seen: set[int] = set()
    components: list[frozenset[int]] = []
    for start in range(spec.index_size):
        if start in seen:
            continue
        orbit = {start}
        cursor = sigma[start]
        while cursor not in orbit:
            orbit.add(cursor)
            cursor = sigma[cursor]
        seen |= orbit
        components.append(frozenset(orbit))
    components.sort(key=min)

    power = power_gpea(spec.base, spec.index_size)
    gamma = _kite_gamma_on(power, spec)
    supported = []
    for comp in components:
        members = frozenset(
            t
            for t, tup in enumerate(power.tuples)
            if all(x == 0 for i, x in enumerate(tup) if i not in comp)
        )
        supported.append(members)
    pairs = 0
    for a in range(len(components)):
        for b in range(a + 1, len(components)):
            for members in (supported[a], supported[b]):
                flags = classify_subset(power.algebra, members, gamma)
                if not (flags.ideal and flags.normal and flags.gamma_closed):
                    raise InvariantViolation(
                        "component support is not a twist-closed normal ideal"
                    )
            if supported[a] & supported[b] != {0}:
                raise InvariantViolation(
                    "supports of distinct components must meet only in zero"
                )
            pairs += 1

    connected = len(components) == 1
    kite_rdp1: bool | None = None
    smallest: frozenset[int] | None = None
    smallest_proper: frozenset[int] | None = None
    implication_checked = False
    if check_kc(spec).kci and 2 * power.algebra.size <= element_budget():
        kite = build_kite(spec)
        kite_rdp1 = rdp_profile(kite.algebra).rdp1
        smallest = smallest_normal_riesz_ideal(kite.algebra)
        smallest_proper = smallest_normal_riesz_ideal(
            kite.algebra, include_improper=False
        )
        if spec.base.flags.upward_directed and kite_rdp1:
            implication_checked = True
            if smallest is not None and not connected:
                raise InvariantViolation(
                    "kite has a smallest nontrivial normal Riesz ideal "
                    "but the index set is disconnected"
                )
    return ConnectivityReport(
        components=tuple(components),
        connected=connected,
        pairs_verified=pairs,
        kite_rdp1=kite_rdp1,
        kite_smallest=smallest,
        kite_smallest_proper=smallest_proper,
        implication_checked=implication_checked,
    )
