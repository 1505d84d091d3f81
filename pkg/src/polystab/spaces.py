"""Homology of polynomial-tuple and rational-map spaces assembled from the cell model.

The space of m-tuples of monic degree-d polynomials with no common root of
multiplicity >= n splits stably into summands indexed by k = 1..floor(d/n):
the k-th is the double suspension summand D_k shifted up by 2(mn-2)k.  The
based rational-map spaces (tuples with no common root at all) split the same
way with k running to d and shift 2(N-2)k.  Everything here is bookkeeping
over :func:`polystab.braid.dk_homology`, plus the first-page tables of the
associated spectral sequences and the Poincare series of the limiting double
loop space.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import AbelianGroup, GradedAbelianGroup
from .braid import DEFAULT_K_MAX, SIGN, config_homology, dk_homology
from .cache import HomologyCache
from .rings import Ring, Z

MN2_NOTE = "mn=2: identification with the limit space is stable/homology-level only"


@dataclass(frozen=True)
class Params:
    """Degree d, tuple length m, multiplicity bound n; (m, n) = (1, 1) is excluded."""

    d: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.m < 1 or self.n < 1:
            raise ValueError("d, m, n must all be positive")
        if (self.m, self.n) == (1, 1):
            raise ValueError("(m, n) = (1, 1) is excluded")

    @property
    def mn(self) -> int:
        return self.m * self.n

    @property
    def top_summand(self) -> int:
        return self.d // self.n


@dataclass(frozen=True)
class HomologyTable:
    """A graded homology answer with its ring, truncation, and metadata notes.

    ``truncation`` is None for complete tables (zero above the top recorded
    degree by contract) and the last exact degree otherwise.
    """

    groups: GradedAbelianGroup
    ring: Ring
    truncation: int | None = None
    notes: tuple[str, ...] = ()

    @property
    def is_complete(self) -> bool:
        return self.truncation is None

    def dims(self, through: int) -> list[int]:
        if self.truncation is not None and through > self.truncation:
            raise ValueError(
                f"table is only exact through degree {self.truncation}, asked for {through}"
            )
        return self.groups.dims(through)

    def same_groups(self, other: "HomologyTable") -> bool:
        return self.groups == other.groups


@dataclass(frozen=True)
class PoincareSeries:
    """Coefficients of a homology Poincare series, exact through ``truncation``."""

    coefficients: tuple[int, ...]
    truncation: int

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.truncation + 1:
            raise ValueError("need one coefficient per degree 0..truncation")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("series coefficients are dimensions, hence nonnegative")

    def __getitem__(self, degree: int) -> int:
        if not 0 <= degree <= self.truncation:
            raise IndexError(f"degree {degree} outside exact range 0..{self.truncation}")
        return self.coefficients[degree]


def stability_dimension(d: int, m: int, n: int) -> int:
    """The dimension (2mn-3)(floor(d/n)+1)-1 through which the limit map is an equivalence."""
    p = Params(d, m, n)
    if p.mn < 2:
        raise ValueError("need mn >= 2")
    return (2 * p.mn - 3) * (p.top_summand + 1) - 1


def bundle_rank_poly(d: int, m: int, n: int, k: int) -> int:
    """Rank 2m(d-nk)+k-1 of the affine stratum bundle over C_k for the tuple space."""
    p = Params(d, m, n)
    if not 1 <= k <= p.top_summand:
        raise ValueError(f"k={k} outside 1..{p.top_summand}")
    return 2 * m * (d - n * k) + k - 1


def bundle_rank_hol(d: int, N: int, k: int) -> int:
    """Rank 2N(d-k)+k-1 of the corresponding stratum bundle for the rational-map space."""
    if N < 2:
        raise ValueError("need N >= 2")
    if not 1 <= k <= d:
        raise ValueError(f"k={k} outside 1..{d}")
    return 2 * N * (d - k) + k - 1


def _point_table(ring: Ring, notes: tuple[str, ...] = ()) -> HomologyTable:
    return HomologyTable(GradedAbelianGroup({0: AbelianGroup(1)}), ring, None, notes)


def _split_table(
    top: int,
    shift_per_k: int,
    ring: Ring,
    notes: tuple[str, ...],
    k_max: int,
    cache: HomologyCache | None,
) -> HomologyTable:
    if top > k_max:
        raise ValueError(
            f"needs summands up to k={top}, beyond the configured bound {k_max}"
        )
    total = GradedAbelianGroup({0: AbelianGroup(1)})
    for k in range(1, top + 1):
        total = total.direct_sum(
            dk_homology(k, ring, k_max=k_max, cache=cache).shift(shift_per_k * k)
        )
    return HomologyTable(total, ring, None, notes)


def poly_homology(
    d: int,
    m: int,
    n: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> HomologyTable:
    """Complete homology of the space of m-tuples of monic degree-d polynomials
    with no common root of multiplicity >= n.

    For d < n the space is an affine cell, so the table is a point's.  The
    k-th stable summand contributes nothing below degree (2mn-3)k, which makes
    the finite sum complete in every degree.
    """
    p = Params(d, m, n)
    notes = (MN2_NOTE,) if p.mn == 2 else ()
    if d < n:
        return _point_table(ring, notes)
    return _split_table(p.top_summand, 2 * (p.mn - 2), ring, notes, k_max, cache)


def hol_homology(
    d: int,
    N: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> HomologyTable:
    """Complete homology of the degree-d based rational-map space into CP^{N-1}."""
    if N < 2:
        raise ValueError("need N >= 2")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return _point_table(ring)
    return _split_table(d, 2 * (N - 2), ring, (), k_max, cache)


@dataclass(frozen=True)
class PolyHolReport:
    """Result of comparing the two assembly routes degree by degree."""

    d: int
    m: int
    n: int
    ring: Ring
    equal: bool
    left: HomologyTable
    right: HomologyTable


def poly_hol_check(
    d: int,
    m: int,
    n: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> PolyHolReport:
    """Compare the tuple-space table against the rational-map table at
    (floor(d/n), mn); the shared splitting makes these identical, so this is a
    wiring regression check."""
    p = Params(d, m, n)
    left = poly_homology(d, m, n, ring, k_max=k_max, cache=cache)
    right = hol_homology(p.top_summand, p.mn, ring, k_max=k_max, cache=cache)
    return PolyHolReport(d, m, n, ring, left.same_groups(right), left, right)


@dataclass(frozen=True)
class E1Page:
    """First page of the discriminant spectral sequence, stored sparsely.

    Nonzero entries sit at (0, 0) and in columns 1 <= k <= k_top, where the
    entry at (k, s) is sign-twisted configuration homology in degree
    s - twist*k; that degree lives in 0..k-1, so each column is finite.
    """

    flavor: str
    ring: Ring
    k_top: int
    twist: int  # 2(mn-1) for the tuple flavor, 2(N-1) for the rational-map flavor
    params: tuple[tuple[str, int], ...]
    entries: dict[tuple[int, int], AbelianGroup] = field(repr=False)

    def entry(self, k: int, s: int) -> AbelianGroup:
        return self.entries.get((k, s), AbelianGroup())

    def in_support(self, k: int, s: int) -> bool:
        if (k, s) == (0, 0):
            return True
        return 1 <= k <= self.k_top and s >= self.twist * k

    def antidiagonal_dim(self, total_degree: int) -> int:
        """Total dimension in total degree j = s - k (field coefficients only)."""
        if not self.ring.is_field:
            raise ValueError("antidiagonal dimensions need field coefficients")
        return sum(
            g.free_rank for (k, s), g in self.entries.items() if s - k == total_degree
        )

    def nonzero_cells(self) -> list[tuple[int, int]]:
        return sorted(self.entries)


def _build_e1(
    flavor: str,
    k_top: int,
    twist: int,
    params: tuple[tuple[str, int], ...],
    ring: Ring,
    k_max: int,
    cache: HomologyCache | None,
) -> E1Page:
    if k_top > k_max:
        raise ValueError(
            f"first-page columns run to k={k_top}, beyond the configured bound {k_max}"
        )
    entries: dict[tuple[int, int], AbelianGroup] = {(0, 0): AbelianGroup(1)}
    for k in range(1, k_top + 1):
        column = config_homology(k, SIGN, ring, k_max=k_max, cache=cache)
        for i in column.degrees():
            entries[(k, twist * k + i)] = column.group(i)
    return E1Page(flavor, ring, k_top, twist, params, entries)


def e1_page_poly(
    d: int,
    m: int,
    n: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> E1Page:
    """First page converging to the tuple-space homology: columns 1..floor(d/n),
    entry (k, s) the sign-twisted homology of C_k in degree s - 2(mn-1)k."""
    p = Params(d, m, n)
    params = (("d", d), ("m", m), ("n", n))
    return _build_e1("poly", p.top_summand, 2 * (p.mn - 1), params, ring, k_max, cache)


def e1_page_hol(
    d: int,
    N: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> E1Page:
    """First page for the rational-map space: columns 1..d, twist 2(N-1)."""
    if N < 2:
        raise ValueError("need N >= 2")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    params = (("d", d), ("N", N))
    return _build_e1("hol", d, 2 * (N - 1), params, ring, k_max, cache)


def omega_series(
    N: int,
    ring: Ring,
    through: int,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> PoincareSeries:
    """Poincare series of the double loop space of S^{2N-1} through ``through``.

    Degree j collects dim of the shifted summand D_k over all k >= 0; summand
    k starts in degree (2N-3)k, so the request is exact precisely when every
    k <= through/(2N-3) is inside the configured bound; larger requests are
    refused rather than silently truncated.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    if not ring.is_field:
        raise ValueError("series dimensions need field coefficients (Q or F_p)")
    if through < 0:
        raise ValueError("through must be nonnegative")
    bound = (2 * N - 3) * (k_max + 1) - 1
    if through > bound:
        raise ValueError(
            f"through={through} exceeds the exactness bound {bound} for k_max={k_max}; "
            f"raise k_max to at least {through // (2 * N - 3)}"
        )
    coeffs = [0] * (through + 1)
    coeffs[0] = 1
    shift = 2 * (N - 2)
    for k in range(1, through // (2 * N - 3) + 1):
        part = dk_homology(k, ring, k_max=k_max, cache=cache, through=through - shift * k)
        for q in part.degrees():
            j = q + shift * k
            if j <= through:
                coeffs[j] += part.free_rank(q)
    return PoincareSeries(tuple(coeffs), through)


@dataclass(frozen=True)
class StableRangeReport:
    """Outcome of the stable-range and plateau checks for one parameter triple."""

    d: int
    m: int
    n: int
    ring: Ring
    dimension_bound: int
    agrees_through_bound: bool
    first_possible_deviation: int
    deviation_identity_holds: bool
    plateau_applicable: bool
    plateau_holds: bool

    @property
    def passed(self) -> bool:
        return (
            self.agrees_through_bound
            and self.deviation_identity_holds
            and (self.plateau_holds or not self.plateau_applicable)
        )


def stable_range_check(
    d: int,
    m: int,
    n: int,
    ring: Ring,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
) -> StableRangeReport:
    """Verify the finite table matches the limit series through the stability
    dimension, that the first degree where they could part is one past it, and
    that bumping d without moving floor(d/n) leaves the table unchanged."""
    if not ring.is_field:
        raise ValueError("the range comparison is dimension-wise; use Q or F_p")
    p = Params(d, m, n)
    bound = stability_dimension(d, m, n)
    table = poly_homology(d, m, n, ring, k_max=k_max, cache=cache)
    series = omega_series(p.mn, ring, bound, k_max=k_max, cache=cache)
    agrees = table.dims(bound) == list(series.coefficients)
    first_dev = (2 * p.mn - 3) * (p.top_summand + 1)
    plateau_applicable = (d + 1) // n == p.top_summand
    plateau_holds = True
    if plateau_applicable:
        plateau_holds = table.same_groups(
            poly_homology(d + 1, m, n, ring, k_max=k_max, cache=cache)
        )
    return StableRangeReport(
        d,
        m,
        n,
        ring,
        bound,
        agrees,
        first_dev,
        first_dev == bound + 1,
        plateau_applicable,
        plateau_holds,
    )
