"""Homology of unordered planar configuration spaces from a finite cell model.

Configurations of k unlabeled points in the plane are stratified by the
pattern of distinct real parts: reading the vertical lines left to right and
counting the points on each gives a composition (a_1, ..., a_r) of k.  The
stratum of a composition with r parts is an open cell of dimension k + r
(r real coordinates plus k ordered imaginary coordinates per line), and the
2^(k-1) cells together give the one-point compactification a CW structure, in
the style of Fox and Neuwirth.

The cellular boundary merges two adjacent columns.  Every order-preserving
interleaving (shuffle) of the two columns' points contributes one sheet of
the attaching map, and the orientation comparison of a sheet works out to
(-1)^(i+1) sign(shuffle) for a merge at position i.  A rank-one local system
twisted by the sign of the permutation monodromy re-labels the points across
a sheet by exactly the shuffle permutation, so it weights each sheet by a
second sign(shuffle) factor:

* trivial coefficients: merge coefficient (-1)^(i+1) * sum_shuffles sign(s);
* sign coefficients:    merge coefficient (-1)^(i+1) * (number of shuffles).

This complex computes Borel-Moore homology; the space is an open complex
manifold of real dimension 2k, so transposing the complex and regrading a
cell of dimension j into homological degree 2k - j computes ordinary
homology, with matching torsion.  That transposed complex is what
:func:`config_homology` reduces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .abelian import AbelianGroup, GradedAbelianGroup
from .cache import BraidHomologyKey, HomologyCache
from .complexes import ChainComplex, complex_homology
from .linalg import IntMatrix, rank_int_rows, rank_mod_p_rows
from .rings import Q, Ring, Z

TRIVIAL = "trivial"
SIGN = "sign"

DEFAULT_K_MAX = 10

_memo: dict[tuple[int, str], GradedAbelianGroup] = {}
_default_cache: HomologyCache | None = None


def set_default_cache(cache: HomologyCache | None) -> None:
    """Install (or remove) the process-wide persistent cache."""
    global _default_cache
    _default_cache = cache


def get_default_cache() -> HomologyCache | None:
    return _default_cache


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers; indexes one cell of the model."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(a < 1 for a in self.parts):
            raise ValueError("composition parts must be positive integers")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def cell_dimension(self) -> int:
        return self.size + self.num_parts


def _check_system(system: str) -> None:
    if system not in (TRIVIAL, SIGN):
        raise ValueError(f"unknown coefficient system {system!r}")


def _check_k(k: int, k_max: int) -> None:
    if not 1 <= k <= k_max:
        raise ValueError(f"k={k} outside the supported range 1..{k_max}")


@lru_cache(maxsize=None)
def _compositions_by_parts(k: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """All compositions of k, grouped by part count, in a fixed lexicographic order."""
    by_parts: dict[int, list[tuple[int, ...]]] = {r: [] for r in range(1, k + 1)}
    for r in range(1, k + 1):
        for cuts in combinations(range(1, k), r - 1):
            bounds = (0, *cuts, k)
            comp = tuple(bounds[i + 1] - bounds[i] for i in range(r))
            by_parts[r].append(comp)
    return {r: tuple(v) for r, v in by_parts.items()}


@lru_cache(maxsize=None)
def shuffle_sum(a: int, b: int, signed: bool) -> int:
    """Sum over order-preserving interleavings of blocks of sizes a and b.

    With ``signed`` each interleaving contributes the sign of its permutation;
    otherwise each contributes 1 (so the sum is just binomial(a+b, a)).
    """
    if a < 1 or b < 1:
        raise ValueError("block sizes must be positive")
    if not signed:
        return comb(a + b, a)
    total = 0
    for positions in combinations(range(a + b), a):
        inversions = sum(p - idx for idx, p in enumerate(positions))
        total += -1 if inversions % 2 else 1
    return total


@lru_cache(maxsize=None)
def _merge_table(
    k: int, system: str
) -> dict[tuple[int, ...], tuple[tuple[tuple[int, ...], int], ...]]:
    """Boundary of each cell: merged composition with its signed coefficient."""
    signed = system == TRIVIAL
    table = {}
    for comps in _compositions_by_parts(k).values():
        for comp in comps:
            terms: dict[tuple[int, ...], int] = {}
            for i in range(len(comp) - 1):
                coeff = shuffle_sum(comp[i], comp[i + 1], signed)
                if coeff:
                    if i % 2:
                        coeff = -coeff
                    merged = comp[:i] + (comp[i] + comp[i + 1],) + comp[i + 2 :]
                    terms[merged] = terms.get(merged, 0) + coeff
            table[comp] = tuple((t, c) for t, c in terms.items() if c)
    return table


@lru_cache(maxsize=None)
def _validate_merge_table(k: int, system: str) -> bool:
    """Check boundary-squared = 0 cell by cell; a failure is a sign bug, not user error."""
    table = _merge_table(k, system)
    for comp, terms in table.items():
        acc: dict[tuple[int, ...], int] = {}
        for mid, c1 in terms:
            for target, c2 in table[mid]:
                acc[target] = acc.get(target, 0) + c1 * c2
        if any(acc.values()):
            raise RuntimeError(
                f"cell-model self-check failed: boundary squared of {comp} is nonzero "
                f"(k={k}, {system} system)"
            )
    return True


def enumerate_cells(k: int, k_max: int = DEFAULT_K_MAX) -> dict[int, list[Composition]]:
    """Cells of the model for k points, grouped by cell dimension (= k + parts)."""
    _check_k(k, k_max)
    by_parts = _compositions_by_parts(k)
    return {
        k + r: [Composition(c) for c in by_parts[r]] for r in sorted(by_parts)
    }


def build_fn_complex(k: int, system: str, k_max: int = DEFAULT_K_MAX) -> ChainComplex:
    """The Fox-Neuwirth-style cell complex, graded by cell dimension.

    Degree j holds the cells of dimension j (compositions with j - k parts);
    the differential merges adjacent blocks as described in the module
    docstring.  Construction aborts if the boundary-squared self-check fails.
    """
    _check_k(k, k_max)
    _check_system(system)
    _validate_merge_table(k, system)
    by_parts = _compositions_by_parts(k)
    table = _merge_table(k, system)
    counts = {k + r: len(by_parts[r]) for r in range(1, k + 1)}
    boundary: dict[int, IntMatrix] = {}
    for r in range(2, k + 1):
        sources = by_parts[r]
        targets = by_parts[r - 1]
        index = {c: i for i, c in enumerate(targets)}
        mat = [[0] * len(sources) for _ in targets]
        for col, comp in enumerate(sources):
            for target, coeff in table[comp]:
                mat[index[target]][col] += coeff
        boundary[k + r] = IntMatrix(len(targets), len(sources), mat)
    return ChainComplex(counts, boundary)


def dual_fn_complex(k: int, system: str, k_max: int = DEFAULT_K_MAX) -> ChainComplex:
    """Transpose of the cell complex regraded so degree i computes H_i.

    A cell of dimension j lands in degree 2k - j; the boundary in degree i is
    the transpose of the merge differential into the cells with k - i parts.
    Poincare duality for the open 2k-manifold makes this compute ordinary
    homology with the chosen rank-one system.
    """
    _check_k(k, k_max)
    _check_system(system)
    _validate_merge_table(k, system)
    by_parts = _compositions_by_parts(k)
    table = _merge_table(k, system)
    counts = {i: len(by_parts[k - i]) for i in range(k)}
    boundary: dict[int, IntMatrix] = {}
    for i in range(1, k):
        sources = by_parts[k - i]  # degree i generators
        targets = by_parts[k - i + 1]  # degree i-1 generators
        col_index = {c: j for j, c in enumerate(sources)}
        mat = [[0] * len(sources) for _ in targets]
        for row, comp in enumerate(targets):
            for merged, coeff in table[comp]:
                mat[row][col_index[merged]] += coeff
        boundary[i] = IntMatrix(len(targets), len(sources), mat)
    return ChainComplex(counts, boundary)


def _dual_boundary_rows(k: int, system: str, i: int) -> list[list[int]]:
    """Rows of the degree-i boundary of the transposed complex (zero map for i=0)."""
    by_parts = _compositions_by_parts(k)
    table = _merge_table(k, system)
    sources = by_parts[k - i]
    targets = by_parts[k - i + 1]
    col_index = {c: j for j, c in enumerate(sources)}
    rows = []
    for comp in targets:
        row = [0] * len(sources)
        for merged, coeff in table[comp]:
            row[col_index[merged]] += coeff
        rows.append(row)
    return rows


def _field_dims(k: int, system: str, ring: Ring, through: int | None) -> dict[int, int]:
    """dim H_i(C_k; system x ring) for i up to ``through`` (defaults to all)."""
    top = k - 1 if k > 1 else 0
    hi = top if through is None else min(through, top)
    if hi < 0:
        return {}
    ranks: dict[int, int] = {}
    for i in range(1, min(hi + 1, k - 1) + 1):
        rows = _dual_boundary_rows(k, system, i)
        if ring == Q:
            ranks[i] = rank_int_rows(rows)
        else:
            ranks[i] = rank_mod_p_rows(rows, ring.p)
    dims = {}
    for i in range(hi + 1):
        count = comb(k - 1, i)
        dims[i] = count - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return dims


def config_homology(
    k: int,
    system: str,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
    through: int | None = None,
) -> GradedAbelianGroup:
    """H_*(C_k(C); L x ring) for L the trivial or sign rank-one system.

    Integral results are memoized in-process and, when a cache is configured,
    persisted; ``through`` truncates the computed degree range (the groups
    vanish in degrees >= k anyway).
    """
    _check_k(k, k_max)
    _check_system(system)
    if ring != Z:
        _validate_merge_table(k, system)
        return GradedAbelianGroup({i: AbelianGroup(d) for i, d in _field_dims(k, system, ring, through).items()})
    key = (k, system)
    disk = cache if cache is not None else _default_cache
    cache_key = BraidHomologyKey(k, system)
    result = _memo.get(key)
    if result is None:
        if disk is not None:
            result = disk.get(cache_key)
        if result is None:
            result = complex_homology(dual_fn_complex(k, system, k_max=k_max), Z)
            if disk is not None:
                disk.put(cache_key, result)
        _memo[key] = result
    elif disk is not None and not disk.path_for(cache_key).exists():
        # memo was warm before this cache was configured; persist for others
        disk.put(cache_key, result)
    if through is not None:
        result = GradedAbelianGroup(
            {d: result.group(d) for d in result.degrees() if d <= through}
        )
    return result


def dk_homology(
    k: int,
    ring: Ring = Z,
    *,
    k_max: int = DEFAULT_K_MAX,
    cache: HomologyCache | None = None,
    through: int | None = None,
) -> GradedAbelianGroup:
    """Reduced homology of the k-th stable summand D_k = F(C,k)+ ^_{S_k} (S^1)^^k.

    The symmetric group acts on the top cell of the smash power through the
    sign character, so this is sign-twisted configuration-space homology
    shifted up by k; it vanishes below degree k (and at or above degree 2k).
    """
    inner = None if through is None else through - k
    if inner is not None and inner < 0:
        return GradedAbelianGroup()
    return config_homology(
        k, SIGN, ring, k_max=k_max, cache=cache, through=inner
    ).shift(k)
