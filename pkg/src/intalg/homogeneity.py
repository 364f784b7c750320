"""Homogeneous and semi-homogeneous families of interval-algebra elements.

A sequence is homogeneous when all members share one sigma size and one
pattern of infinite endpoints, and every later member's finite endpoints
sit strictly inside a single gap of each earlier member.  The gap index
witnessing the nesting for a pair (alpha, beta) is the ell value; the
bundle of all ell values over a product family is an EllMatrix.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_left
from dataclasses import dataclass, field

from . import algebra
from .algebra import NEG_INF, POS_INF, Element
from .errors import CapacityError, InputError
from .product import Family

MAX_CUT_CANDIDATES = 20
EXHAUSTIVE_ORACLE_CAP = 12


@dataclass(frozen=True)
class Violation:
    """A failed homogeneity clause: 1 (sigma size), 2 (infinite-endpoint
    pattern) or 3 (no nesting gap), with the offending index pair."""

    clause: int
    pair: tuple
    detail: str


@dataclass(frozen=True)
class HomogeneityReport:
    ok: bool
    ell: dict | None  # (alpha, beta) -> least valid gap index
    violation: Violation | None = None


@dataclass(frozen=True)
class SegmentReport:
    segment: int
    window: tuple
    report: HomogeneityReport


@dataclass(frozen=True)
class SemiHomogeneityReport:
    ok: bool
    segments: tuple


@dataclass(frozen=True)
class EllMatrix:
    """Nesting witnesses for a per-coordinate homogeneous family."""

    n_members: int
    per_coordinate: tuple  # one {(alpha, beta): ell} dict per coordinate

    def ell_vec(self, alpha: int, beta: int) -> tuple:
        return tuple(d[(alpha, beta)] for d in self.per_coordinate)

    def pairs(self):
        return itertools.combinations(range(self.n_members), 2)


def _nesting_gap(vec_alpha: tuple, sigma_beta_finite) -> int | None:
    """Least ell with vec_alpha[ell] < s < vec_alpha[ell+1] for all s,
    or None; ell defaults to 0 when beta has no finite endpoints."""
    if not sigma_beta_finite:
        return 0
    lo, hi = min(sigma_beta_finite), max(sigma_beta_finite)
    ell = bisect_left(vec_alpha, lo) - 1
    if ell < 0 or vec_alpha[ell] >= lo:
        return None
    if hi >= vec_alpha[ell + 1]:
        return None
    return ell


def check_homogeneous(seq) -> HomogeneityReport:
    seq = list(seq)
    sigmas = [algebra.sigma_of(a) for a in seq]
    for i in range(1, len(seq)):
        if sigmas[i].n_a != sigmas[0].n_a:
            return HomogeneityReport(
                False,
                None,
                Violation(1, (0, i), f"|sigma| {sigmas[i].n_a} != {sigmas[0].n_a}"),
            )
    infinite = [s.sigma_minus & {NEG_INF, POS_INF} for s in sigmas]
    for i in range(1, len(seq)):
        if infinite[i] != infinite[0]:
            return HomogeneityReport(
                False,
                None,
                Violation(2, (0, i), "infinite-endpoint patterns differ"),
            )
    ell = {}
    for alpha, beta in itertools.combinations(range(len(seq)), 2):
        finite = sigmas[beta].sigma_minus - {NEG_INF, POS_INF}
        gap = _nesting_gap(sigmas[alpha].vec_sigma, finite)
        if gap is None:
            return HomogeneityReport(
                False,
                None,
                Violation(3, (alpha, beta), "no single gap contains the later endpoints"),
            )
        ell[(alpha, beta)] = gap
    return HomogeneityReport(True, ell)


def _validate_cuts(cuts) -> tuple:
    cuts = tuple(cuts)
    if len(cuts) < 2 or cuts[0] != NEG_INF or cuts[-1] != POS_INF:
        raise InputError(f"partitioning set must run from -inf to +inf: {cuts}")
    for i in range(1, len(cuts)):
        if not cuts[i - 1] < cuts[i]:
            raise InputError(f"partitioning set not increasing: {cuts}")
    return cuts


def check_semi_homogeneous(seq, cuts) -> SemiHomogeneityReport:
    seq = list(seq)
    cuts = _validate_cuts(cuts)
    segments = []
    for m in range(len(cuts) - 1):
        lo, hi = cuts[m], cuts[m + 1]
        restricted = [algebra.restrict(a, lo, hi) for a in seq]
        segments.append(SegmentReport(m, (lo, hi), check_homogeneous(restricted)))
    return SemiHomogeneityReport(all(s.report.ok for s in segments), tuple(segments))


def find_partitioning_set(seq):
    """Minimal-segment partitioning set drawn from the members' finite
    endpoints (lexicographically least among minimal), or None."""
    seq = list(seq)
    candidates = sorted(
        set().union(*(set(a.endpoints) for a in seq)) - {NEG_INF, POS_INF}
    ) if seq else []
    if len(candidates) > MAX_CUT_CANDIDATES:
        raise CapacityError(
            f"{len(candidates)} cut candidates exceed cap {MAX_CUT_CANDIDATES}"
        )
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            cuts = (NEG_INF, *combo, POS_INF)
            if check_semi_homogeneous(seq, cuts).ok:
                return cuts
    return None


def is_A_partition(C, a: Element, A) -> bool:
    """Whether C cuts a compatibly with the marker set A: C holds the
    infinities and sigma_a's A-points, and meets every gap of a that A
    meets."""
    C, A = set(C), set(A)
    if not C <= A | {NEG_INF, POS_INF}:
        raise InputError("cut set not contained in the marker set")
    if not {NEG_INF, POS_INF} <= C:
        return False
    sig = algebra.sigma_of(a)
    if not (set(sig.sigma) & A) <= C:
        return False
    vec = sig.vec_sigma
    for ell in range(sig.n_a - 1):
        gap_a = {x for x in A if vec[ell] < x < vec[ell + 1]}
        if gap_a and not any(vec[ell] < c < vec[ell + 1] for c in C):
            return False
    return True


def gen_homogeneous(seed, p: int, N: int, k: int, gap_pool=None, gap_choices=None):
    """Deterministically generate N homogeneous elements over order size p
    with |sigma| = k, nesting each member inside a gap of all earlier ones.

    gap_pool optionally restricts which gap (0..k-2) each level nests
    into, which caps the number of distinct ell values the family shows;
    gap_choices pins the gap per level outright (useful to correlate the
    nesting across coordinates of a product family).
    """
    if k < 2:
        raise InputError(f"|sigma| is at least 2, got {k}")
    if N < 0:
        raise InputError(f"negative member count {N}")
    m = k - 2
    if m == 0:
        return [algebra.empty(p) for _ in range(N)]
    if N * m >= p:
        raise CapacityError(
            f"order size {p} cannot nest {N} levels of {m} endpoints"
        )
    rng = random.Random(seed)
    if gap_pool is not None and gap_choices is not None:
        raise InputError("gap_pool and gap_choices are mutually exclusive")
    if gap_choices is not None:
        gap_choices = list(gap_choices)
        if len(gap_choices) < N:
            raise InputError(f"need {N} gap choices, got {len(gap_choices)}")
        gap_pool = gap_choices
    if gap_pool is not None:
        gap_pool = list(gap_pool)
        for g in gap_pool:
            if not 0 <= g <= m:
                raise InputError(f"gap index {g} out of range 0..{m}")
    out = []
    lo, hi = 0, p  # usable interior values are lo+1 .. hi-1
    for level in range(N):
        reserve = (N - level - 1) * m
        extra = (hi - lo - 1) - m - reserve
        if gap_choices is not None:
            gap = gap_choices[level]
        elif gap_pool:
            gap = rng.choice(gap_pool)
        else:
            gap = rng.randrange(m + 1)
        counts = [0] * (m + 1)
        for _ in range(extra):
            counts[rng.randrange(m + 1)] += 1
        counts[gap] += reserve
        eps = []
        cur = lo
        for i in range(m):
            cur += counts[i] + 1
            eps.append(cur)
        full_eps = tuple(eps) if m % 2 == 0 else (NEG_INF, *eps)
        out.append(Element(p, full_eps))
        lo = lo if gap == 0 else eps[gap - 1]
        hi = hi if gap == m else eps[gap]
    return out


@dataclass(frozen=True)
class ExtractionResult:
    indices: tuple
    parts: tuple  # one cut tuple per coordinate
    log: dict = field(compare=False, default_factory=dict)


def _group_key(fam: Family, alpha: int) -> tuple:
    key = []
    for a in fam.members[alpha]:
        sig = algebra.sigma_of(a)
        key.append(
            (sig.n_a, NEG_INF in sig.sigma_minus, POS_INF in sig.sigma_minus)
        )
    return tuple(key)


def _groups(fam: Family) -> list:
    groups = {}
    for alpha in range(len(fam)):
        groups.setdefault(_group_key(fam, alpha), []).append(alpha)
    return sorted(groups.values(), key=lambda g: (-len(g), g[0]))


def _greedy_nested(fam: Family, group, start: int) -> list:
    chosen = [group[start]]
    for beta in group[start + 1 :]:
        ok = True
        for zeta in range(fam.kappa):
            vec_fin = algebra.sigma_of(fam.members[beta][zeta]).sigma_minus - {
                NEG_INF,
                POS_INF,
            }
            for alpha in chosen:
                vec = algebra.sigma_of(fam.members[alpha][zeta]).vec_sigma
                if _nesting_gap(vec, vec_fin) is None:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            chosen.append(beta)
    return chosen


def _trivial_parts(kappa: int) -> tuple:
    return tuple((NEG_INF, POS_INF) for _ in range(kappa))


def extract_semi_homogeneous(fam: Family) -> ExtractionResult:
    """Select a subfamily that is semi-homogeneous in every coordinate.

    Members are first grouped by sigma size and infinite-endpoint pattern
    per coordinate; within the largest group a shared partitioning set is
    tried first, then greedy nesting selection (best over all starting
    positions and groups).
    """
    if not len(fam):
        return ExtractionResult((), _trivial_parts(fam.kappa), {"strategy": "empty"})
    groups = _groups(fam)
    main = groups[0]
    parts = []
    for zeta in range(fam.kappa):
        seq = [fam.members[alpha][zeta] for alpha in main]
        try:
            cuts = find_partitioning_set(seq)
        except CapacityError:
            cuts = None
        if cuts is None:
            parts = None
            break
        parts.append(cuts)
    if parts is not None:
        return ExtractionResult(
            tuple(main), tuple(parts), {"strategy": "partitioning-set"}
        )
    best = []
    for group in groups:
        for start in range(len(group)):
            if len(group) - start <= len(best):
                break
            cand = _greedy_nested(fam, group, start)
            if len(cand) > len(best):
                best = cand
    return ExtractionResult(
        tuple(best), _trivial_parts(fam.kappa), {"strategy": "greedy-nesting"}
    )


def exhaustive_max_homogeneous(fam: Family) -> tuple:
    """Largest per-coordinate homogeneous index subset, by exhaustive
    search (test oracle; lexicographically least among maximum)."""
    n = len(fam)
    if n > EXHAUSTIVE_ORACLE_CAP:
        raise CapacityError(f"{n} members exceed cap {EXHAUSTIVE_ORACLE_CAP}")
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            if all(
                check_homogeneous([fam.members[a][z] for a in subset]).ok
                for z in range(fam.kappa)
            ):
                return subset
    return ()
