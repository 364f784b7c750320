"""Certificate-producing searches over per-coordinate homogeneous families.

Witness tuples are located through the nesting-gap vectors of member
pairs: repeated vectors pin down where symmetric differences must live,
so fixed six- and four-variable terms evaluate to zero on the tuple.
Every certificate is re-verified by direct coordinatewise evaluation
before it is returned.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import algebra, homogeneity, terms
from .algebra import NEG_INF, POS_INF
from .errors import InputError
from .homogeneity import EllMatrix
from .product import Family, is_zero, prod_eval

log = logging.getLogger(__name__)

TERM_SHORT = terms.parse("x0*x1*-x2*-x3*x4*-x5")
TERM_SYMMETRIC = terms.parse("(x0^x1)*x2*(x3^x4)*-x5")
TERM_QUAD = terms.parse("(x0^x1)*(x2^x3)")

MODE_TERMS = {
    "short": TERM_SHORT,
    "symmetric": TERM_SYMMETRIC,
    "quadruple": TERM_QUAD,
}

INSIDE = "inside"
OUTSIDE = "outside"


def _vanishes(term, fam, indices) -> bool:
    """Coordinatewise zero test with early exit."""
    members = [fam.members[i] for i in indices]
    for zeta in range(fam.kappa):
        value = terms.evaluate(
            term,
            [m[zeta] for m in members],
            order_size=fam.order_sizes[zeta],
        )
        if not value.is_empty():
            return False
    return True


@dataclass(frozen=True)
class CoordinateEvidence:
    zeta: int
    empty: bool
    ell: tuple
    side: str | None


@dataclass(frozen=True)
class Certificate:
    indices: tuple
    term: terms.Term
    mode: str
    per_coordinate: tuple
    provenance: dict = field(compare=False, default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "term": terms.render(self.term),
            "mode": self.mode,
            "coordinates": [
                {
                    "zeta": c.zeta,
                    "empty": c.empty,
                    "ell": list(c.ell),
                    "side": c.side,
                }
                for c in self.per_coordinate
            ],
            "provenance": self.provenance,
        }


def ell_matrix(fam: Family) -> EllMatrix:
    """Nesting-gap witnesses for every pair, bundled over coordinates."""
    per_coordinate = []
    for zeta in range(fam.kappa):
        report = homogeneity.check_homogeneous(fam.coordinate(zeta))
        if not report.ok:
            v = report.violation
            raise InputError(
                f"coordinate {zeta} is not homogeneous: clause {v.clause} "
                f"fails on pair {v.pair}"
            )
        per_coordinate.append(report.ell)
    return EllMatrix(len(fam), tuple(per_coordinate))


def gap_side(fam: Family, zeta: int, alpha: int, ell: int) -> str:
    """Whether gap ell of member alpha (in coordinate zeta) lies inside
    or outside the member; canonicity forbids anything in between."""
    a = fam.members[alpha][zeta]
    sig = algebra.sigma_of(a)
    if not 0 <= ell < sig.n_a - 1:
        raise InputError(f"gap index {ell} out of range for |sigma|={sig.n_a}")
    inside = algebra._member_at(a.endpoints, sig.vec_sigma[ell])
    return INSIDE if inside else OUTSIDE


@dataclass(frozen=True)
class PigeonholeState:
    """Bookkeeping for the repeated-vector search: which gap vectors
    recur among the successors of each anchor."""

    distinct_values: int
    repeated_per_anchor: dict  # alpha -> frozenset of vectors seen >= 2 times
    anchors_per_value: dict  # vector -> sorted tuple of anchors

    @property
    def v_count(self) -> int:
        return self.distinct_values


def pigeonhole_state(matrix: EllMatrix) -> PigeonholeState:
    n = matrix.n_members
    observed = set()
    repeated = {}
    anchors = {}
    for alpha in range(n):
        counts = Counter(matrix.ell_vec(alpha, beta) for beta in range(alpha + 1, n))
        observed.update(counts)
        rep = frozenset(v for v, c in counts.items() if c >= 2)
        repeated[alpha] = rep
        for v in rep:
            anchors.setdefault(v, []).append(alpha)
    return PigeonholeState(
        len(observed),
        repeated,
        {v: tuple(sorted(a)) for v, a in anchors.items()},
    )


def required_members(v_count: int, mode: str) -> int:
    """Family size that forces a witness, from the block construction:
    v+1 blocks of v+2 members repeat an anchor value twice in two blocks
    (short mode); pairing both gap vectors squares the value count."""
    if mode == "short":
        return (v_count + 1) * (v_count + 2)
    if mode == "symmetric":
        return (v_count**2 + 1) * (v_count + 2)
    raise InputError(f"unknown mode {mode!r}")


def _sextuple_evidence(fam, matrix, idx, mode):
    alpha0 = idx[0]
    per_coordinate = []
    for zeta in range(fam.kappa):
        d = matrix.per_coordinate[zeta]
        ells = [d[(idx[0], idx[1])]]
        if mode == "symmetric":
            ells.append(d[(idx[1], idx[2])])
        per_coordinate.append(
            CoordinateEvidence(
                zeta, True, tuple(ells), gap_side(fam, zeta, alpha0, ells[0])
            )
        )
    return tuple(per_coordinate)


def find_sextuple(fam: Family, mode: str = "short") -> Certificate | None:
    """Lexicographically least verified sextuple witness, or None.

    Short mode wants the gap vector of (a0,a1), (a0,a2), (a3,a4), (a3,a5)
    to agree; symmetric mode additionally matches (a1,a2) with (a4,a5).
    Candidates are only accepted after coordinatewise evaluation confirms
    the mode's term is zero on the tuple.
    """
    if mode not in ("short", "symmetric"):
        raise InputError(f"unknown sextuple mode {mode!r}")
    matrix = ell_matrix(fam)
    n = len(fam)
    term = MODE_TERMS[mode]

    def vec(a, b):
        return matrix.ell_vec(a, b)

    for a0 in range(n - 5):
        for a1 in range(a0 + 1, n - 4):
            v = vec(a0, a1)
            for a2 in range(a1 + 1, n - 3):
                if vec(a0, a2) != v:
                    continue
                w = vec(a1, a2)
                for a3 in range(a2 + 1, n - 2):
                    for a4 in range(a3 + 1, n - 1):
                        if vec(a3, a4) != v:
                            continue
                        for a5 in range(a4 + 1, n):
                            if vec(a3, a5) != v:
                                continue
                            if mode == "symmetric" and vec(a4, a5) != w:
                                continue
                            idx = (a0, a1, a2, a3, a4, a5)
                            if _vanishes(term, fam, idx):
                                return Certificate(
                                    idx,
                                    term,
                                    mode,
                                    _sextuple_evidence(fam, matrix, idx, mode),
                                )
                            log.debug(
                                "%s-mode pattern %s failed evaluation", mode, idx
                            )
    return None


def ramsey_quad(n: int, colors):
    """Least alpha0<alpha1<alpha2<alpha3 whose four cross pairs share one
    color, or None after scanning every quadruple.

    colors is either a callable on pairs (i, j) with i < j or a 2-D array
    indexed the same way.
    """
    if isinstance(colors, np.ndarray):
        C = colors
        is_array = True
    else:
        C = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                C[i][j] = colors(i, j)
        is_array = False
    for a0 in range(n - 3):
        for a1 in range(a0 + 1, n - 2):
            if is_array:
                cols = np.nonzero(C[a0, a1 + 1 :] == C[a1, a1 + 1 :])[0] + a1 + 1
            else:
                cols = [
                    j for j in range(a1 + 1, n) if C[a0][j] == C[a1][j]
                ]
            first = {}
            best = None
            for j in cols:
                v = C[a0][j] if not is_array else C[a0, j]
                if v in first:
                    cand = (first[v], int(j))
                    if best is None or cand < best:
                        best = cand
                else:
                    first[v] = int(j)
            if best is not None:
                return (a0, a1, best[0], best[1])
    return None


def _quadruple_evidence(fam, matrix, idx):
    per_coordinate = []
    for zeta in range(fam.kappa):
        d = matrix.per_coordinate[zeta]
        ell = d.get((idx[0], idx[2]))
        side = (
            gap_side(fam, zeta, idx[0], ell) if ell is not None else None
        )
        per_coordinate.append(
            CoordinateEvidence(zeta, True, (ell,) if ell is not None else (), side)
        )
    return tuple(per_coordinate)


def find_quadruple(fam: Family) -> Certificate | None:
    """Verified quadruple witness for (x0^x1)*(x2^x3), or None.

    The pair coloring by gap vectors is only a search heuristic: a
    pattern hit is accepted solely on evaluation, and exhaustive search
    over all quadruples is the fallback.
    """
    matrix = ell_matrix(fam)
    n = len(fam)
    idx = ramsey_quad(n, matrix.ell_vec) if n >= 4 else None
    if idx is not None:
        if _vanishes(TERM_QUAD, fam, idx):
            return Certificate(
                idx, TERM_QUAD, "quadruple", _quadruple_evidence(fam, matrix, idx)
            )
        log.warning("gap-vector quadruple %s failed evaluation", idx)
    for quad in itertools.combinations(range(n), 4):
        if _vanishes(TERM_QUAD, fam, quad):
            return Certificate(
                quad, TERM_QUAD, "quadruple", _quadruple_evidence(fam, matrix, quad)
            )
    return None


@dataclass(frozen=True)
class PipelineResult:
    certificate: Certificate | None
    log: dict

    @property
    def found(self) -> bool:
        return self.certificate is not None


def flatten(fam: Family, indices, parts):
    """Turn every (coordinate, segment) of the partitioning sets into its
    own coordinate, restricting the selected members accordingly."""
    new_columns = []
    flatten_map = []
    for zeta in range(fam.kappa):
        cuts = parts[zeta]
        for m in range(len(cuts) - 1):
            lo, hi = cuts[m], cuts[m + 1]
            new_columns.append(
                [algebra.restrict(fam.members[alpha][zeta], lo, hi) for alpha in indices]
            )
            flatten_map.append((zeta, m))
    members = tuple(
        tuple(col[i] for col in new_columns) for i in range(len(indices))
    )
    order_sizes = tuple(
        col[0].order_size if col else 0 for col in new_columns
    )
    if not indices:
        order_sizes = tuple(0 for _ in new_columns)
    return Family(len(new_columns), order_sizes, members), flatten_map


def pipeline(raw: Family, mode: str = "short") -> PipelineResult:
    """Extract a semi-homogeneous subfamily, flatten its segments into
    fresh coordinates, and search for a sextuple certificate there."""
    extraction = homogeneity.extract_semi_homogeneous(raw)
    flat, flatten_map = flatten(raw, extraction.indices, extraction.parts)
    info = {
        "selected_indices": list(extraction.indices),
        "parts": [
            [algebra.encode_endpoint(e) for e in cuts] for cuts in extraction.parts
        ],
        "flatten_map": [list(pair) for pair in flatten_map],
        "extraction": extraction.log,
        "mode": mode,
    }
    if len(flat) < 6:
        info["insufficient"] = {
            "achieved_members": len(flat),
            "required_members": 6,
        }
        return PipelineResult(None, info)
    matrix = ell_matrix(flat)
    state = pigeonhole_state(matrix)
    info["pigeonhole"] = {
        "distinct_values": state.distinct_values,
        "required_members": required_members(state.distinct_values, mode),
        "achieved_members": len(flat),
    }
    cert = find_sextuple(flat, mode)
    if cert is None:
        info["insufficient"] = info["pigeonhole"]
        return PipelineResult(None, info)
    cert = Certificate(
        cert.indices, cert.term, cert.mode, cert.per_coordinate, info
    )
    return PipelineResult(cert, info)
