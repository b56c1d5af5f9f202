"""G-constellations as representations of the McKay quiver.

Vertices are Irr(G) = Z/r and every vertex carries a line, so a
subrepresentation of R is just a vertex subset closed under the nonzero
arrows. Subsets are handled internally as bitmasks over Z/r.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple
import numpy as np
from mckay3.impl.types.group import GroupAction
from mckay3.impl.types.quiver import (
    FLAVORS, RELATION_PAIRS, Arrow, Constellation, FixedPoint, NotGeneric, StabilityParam, Verdict, VertexSet,
)
from mckay3.utils.errors import InputError
from mckay3.utils.linalg import rank
from mckay3.utils.parallel import pmap

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12


class PatternInfeasible(InputError):
    def message(self) -> str:
        return f"zero pattern {self.context['pattern']} breaks [B^B] = 0 for {self.context['group']}"


def _subsets_by_size(r: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty proper subsets of Z/r, smallest first, lexicographic within a size."""
    for size in range(1, r):
        yield from combinations(range(r), size)


def _mask(subset: Sequence[int]) -> int:
    m = 0
    for k in subset:
        m |= 1 << k
    return m


def is_generic(theta: StabilityParam) -> Verdict:
    """Generic iff theta(S) != 0 for every nonempty proper subset S; otherwise S is the witness."""
    for subset in _subsets_by_size(theta.order):
        if theta(subset) == 0:
            return Verdict(ok=False, witness=frozenset(subset))
    return Verdict(ok=True)


def relation_residual(rep: Constellation) -> float:
    """max over k, alpha < beta of |b_beta(k + w_alpha) b_alpha(k) - b_alpha(k + w_beta) b_beta(k)|"""
    worst = 0.0
    for k in rep.group.irreps:
        for alpha, beta in RELATION_PAIRS:
            lhs = rep.arrow(rep.head(k, alpha), beta) * rep.arrow(k, alpha)
            rhs = rep.arrow(rep.head(k, beta), alpha) * rep.arrow(k, beta)
            worst = max(worst, abs(lhs - rhs))
    return worst


def support(rep: Constellation, tol: float = DEFAULT_TOL) -> FrozenSet[Arrow]:
    """Arrows with |b| > tol * max|b|. Exact zeros are never in the support."""
    mags = np.abs(rep.b)
    scale = float(mags.max()) if mags.size else 0.0
    if scale == 0.0:
        return frozenset()
    return frozenset(
        (k, alpha) for k in rep.group.irreps for alpha in FLAVORS
        if mags[k, alpha - 1] > tol * scale
    )


def _successors(group: GroupAction, arrows: FrozenSet[Arrow]) -> List[int]:
    succ = [0] * group.order
    for k, alpha in arrows:
        succ[k] |= 1 << ((k + group.weights[alpha - 1]) % group.order)
    return succ


def _is_closed(mask: int, succ: Sequence[int]) -> bool:
    k = 0
    m = mask
    while m:
        if m & 1 and succ[k] & ~mask:
            return False
        m >>= 1
        k += 1
    return True


def is_invariant(rep: Constellation, subset, tol: float = DEFAULT_TOL) -> bool:
    """True iff every supported arrow leaving a vertex of `subset` lands in `subset`."""
    return _is_closed(_mask(subset), _successors(rep.group, support(rep, tol)))


def invariant_subsets(rep: Constellation, tol: float = DEFAULT_TOL) -> List[VertexSet]:
    """Every vertex subset (including the empty and full set) closed under the supported arrows."""
    r = rep.group.order
    succ = _successors(rep.group, support(rep, tol))
    out = [frozenset()]
    for subset in _subsets_by_size(r):
        if _is_closed(_mask(subset), succ):
            out.append(frozenset(subset))
    out.append(frozenset(range(r)))
    return out


def _stability(rep: Constellation, theta: StabilityParam, tol: float, strict: bool) -> Verdict:
    theta.require_order(rep.group)
    succ = _successors(rep.group, support(rep, tol))
    for subset in _subsets_by_size(rep.group.order):
        value = theta(subset)
        violated = value <= 0 if strict else value < 0
        if violated and _is_closed(_mask(subset), succ):
            return Verdict(ok=False, witness=frozenset(subset))
    return Verdict(ok=True)


def is_theta_stable(rep: Constellation, theta: StabilityParam, tol: float = DEFAULT_TOL) -> Verdict:
    """theta(S) > 0 for every invariant S with 0 != S != R."""
    return _stability(rep, theta, tol, strict=True)


def is_theta_semistable(rep: Constellation, theta: StabilityParam, tol: float = DEFAULT_TOL) -> Verdict:
    """theta(S) >= 0 for every invariant S with 0 != S != R."""
    return _stability(rep, theta, tol, strict=False)


def _close_pattern(group: GroupAction, keep: np.ndarray, rng: np.random.Generator) -> int:
    """Zero arrows until path exchange holds on `keep`; returns how many were zeroed."""
    r, w = group.order, group.weights
    zeroed = 0
    changed = True
    while changed:
        changed = False
        for k in range(r):
            for alpha, beta in RELATION_PAIRS:
                first = ((k, alpha), ((k + w[alpha - 1]) % r, beta))
                second = ((k, beta), ((k + w[beta - 1]) % r, alpha))
                has_first = all(keep[v, a - 1] for v, a in first)
                has_second = all(keep[v, a - 1] for v, a in second)
                if has_first != has_second:
                    v, a = (first if has_first else second)[int(rng.integers(2))]
                    keep[v, a - 1] = False
                    zeroed += 1
                    changed = True
    return zeroed


def random_constellation(group: GroupAction,
                         seed: int,
                         zero_pattern: Optional[FrozenSet[Arrow]] = None,
                         zero_probability: Optional[float] = None) -> Constellation:
    """Seeded free-orbit constellation b_alpha(k) = x_alpha, optionally with arrows zeroed.

    An explicit `zero_pattern` is taken as given. With `zero_probability`
    every arrow is dropped independently and the pattern is then closed
    under path exchange by zeroing further arrows, so the result always
    lies on the relation locus.

    Raises:
        PatternInfeasible: the explicit pattern breaks the relations
    """
    rng = np.random.default_rng(seed)
    x = (rng.standard_normal(3) + 1j * rng.standard_normal(3)) / np.sqrt(2)
    base = Constellation(group, np.tile(x, (group.order, 1)))

    if zero_pattern is not None:
        rep = base.with_zeros(zero_pattern)
        # products of the same floats commute exactly, so admissible means exactly 0
        if relation_residual(rep) != 0:
            raise PatternInfeasible(group=str(group), pattern=sorted(zero_pattern))
        return rep
    if zero_probability is None or zero_probability <= 0:
        return base

    keep = rng.random((group.order, 3)) >= zero_probability
    extra = _close_pattern(group, keep, rng)
    log.debug("%s: closing the zero pattern removed %d more arrow(s)", group, extra)
    return Constellation(group, np.where(keep, base.b, 0))


# -- torus-fixed points ---------------------------------------------------


@dataclass(frozen=True)
class _Relation:
    # path k -> k + w_alpha -> k + w_alpha + w_beta, and the exchanged path
    first: Tuple[int, int]
    second: Tuple[int, int]


class _FixedPointSearch:
    """Backtracking over arrow supports, vertex-major.

    Arrow (k, alpha) has bit index 3k + alpha - 1. A path-exchange condition
    is tested as soon as its last arrow is decided; the subsets that theta
    makes destabilizing are tested once their largest vertex is complete.
    """

    def __init__(self, group: GroupAction, theta: StabilityParam):
        self.group = group
        self.theta = theta
        r = group.order
        self.n_arrows = 3 * r
        self.heads = [(a // 3 + group.weights[a % 3]) % r for a in range(self.n_arrows)]

        def idx(k: int, alpha: int) -> int:
            return 3 * (k % r) + alpha - 1

        self.relations: List[_Relation] = []
        for k in range(r):
            for alpha, beta in RELATION_PAIRS:
                wa, wb = group.weights[alpha - 1], group.weights[beta - 1]
                self.relations.append(_Relation(
                    first=(idx(k, alpha), idx(k + wa, beta)),
                    second=(idx(k, beta), idx(k + wb, alpha)),
                ))
        self.closing: List[List[_Relation]] = [[] for _ in range(self.n_arrows)]
        for rel in self.relations:
            self.closing[max(rel.first + rel.second)].append(rel)

        self.bad_by_vertex: List[List[int]] = [[] for _ in range(r)]
        for subset in _subsets_by_size(r):
            if theta(subset) < 0:
                self.bad_by_vertex[max(subset)].append(_mask(subset))

    @staticmethod
    def _has(mask: int, pair: Tuple[int, int]) -> bool:
        return bool(mask >> pair[0] & 1 and mask >> pair[1] & 1)

    def _relations_hold(self, mask: int, a: int) -> bool:
        return all(self._has(mask, rel.first) == self._has(mask, rel.second) for rel in self.closing[a])

    def _vertex_ok(self, k: int, succ: List[int]) -> bool:
        return not any(_is_closed(bad, succ) for bad in self.bad_by_vertex[k])

    def solution_dimension(self, mask: int) -> int:
        """dim of {v on T : v_a(k) + v_b(k + w_a) = v_b(k) + v_a(k + w_b)} over relations inside T."""
        arrows = [a for a in range(self.n_arrows) if mask >> a & 1]
        col = {a: i for i, a in enumerate(arrows)}
        rows = []
        for rel in self.relations:
            if self._has(mask, rel.first) and self._has(mask, rel.second):
                row = [0] * len(arrows)
                for a in rel.first:
                    row[col[a]] += 1
                for a in rel.second:
                    row[col[a]] -= 1
                rows.append(row)
        return len(arrows) - rank(rows)

    def run(self, prefix: Tuple[int, ...] = ()) -> List[int]:
        """All admissible supports whose first len(prefix) arrow decisions are `prefix`."""
        found: List[int] = []
        r = self.group.order
        succ = [0] * r

        def visit(a: int, mask: int) -> None:
            if a == self.n_arrows:
                if self.solution_dimension(mask) == r - 1:
                    found.append(mask)
                return
            choices = (prefix[a],) if a < len(prefix) else (0, 1)
            for bit in choices:
                m = mask | (bit << a)
                if not self._relations_hold(m, a):
                    continue
                if a % 3 == 2:
                    k = a // 3
                    saved = succ[k]
                    succ[k] = 0
                    for j in range(3):
                        if m >> (3 * k + j) & 1:
                            succ[k] |= 1 << self.heads[3 * k + j]
                    if self._vertex_ok(k, succ):
                        visit(a + 1, m)
                    succ[k] = saved
                else:
                    visit(a + 1, m)

        visit(0, 0)
        return found

    def to_fixed_point(self, mask: int) -> FixedPoint:
        arrows = frozenset((a // 3, a % 3 + 1) for a in range(self.n_arrows) if mask >> a & 1)
        return FixedPoint(support=arrows, stable_for=self.theta)


def enumerate_fixed_points(group: GroupAction, theta: StabilityParam,
                           threads: int = 1, split_depth: int = 3) -> List[FixedPoint]:
    """Arrow supports of torus-fixed theta-stable constellations.

    A support T qualifies when the path-exchange property holds on T, the
    all-ones representation on T is theta-stable, and the log-linearized
    relations on T have exactly the r - 1 gauge directions as solutions.
    The search space is split on the first `split_depth` arrows and the parts
    are merged in order, so the result does not depend on `threads`.

    Raises:
        NotGeneric: theta is not generic
    """
    theta.require_order(group)
    generic = is_generic(theta)
    if not generic:
        raise NotGeneric(theta=theta.literal(), witness=generic.witness)

    search = _FixedPointSearch(group, theta)
    depth = min(split_depth, search.n_arrows)
    prefixes = list(product((0, 1), repeat=depth))
    parts = pmap(search.run, prefixes, threads=threads)
    masks = [m for part in parts for m in part]
    log.debug("%s theta=%s: %d fixed points", group, theta.literal(), len(masks))
    return [search.to_fixed_point(m) for m in masks]


def fixed_point_fingerprint(points: Sequence[FixedPoint]) -> Tuple[Tuple[Arrow, ...], ...]:
    return tuple(sorted(tuple(sorted(p.support)) for p in points))


# -- sampling the space of stability parameters ----------------------------


def sample_theta(r: int, rng: np.random.Generator, bound: int = 5) -> StabilityParam:
    """Integral theta with entries in [-bound, bound] for the first r-1 vertices, balanced by the last."""
    head = [int(v) for v in rng.integers(-bound, bound + 1, size=r - 1)]
    return StabilityParam(tuple(Fraction(v) for v in head + [-sum(head)]))


@dataclass(frozen=True)
class ChamberClass:
    fingerprint: Tuple[Tuple[Arrow, ...], ...]
    count: int
    example: StabilityParam

    def serialize(self) -> Dict:
        return {
            "count": self.count,
            "fixed_points": len(self.fingerprint),
            "example_theta": self.example.serialize(),
            "supports": [[list(arrow) for arrow in support] for support in self.fingerprint],
        }


@dataclass(frozen=True)
class ChamberSurvey:
    group: GroupAction
    samples: int
    generic: int
    classes: Tuple[ChamberClass, ...]

    @property
    def genericity_rate(self) -> float:
        return self.generic / self.samples if self.samples else 0.0

    def serialize(self) -> Dict:
        return {
            "group": str(self.group),
            "samples": self.samples,
            "generic": self.generic,
            "genericity_rate": self.genericity_rate,
            "classes": [c.serialize() for c in self.classes],
        }


def chamber_survey(group: GroupAction, samples: int, seed: int, bound: int = 5,
                   threads: int = 1, on_sample=None) -> ChamberSurvey:
    """Sample theta, count the generic ones, and group those by fixed-point fingerprint.

    Classes come out in order of first appearance. `on_sample` is called once
    per sample (progress reporting).
    """
    rng = np.random.default_rng(seed)
    counts: Dict[Tuple, int] = {}
    examples: Dict[Tuple, StabilityParam] = {}
    generic = 0
    for _ in range(samples):
        theta = sample_theta(group.order, rng, bound)
        if is_generic(theta):
            generic += 1
            fp = fixed_point_fingerprint(enumerate_fixed_points(group, theta, threads=threads))
            if fp not in counts:
                counts[fp] = 0
                examples[fp] = theta
            counts[fp] += 1
        if on_sample is not None:
            on_sample()
    classes = tuple(ChamberClass(fingerprint=fp, count=n, example=examples[fp]) for fp, n in counts.items())
    return ChamberSurvey(group=group, samples=samples, generic=generic, classes=classes)
