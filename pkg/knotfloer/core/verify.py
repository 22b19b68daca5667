"""Identity suites behind `knotfloer verify`.

Every suite checks exact identities between independent computations: the
bound machinery against closed formulas, the homology pipeline against the
torus-knot recursion, piece deltas against the aggregate formulas. Random
suites draw from a seeded generator, so a run is reproducible.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.rational_pl import pl_initial_slope, pl_leq, pl_reflect, pl_sub, pl_zero
from ..bounds import (
    crossing_change_bounds,
    genus_kink,
    is_sharp,
    l1_norm,
    m_t_charvec,
    m_t_class,
    m_t_scalar,
    self_intersection,
    tau_upper_bound,
    torus_upsilon,
    torus_upsilon_adjacent,
    upsilon_lower_bound,
)
from ..cobordism import (
    CobordismTopology,
    ComponentTopology,
    ElementaryPiece,
    KnotMap,
    PieceKind,
    closed_surface_map,
    collapse,
    compose_detailed,
    conjugate_delta,
    grt_change,
    grw_change,
    grz_change,
    identity_topology,
    negdef_knot_map,
    next_state,
    piece_delta,
    topology_delta,
)
from ..complexes import (
    ChainComplexUV,
    conjugate,
    figure_eight,
    staircase_torus_knot,
    trefoil,
    unknot,
)
from ..constants import DEFAULT_KNOT_LABEL, VERIFY_SUITES
from ..invariants import t_grid, tau, tau_from_upsilon, upsilon_at, upsilon_pl
from ..utils.errors import DomainError, KnotFloerError
from ..utils.helpers import format_rational
from ..utils.logging import logger

TORUS_PIPELINE_CASES = [(2, 3), (3, 4), (4, 5), (5, 6), (2, 5), (3, 5), (3, 7)]
SHARP_TORUS_CASES = [(2, 5), (3, 5), (3, 7)]


@dataclass
class SuiteResult:
    """Outcome of one identity suite."""

    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, description: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(description)

    def report_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}\t{status}\t{self.checks - len(self.failures)}/{self.checks}"


def knot_fixtures() -> Dict[str, ChainComplexUV]:
    """Named model complexes shared by the complex-based suites."""
    return {
        "unknot": unknot(),
        "trefoil": trefoil(),
        "figure-eight": figure_eight(),
        "T(2,5)": staircase_torus_knot(2, 5),
        "T(3,4)": staircase_torus_knot(3, 4),
    }


def random_piece_sequence(
    rng: random.Random, length: int, labels: Sequence[str] = ("K", "L")
) -> Tuple[Dict[str, int], List[ElementaryPiece]]:
    """A composable random piece list together with its initial state."""
    state = {label: rng.randint(1, 2) for label in labels}
    initial = dict(state)
    pieces: List[ElementaryPiece] = []
    kinds = list(PieceKind)
    for _ in range(length):
        label = rng.choice(list(labels))
        choices = kinds if state[label] > 1 else [k for k in kinds if k is not PieceKind.HANDLE_4]
        kind = rng.choice(choices)
        if kind is PieceKind.HANDLE_2:
            piece = ElementaryPiece(
                kind,
                label,
                c1_sq=rng.randint(-9, 0),
                sigma=rng.randint(-3, 0),
                pairings={j: rng.randint(-4, 4) for j in labels},
                intersections={j: rng.randint(-4, 0) for j in labels},
            )
        else:
            piece = ElementaryPiece(kind, label)
        pieces.append(piece)
        state = next_state(piece, state)
    return initial, pieces


def random_topology(rng: random.Random, labels: Sequence[str] = ("K", "L")) -> CobordismTopology:
    """Random integer topology data with consistent basepoint counts."""
    counts_in = {j: rng.randint(0, 3) for j in labels}
    counts_out = {j: rng.randint(0, 3) for j in labels}
    return CobordismTopology(
        components={
            j: ComponentTopology(
                pairing_c1_sigma_j=rng.randint(-6, 6),
                int_sigma_sigma_j=rng.randint(-6, 6),
                chi_w_j=rng.randint(-4, 4),
                chi_z_j=rng.randint(-4, 4),
                basepoints_in_j=counts_in[j],
                basepoints_out_j=counts_out[j],
            )
            for j in labels
        },
        c1_sq=rng.randint(-12, 0),
        chi_W=rng.randint(-3, 3),
        sigma_W=rng.randint(-3, 0),
        w_in=sum(counts_in.values()),
        w_out=sum(counts_out.values()),
        z_in=sum(counts_in.values()),
        z_out=sum(counts_out.values()),
    )


class Verifier:
    """Runs the named identity suites."""

    def __init__(self, seed: int = 0, trials: int = 200, workers: int = 1):
        self.seed = seed
        self.trials = trials
        self.workers = workers
        self._suites: Dict[str, Callable[[SuiteResult], None]] = {
            "sharpness": self._sharpness,
            "mt-equivalence": self._mt_equivalence,
            "torus-pipeline": self._torus_pipeline,
            "tau": self._tau,
            "crossing-change": self._crossing_change,
            "tau-bound": self._tau_bound,
            "additivity": self._additivity,
            "conjugation": self._conjugation,
            "negdef": self._negdef,
        }

    def run(self, name: str) -> SuiteResult:
        """Run one suite; errors raised inside a suite count as failures."""
        if name not in self._suites:
            raise DomainError(f"unknown suite '{name}' (known: {', '.join(VERIFY_SUITES)}, all)")
        logger.verify(f"Running suite {name}")
        result = SuiteResult(name)
        try:
            self._suites[name](result)
        except KnotFloerError as e:
            result.failures.append(f"raised {type(e).__name__}: {e}")
        for failure in result.failures:
            logger.debug(f"{name}: {failure}")
        return result

    def run_many(self, names: Optional[Sequence[str]] = None) -> List[SuiteResult]:
        return [self.run(name) for name in (names or VERIFY_SUITES)]

    def _rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def _sharpness(self, result: SuiteResult) -> None:
        for n in range(1, 9):
            result.check(
                m_t_scalar(n) == torus_upsilon_adjacent(n),
                f"M_t({n}) differs from Upsilon of T({n},{n + 1})",
            )
            result.check(
                upsilon_lower_bound(pl_zero(), [n], 0) == torus_upsilon_adjacent(n),
                f"unknot bound with [Sigma] = [{n}] is not sharp",
            )
        for a, b in SHARP_TORUS_CASES:
            result.check(is_sharp(a, b), f"torus-knot cobordism bound for T({a},{b}) is not attained")

    def _mt_equivalence(self, result: SuiteResult) -> None:
        for s in range(-8, 9):
            result.check(m_t_scalar(s) == m_t_scalar(-s), f"M_t({s}) != M_t({-s})")
        for size in range(4):
            for coeffs in product(range(-4, 5), repeat=size):
                class_sum = m_t_class(coeffs)
                result.check(
                    m_t_charvec(coeffs) == class_sum,
                    f"characteristic-vector M_t differs from coordinate sum for {list(coeffs)}",
                )
                result.check(
                    pl_reflect(class_sum) == class_sum,
                    f"M_t({list(coeffs)}) is not symmetric under t -> 2 - t",
                )

    def _torus_pipeline(self, result: SuiteResult) -> None:
        for p, q in TORUS_PIPELINE_CASES:
            computed = upsilon_pl(staircase_torus_knot(p, q), workers=self.workers)
            result.check(
                computed == torus_upsilon(p, q),
                f"Upsilon of the T({p},{q}) staircase differs from the recursion",
            )

    def _tau(self, result: SuiteResult) -> None:
        expected = {"unknot": 0, "trefoil": 1, "figure-eight": 0, "T(2,5)": 2, "T(3,4)": 3}
        for name, C in knot_fixtures().items():
            value = tau(C)
            result.check(value == expected[name], f"tau({name}) = {format_rational(value)}")
            slope_tau = tau_from_upsilon(upsilon_pl(C, workers=self.workers))
            result.check(slope_tau == value, f"initial Upsilon slope of {name} is not -tau")
            result.check(tau(conjugate(C)) == value, f"tau of the conjugate of {name} differs")

    def _crossing_change(self, result: SuiteResult) -> None:
        candidates = [torus_upsilon(2, 3), torus_upsilon(3, 4), pl_zero()]
        for upsilon_plus in candidates:
            lower, upper = crossing_change_bounds(upsilon_plus)
            result.check(lower == upsilon_plus, "crossing-change lower bound is not Upsilon_{K+}")
            result.check(pl_leq(lower, upper), "crossing-change bounds are out of order")
            result.check(
                pl_sub(upper, lower) == pl_sub(pl_zero(), genus_kink()),
                "crossing-change gap is not 1 - |t - 1|",
            )

    def _tau_bound(self, result: SuiteResult) -> None:
        rng = self._rng("tau-bound")
        for _ in range(max(50, self.trials // 4)):
            coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(0, 4))]
            g = rng.randint(0, 3)
            slope = pl_initial_slope(upsilon_lower_bound(pl_zero(), coeffs, g))
            expected = Fraction(l1_norm(coeffs) + self_intersection(coeffs), 2) - g
            result.check(slope == expected, f"small-t slope for S = {coeffs}, g = {g}")
            result.check(
                tau_upper_bound(0, coeffs, g) == -slope,
                f"tau bound and Upsilon bound disagree for S = {coeffs}, g = {g}",
            )

    def _additivity(self, result: SuiteResult) -> None:
        rng = self._rng("additivity")
        for _ in range(self.trials):
            initial, pieces = random_piece_sequence(rng, rng.randint(0, 12))
            composed = compose_detailed(pieces, initial)
            delta = composed.delta
            point = collapse(delta, {j: "*" for j in initial})
            result.check(
                point.alexander("*") == (delta.dgr_w - delta.dgr_z) / 2,
                f"collapsed Alexander change differs from the Maslov difference for {pieces}",
            )
        for _ in range(self.trials):
            T = random_topology(rng)
            delta = topology_delta(T)
            collapsed = collapse(delta, {j: "*" for j in T.labels}).alexander("*")
            result.check(
                collapsed == (grw_change(T) - grz_change(T)) / 2,
                "collapsed Alexander change differs from (dgr_w - dgr_z) / 2",
            )
            t = Fraction(rng.randint(0, 12), rng.randint(1, 6))
            if t <= 2:
                result.check(
                    grt_change(T, t) == delta.grt(t),
                    f"gr_t change at t = {format_rational(t)} is not the convex combination",
                )

    def _conjugation(self, result: SuiteResult) -> None:
        grid = t_grid(6)
        for name, C in knot_fixtures().items():
            conj = conjugate(C)
            for t in grid:
                result.check(
                    upsilon_at(conj, t) == upsilon_at(C, 2 - t),
                    f"conjugation symmetry fails for {name} at t = {format_rational(t)}",
                )
        pairs = [
            (PieceKind.QUASI_STAB_S, PieceKind.QUASI_STAB_T),
            (PieceKind.BAND_W, PieceKind.BAND_Z),
            (PieceKind.DISK_STAB, PieceKind.DISK_STAB),
        ]
        for kind, mirror in pairs:
            result.check(
                conjugate_delta(piece_delta(ElementaryPiece(kind)))
                == piece_delta(ElementaryPiece(mirror)),
                f"conjugating {kind.value} does not give {mirror.value}",
            )

    def _negdef(self, result: SuiteResult) -> None:
        identity = identity_topology({DEFAULT_KNOT_LABEL: 1})
        identity_map = negdef_knot_map(identity, 0, 0)
        result.check(identity_map.exponents == (0, 0), "identity cobordism map is not 1 -> 1")
        result.check(closed_surface_map(0, 0) == (0, 0), "2-knot map is not the identity")
        rng = self._rng("negdef")
        for _ in range(self.trials):
            g_w, g_z = rng.randint(0, 5), rng.randint(0, 5)
            # S^4 minus two balls: chi = 0, sigma = 0, c1 = 0
            knot_map = negdef_knot_map(identity, g_w, g_z)
            result.check(
                knot_map.exponents == closed_surface_map(g_w, g_z),
                f"closed-surface map disagrees for genera ({g_w}, {g_z})",
            )
            other = KnotMap(Fraction(rng.randint(-6, 0)), Fraction(rng.randint(-6, 0)))
            composite = knot_map.then(other)
            result.check(
                composite.exponents
                == (knot_map.u_exponent + other.u_exponent, knot_map.v_exponent + other.v_exponent),
                "composite map exponents do not add",
            )
        blow_up = CobordismTopology(
            components={DEFAULT_KNOT_LABEL: ComponentTopology(0, 0, 1, 1, 1, 1)},
            c1_sq=-1,
            chi_W=1,
            sigma_W=-1,
            w_in=1,
            w_out=1,
            z_in=1,
            z_out=1,
        )
        result.check(negdef_knot_map(blow_up, 0, 0).d1 == 0, "blow-up cobordism has d1 != 0")


def create_verifier(seed: int = 0, trials: int = 200, workers: int = 1) -> Verifier:
    """Create a verifier for the identity suites."""
    return Verifier(seed, trials, workers)
