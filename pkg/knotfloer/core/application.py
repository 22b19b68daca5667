"""Main application class for knotfloer."""

from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ..algebra.rational_pl import PLFunction, pl_parse, pl_sample, pl_serialize
from ..bounds import (
    crossing_change_bounds,
    genus_bounds,
    m_t_charvec,
    m_t_class,
    m_t_scalar,
    tau_interval,
    tau_upper_bound,
    torus_upsilon,
    upsilon_lower_bound,
)
from ..cobordism import (
    compose_detailed,
    format_delta,
    grt_change,
    read_pieces,
    read_topology,
    topology_delta,
)
from ..complexes import (
    ChainComplexUV,
    conjugate,
    read_complex,
    serialize,
    staircase_torus_knot,
)
from ..config.manager import Settings, create_config_manager
from ..constants import KFC_HEADER, VERIFY_SUITES
from ..invariants import UpsilonResult, tau, upsilon_pl, upsilon_value
from ..utils.errors import DomainError
from ..utils.helpers import format_rational, read_text_file
from ..utils.logging import logger
from .verify import SuiteResult, create_verifier


def _class_text(coeffs: Sequence[int]) -> str:
    return ", ".join(str(s) for s in coeffs)


class KnotFloer:
    """Wires configuration and logging to the library calls behind each command."""

    def __init__(self, config_dir: Optional[str] = None, debug: bool = False):
        """Initialize the knotfloer application.

        Args:
            config_dir: Custom configuration directory path
            debug: Enable debug logging
        """
        # Set up logging first
        logger.set_debug(debug)

        config_path = Path(config_dir) if config_dir else None
        self.config_manager = create_config_manager(config_path)
        self.settings: Settings = self.config_manager.settings

        # Update debug setting from config if not explicitly set
        if not debug and self.settings.enable_debug:
            logger.set_debug(True)

        logger.debug("Application initialization complete")

    def load_complex(
        self, path: Optional[str] = None, torus: Optional[Sequence[int]] = None
    ) -> ChainComplexUV:
        """A complex from a kfc file or the staircase of a torus knot."""
        if torus is not None:
            p, q = torus
            logger.complex(f"Building staircase complex of T({p},{q})")
            return staircase_torus_knot(min(p, q), max(p, q))
        if path is None:
            raise DomainError("give a kfc file or --torus p q")
        return read_complex(Path(path))

    def upsilon_at(self, C: ChainComplexUV, t: Fraction) -> UpsilonResult:
        return upsilon_value(C, t, self.settings.allow_non_knot)

    def upsilon_pl(self, C: ChainComplexUV, Q: Optional[int] = None) -> PLFunction:
        return upsilon_pl(
            C,
            Q if Q is not None else self.settings.denominator_bound,
            workers=self.settings.workers,
            allow_non_knot=self.settings.allow_non_knot,
        )

    def tau(self, C: ChainComplexUV) -> Fraction:
        value = tau(C)
        logger.tau(f"tau = {format_rational(value)} over {len(C.generators)} generators")
        return value

    def load_upsilon_function(self, path: str) -> PLFunction:
        """Upsilon from a PL file, or computed from a kfc file."""
        text = read_text_file(Path(path))
        if text.lstrip().startswith(KFC_HEADER):
            return self.upsilon_pl(read_complex(Path(path)))
        return pl_parse(text)

    def mt(self, coeffs: Sequence[int], scalar: bool, charvec: bool) -> PLFunction:
        if scalar:
            return m_t_scalar(coeffs[0])
        return m_t_charvec(coeffs) if charvec else m_t_class(coeffs)

    def upsilon_bound(self, upsilon_K1: PLFunction, coeffs: Sequence[int], genus: int) -> PLFunction:
        logger.bound(f"Upsilon bound for class ({_class_text(coeffs)}) and genus {genus}")
        return upsilon_lower_bound(upsilon_K1, coeffs, genus)

    def tau_bound(self, tau_K1: Fraction, coeffs: Sequence[int], genus: int) -> Fraction:
        logger.bound(f"tau bound for class ({_class_text(coeffs)}) and genus {genus}")
        return tau_upper_bound(tau_K1, coeffs, genus)

    def crossing_change(self, upsilon_Kplus: PLFunction) -> Tuple[PLFunction, PLFunction]:
        return crossing_change_bounds(upsilon_Kplus)

    def genus_band(self, upsilon_K1: PLFunction, genus: int) -> Tuple[PLFunction, PLFunction]:
        return genus_bounds(upsilon_K1, genus)

    def tau_band(self, tau_K1: Fraction, genus: int) -> Tuple[Fraction, Fraction]:
        return tau_interval(tau_K1, genus)

    def torus(self, p: int, q: int) -> PLFunction:
        return torus_upsilon(p, q)

    def grading_report(
        self,
        pieces_path: Optional[str] = None,
        topology_path: Optional[str] = None,
        t: Optional[Fraction] = None,
    ) -> str:
        """The grading change of a piece list or of a topology file, formatted."""
        if pieces_path is not None:
            state, pieces = read_pieces(Path(pieces_path))
            composition = compose_detailed(pieces, state)
            delta = composition.delta
            labels = list(composition.topology.labels)
            grt = None if t is None else (t, grt_change(composition.topology, t))
        elif topology_path is not None:
            topology = read_topology(Path(topology_path))
            delta = topology_delta(topology)
            labels = list(topology.labels)
            grt = None if t is None else (t, grt_change(topology, t))
        else:
            raise DomainError("give --pieces or --topology")
        return format_delta(delta, labels, grt)

    def conjugate_text(self, C: ChainComplexUV) -> str:
        return serialize(conjugate(C))

    def format_pl(self, f: PLFunction, csv: bool = False, step: Optional[Fraction] = None) -> str:
        """PL serialization, or `t,value` samples on a grid when csv is set."""
        if not csv:
            return pl_serialize(f)
        samples = pl_sample(f, step if step is not None else self.settings.csv_step)
        lines = ["t,value"] + [f"{format_rational(t)},{format_rational(v)}" for t, v in samples]
        return "\n".join(lines) + "\n"

    def verify(self, suite: str) -> List[SuiteResult]:
        verifier = create_verifier(
            self.settings.random_seed, self.settings.random_trials, self.settings.workers
        )
        names = VERIFY_SUITES if suite == "all" else [suite]
        return verifier.run_many(names)


def create_application(config_dir: Optional[str] = None, debug: bool = False) -> KnotFloer:
    """Create and initialize a knotfloer application.

    Args:
        config_dir: Custom configuration directory path
        debug: Enable debug logging

    Returns:
        Initialized KnotFloer instance
    """
    return KnotFloer(config_dir, debug)
