"""Text inputs for the grading command: piece lists and YAML topology files."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from ..constants import DEFAULT_KNOT_LABEL
from ..utils.errors import DomainError, KfcSyntaxError
from ..utils.helpers import content_lines, format_rational, parse_int, read_text_file
from ..utils.logging import logger
from .gradings import CobordismTopology, ComponentTopology, GradingDelta, Label
from .pieces import ElementaryPiece, PieceKind

_COMPONENT_KEYS = {
    "pairing_c1_sigma_j",
    "int_sigma_sigma_j",
    "chi_w_j",
    "chi_z_j",
    "basepoints_in_j",
    "basepoints_out_j",
}
_REQUIRED_GLOBAL_KEYS = ("chi_w", "sigma_w", "w_in", "w_out", "z_in", "z_out")
_OPTIONAL_GLOBAL_KEYS = ("c1_sq", "pairing_c1_sigma", "int_sigma_sigma", "c1_shift_sq")


def _key_value(token: str, number: int) -> Tuple[str, str]:
    key, sep, value = token.partition("=")
    if not sep or not key or not value:
        raise KfcSyntaxError(number, f"expected key=value, got '{token}'")
    return key, value


def parse_pieces(text: str) -> Tuple[Dict[Label, int], List[ElementaryPiece]]:
    """Parse a piece list.

        link K=1 L=2
        piece QuasiStabS label=K
        piece Handle2 label=K c1_sq=-1 sigma=-1 pairing.K=1 intersection.K=-1

    The optional `link` line gives the basepoint pairs per label before the
    first piece (default: one pair on label K) and must precede every piece.

    Returns:
        The initial state and the pieces in order
    """
    state: Optional[Dict[Label, int]] = None
    pieces: List[ElementaryPiece] = []
    for number, line in content_lines(text):
        fields = line.split()
        keyword = fields[0]
        if keyword == "link":
            if state is not None or pieces:
                raise KfcSyntaxError(number, "'link' must be the first line and appear once")
            state = {}
            for token in fields[1:]:
                label, value = _key_value(token, number)
                state[label] = parse_int(value, number, 0)
            if not state:
                raise KfcSyntaxError(number, "'link' needs at least one label=count")
        elif keyword == "piece":
            if len(fields) < 2:
                raise KfcSyntaxError(number, "expected 'piece <kind> [key=value ...]'")
            pieces.append(_parse_piece(fields[1], fields[2:], state, number))
        else:
            raise KfcSyntaxError(number, f"unknown keyword '{keyword}'")
    return state or {DEFAULT_KNOT_LABEL: 1}, pieces


def _parse_piece(
    kind_text: str, tokens: List[str], state: Optional[Dict[Label, int]], number: int
) -> ElementaryPiece:
    try:
        kind = PieceKind.parse(kind_text)
    except DomainError as e:
        raise KfcSyntaxError(number, str(e)) from e

    labels = list(state or {DEFAULT_KNOT_LABEL: 1})
    label = labels[0] if len(labels) == 1 else None
    numbers: Dict[str, int] = {}
    pairings: Dict[Label, int] = {}
    intersections: Dict[Label, int] = {}
    for token in tokens:
        key, value = _key_value(token, number)
        if key == "label":
            label = value
        elif key in ("c1_sq", "sigma"):
            numbers[key] = parse_int(value, number)
        elif key.startswith("pairing."):
            pairings[key[len("pairing."):]] = parse_int(value, number)
        elif key.startswith("intersection."):
            intersections[key[len("intersection."):]] = parse_int(value, number)
        else:
            raise KfcSyntaxError(number, f"unknown piece field '{key}'")

    if label is None:
        raise KfcSyntaxError(number, "piece needs label=<label> when the link has several labels")
    if kind is PieceKind.HANDLE_2 and ("c1_sq" not in numbers or "sigma" not in numbers):
        raise KfcSyntaxError(number, "Handle2 needs c1_sq= and sigma=")
    try:
        return ElementaryPiece(
            kind,
            label,
            numbers.get("c1_sq", 0),
            numbers.get("sigma", 0),
            pairings,
            intersections,
        )
    except DomainError as e:
        raise KfcSyntaxError(number, str(e)) from e


def _as_int(value: Any, where: str, allow_none: bool = False) -> Optional[int]:
    if value is None and allow_none:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{where} must be an integer, got {value!r}")
    return value


def parse_topology(text: str) -> CobordismTopology:
    """Parse a YAML topology summary.

    Keys are matched case-insensitively; `c1_sq: null` marks undefined
    Maslov gradings.

    Raises:
        KfcSyntaxError: not YAML, or not a mapping
        DomainError: missing or ill-typed fields
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise KfcSyntaxError(mark.line + 1 if mark else 1, f"invalid YAML: {e}") from e
    if not isinstance(data, dict):
        raise KfcSyntaxError(1, "topology file must be a YAML mapping")
    data = {str(key).lower(): value for key, value in data.items()}

    missing = [key for key in _REQUIRED_GLOBAL_KEYS if key not in data]
    if missing or "components" not in data:
        raise DomainError(f"topology file is missing: {', '.join(missing or ['components'])}")
    unknown = set(data) - set(_REQUIRED_GLOBAL_KEYS) - set(_OPTIONAL_GLOBAL_KEYS) - {"components"}
    if unknown:
        raise DomainError(f"unknown topology fields: {', '.join(sorted(unknown))}")

    raw_components = data["components"]
    if not isinstance(raw_components, dict) or not raw_components:
        raise DomainError("'components' must map each label to its data")
    components: Dict[Label, ComponentTopology] = {}
    for label, raw in raw_components.items():
        if not isinstance(raw, dict):
            raise DomainError(f"component '{label}' must be a mapping")
        fields = {str(key).lower(): value for key, value in raw.items()}
        extra = set(fields) - _COMPONENT_KEYS
        if extra:
            raise DomainError(f"component '{label}' has unknown fields: {', '.join(sorted(extra))}")
        components[str(label)] = ComponentTopology(
            **{
                key: _as_int(
                    value,
                    f"{label}.{key}",
                    allow_none=key.startswith("basepoints"),
                )
                for key, value in fields.items()
            }
        )

    topology = CobordismTopology(
        components=components,
        c1_sq=_as_int(data.get("c1_sq"), "c1_sq", allow_none=True),
        chi_W=_as_int(data["chi_w"], "chi_W"),
        sigma_W=_as_int(data["sigma_w"], "sigma_W"),
        w_in=_as_int(data["w_in"], "w_in"),
        w_out=_as_int(data["w_out"], "w_out"),
        z_in=_as_int(data["z_in"], "z_in"),
        z_out=_as_int(data["z_out"], "z_out"),
        pairing_c1_sigma=_as_int(data.get("pairing_c1_sigma"), "pairing_c1_Sigma", True),
        int_sigma_sigma=_as_int(data.get("int_sigma_sigma"), "int_Sigma_Sigma", True),
        c1_shift_sq=_as_int(data.get("c1_shift_sq"), "c1_shift_sq", True),
    )
    logger.debug(f"Parsed topology with labels {', '.join(topology.labels)}")
    return topology


def read_pieces(file_path: Path) -> Tuple[Dict[Label, int], List[ElementaryPiece]]:
    logger.grading(f"Loading piece list from {file_path}")
    return parse_pieces(read_text_file(file_path))


def read_topology(file_path: Path) -> CobordismTopology:
    logger.grading(f"Loading topology from {file_path}")
    return parse_topology(read_text_file(file_path))


def _format_optional(value: Optional[Any]) -> str:
    return "undefined" if value is None else format_rational(value)


def format_delta(
    delta: GradingDelta,
    labels: Optional[List[Label]] = None,
    grt: Optional[Tuple[Any, Optional[Any]]] = None,
) -> str:
    """Report lines `dA[j]`, `dgr_w`, `dgr_z` and optionally `dgr_t`, tab separated.

    Args:
        delta: The grading change to report
        labels: Labels to list (default: those present in delta)
        grt: Optional pair (t, gr_t change) appended as a `dgr_t` line
    """
    lines = [
        f"dA[{j}]\t{format_rational(delta.alexander(j))}"
        for j in (labels if labels is not None else list(delta.dA))
    ]
    lines.append(f"dgr_w\t{_format_optional(delta.dgr_w)}")
    lines.append(f"dgr_z\t{_format_optional(delta.dgr_z)}")
    if grt is not None:
        t, value = grt
        lines.append(f"dgr_t[{format_rational(t)}]\t{_format_optional(value)}")
    return "\n".join(lines) + "\n"
