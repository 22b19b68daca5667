"""The kfc v1 text format for bigraded complexes.

    # kfc v1
    field F2
    generator <name> grw <rational> grz <rational>
    edge <src> <dst> U <int> V <int>

`#` comment lines and blank lines are ignored after the header line.
"""

from pathlib import Path
from typing import Dict, List

from ..constants import KFC_FIELD, KFC_HEADER
from ..utils.errors import KfcSyntaxError
from ..utils.helpers import format_rational, parse_int, parse_rational, read_text_file
from ..utils.logging import logger
from .bicomplex import ChainComplexUV, Edge, Generator, ensure_valid


def serialize(C: ChainComplexUV) -> str:
    """Canonical kfc text: generators by name, edges by (src, dst)."""
    lines = [KFC_HEADER, f"field {KFC_FIELD}"]
    for g in C.generators:
        lines.append(
            f"generator {g.name} grw {format_rational(g.gr_w)} grz {format_rational(g.gr_z)}"
        )
    for e in C.edges:
        lines.append(f"edge {e.src} {e.dst} U {e.a} V {e.b}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> ChainComplexUV:
    """Parse kfc text and validate the resulting complex.

    Raises:
        KfcSyntaxError: malformed line, with its line number
        ComplexValidationError: the complex breaks homogeneity or d^2 = 0
    """
    raw_lines = text.splitlines()
    if not raw_lines or raw_lines[0].strip() != KFC_HEADER:
        raise KfcSyntaxError(1, f"first line must be '{KFC_HEADER}'")

    field_seen = False
    generators: Dict[str, Generator] = {}
    edges: List[Edge] = []
    for number, raw in enumerate(raw_lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        keyword = fields[0]

        if keyword == "field":
            if len(fields) != 2 or fields[1] != KFC_FIELD:
                raise KfcSyntaxError(number, f"only 'field {KFC_FIELD}' is supported")
            if field_seen:
                raise KfcSyntaxError(number, "duplicate 'field' line")
            field_seen = True

        elif keyword == "generator":
            if len(fields) != 6 or fields[2] != "grw" or fields[4] != "grz":
                raise KfcSyntaxError(number, "expected 'generator <name> grw <r> grz <r>'")
            name = fields[1]
            if name in generators:
                raise KfcSyntaxError(number, f"duplicate generator name '{name}'")
            generators[name] = Generator(
                name, parse_rational(fields[3], number), parse_rational(fields[5], number)
            )

        elif keyword == "edge":
            if len(fields) != 7 or fields[3] != "U" or fields[5] != "V":
                raise KfcSyntaxError(number, "expected 'edge <src> <dst> U <int> V <int>'")
            src, dst = fields[1], fields[2]
            for endpoint in (src, dst):
                if endpoint not in generators:
                    raise KfcSyntaxError(number, f"edge mentions undeclared generator '{endpoint}'")
            edges.append(
                Edge(src, dst, parse_int(fields[4], number, 0), parse_int(fields[6], number, 0))
            )

        else:
            raise KfcSyntaxError(number, f"unknown keyword '{keyword}'")

    if not field_seen:
        raise KfcSyntaxError(len(raw_lines), f"missing 'field {KFC_FIELD}' line")

    C = ChainComplexUV(tuple(generators.values()), tuple(edges))
    logger.debug(f"Parsed complex with {len(C.generators)} generators and {len(C.edges)} edges")
    return ensure_valid(C)


def read_complex(file_path: Path) -> ChainComplexUV:
    """Read and validate a kfc file."""
    logger.complex(f"Loading complex from {file_path}")
    return parse(read_text_file(file_path))
