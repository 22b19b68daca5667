"""Exact rationals and continuous piecewise-linear functions on [0, 2].

Upsilon invariants and the M_t envelopes are PL with rational breakpoints, so
everything here is exact: values are `fractions.Fraction` and no tolerance
parameter exists anywhere. Functions are immutable and kept in canonical form
(no interior breakpoint where the slope does not change), which makes `==`
a decision procedure for equality of functions.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from ..utils.errors import DomainError, KfcSyntaxError
from ..utils.helpers import content_lines, format_rational, parse_rational

Rational = Fraction
RationalLike = Union[Fraction, int, str]
Breakpoint = Tuple[Fraction, Fraction]

DOMAIN_START = Fraction(0)
DOMAIN_END = Fraction(2)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or `p/q` string to a Fraction. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"floating-point value {value!r} is not allowed; use p/q")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise DomainError(f"cannot interpret {value!r} as a rational")


def _check_in_domain(t: Fraction) -> None:
    if t < DOMAIN_START or t > DOMAIN_END:
        raise DomainError(f"t = {format_rational(t)} is outside [0, 2]")


@dataclass(frozen=True)
class Line:
    """The affine function t -> intercept + slope * t."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", to_rational(self.slope))
        object.__setattr__(self, "intercept", to_rational(self.intercept))

    def at(self, t: RationalLike) -> Fraction:
        """Evaluate the line at t."""
        return self.intercept + self.slope * to_rational(t)


def _slope(p: Breakpoint, q: Breakpoint) -> Fraction:
    return (q[1] - p[1]) / (q[0] - p[0])


def _canonical(points: Sequence[Breakpoint]) -> Tuple[Breakpoint, ...]:
    """Drop interior breakpoints at which the slope does not change."""
    kept: List[Breakpoint] = [points[0]]
    for index in range(1, len(points) - 1):
        if _slope(kept[-1], points[index]) != _slope(points[index], points[index + 1]):
            kept.append(points[index])
    kept.append(points[-1])
    return tuple(kept)


@dataclass(frozen=True)
class PLFunction:
    """A continuous PL function on [0, 2], given by its breakpoints.

    The function is the linear interpolation between consecutive breakpoints.
    Construction validates the domain and canonicalizes, so two PLFunctions
    compare equal exactly when they are the same function.
    """

    breakpoints: Tuple[Breakpoint, ...]

    def __post_init__(self) -> None:
        points = tuple((to_rational(t), to_rational(v)) for t, v in self.breakpoints)
        if len(points) < 2:
            raise DomainError("a PL function needs at least the breakpoints t = 0 and t = 2")
        if points[0][0] != DOMAIN_START or points[-1][0] != DOMAIN_END:
            raise DomainError("PL breakpoints must start at t = 0 and end at t = 2")
        for left, right in zip(points, points[1:]):
            if left[0] >= right[0]:
                raise DomainError(
                    f"PL breakpoints must have strictly increasing t "
                    f"({format_rational(left[0])} then {format_rational(right[0])})"
                )
        object.__setattr__(self, "breakpoints", _canonical(points))

    @property
    def ts(self) -> List[Fraction]:
        """The breakpoint t-coordinates."""
        return [t for t, _ in self.breakpoints]

    def __call__(self, t: RationalLike) -> Fraction:
        return pl_eval(self, t)

    def __str__(self) -> str:
        return ", ".join(
            f"({format_rational(t)}, {format_rational(v)})" for t, v in self.breakpoints
        )


def pl_from_points(points: Iterable[Tuple[RationalLike, RationalLike]]) -> PLFunction:
    """Build a canonical PLFunction from (t, value) samples covering 0 and 2."""
    return PLFunction(tuple((to_rational(t), to_rational(v)) for t, v in points))


def pl_zero() -> PLFunction:
    """The zero function on [0, 2]."""
    return PLFunction(((DOMAIN_START, Fraction(0)), (DOMAIN_END, Fraction(0))))


def pl_line(line: Line) -> PLFunction:
    """A single line restricted to [0, 2]."""
    return PLFunction(((DOMAIN_START, line.at(DOMAIN_START)), (DOMAIN_END, line.at(DOMAIN_END))))


def pl_eval(f: PLFunction, t: RationalLike) -> Fraction:
    """Evaluate f at t in [0, 2] by exact linear interpolation."""
    t = to_rational(t)
    _check_in_domain(t)
    ts = f.ts
    index = bisect_right(ts, t)
    if index == len(ts):
        return f.breakpoints[-1][1]
    left = f.breakpoints[index - 1]
    if left[0] == t:
        return left[1]
    right = f.breakpoints[index]
    return left[1] + _slope(left, right) * (t - left[0])


def _merged_ts(*functions: PLFunction) -> List[Fraction]:
    merged = set()
    for f in functions:
        merged.update(f.ts)
    return sorted(merged)


def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise sum."""
    return PLFunction(tuple((t, pl_eval(f, t) + pl_eval(g, t)) for t in _merged_ts(f, g)))


def pl_neg(f: PLFunction) -> PLFunction:
    """Pointwise negation."""
    return PLFunction(tuple((t, -v) for t, v in f.breakpoints))


def pl_sub(f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise difference f - g."""
    return pl_add(f, pl_neg(g))


def pl_scale(f: PLFunction, c: RationalLike) -> PLFunction:
    """Pointwise product with the constant c."""
    c = to_rational(c)
    return PLFunction(tuple((t, c * v) for t, v in f.breakpoints))


def pl_max(f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise maximum, inserting the crossing points of f and g."""
    ts = _merged_ts(f, g)
    points: List[Breakpoint] = []
    for index, t in enumerate(ts):
        fv, gv = pl_eval(f, t), pl_eval(g, t)
        if index > 0:
            t0 = ts[index - 1]
            d0 = pl_eval(f, t0) - pl_eval(g, t0)
            d1 = fv - gv
            # f - g is linear on [t0, t]; a strict sign change means one crossing inside.
            if (d0 < 0 < d1) or (d1 < 0 < d0):
                crossing = t0 + (t - t0) * d0 / (d0 - d1)
                points.append((crossing, pl_eval(f, crossing)))
        points.append((t, max(fv, gv)))
    return PLFunction(tuple(points))


def pl_min(f: PLFunction, g: PLFunction) -> PLFunction:
    """Pointwise minimum."""
    return pl_neg(pl_max(pl_neg(f), pl_neg(g)))


def pl_reflect(f: PLFunction) -> PLFunction:
    """The function t -> f(2 - t)."""
    return PLFunction(tuple((DOMAIN_END - t, v) for t, v in reversed(f.breakpoints)))


def pl_leq(f: PLFunction, g: PLFunction) -> bool:
    """True iff f(t) <= g(t) on all of [0, 2].

    f - g is linear between merged breakpoints, so checking those is exact.
    """
    return all(pl_eval(f, t) <= pl_eval(g, t) for t in _merged_ts(f, g))


def pl_initial_slope(f: PLFunction) -> Fraction:
    """Slope of the first linear piece."""
    return _slope(f.breakpoints[0], f.breakpoints[1])


def _crossing(a: Line, b: Line) -> Fraction:
    return (a.intercept - b.intercept) / (b.slope - a.slope)


def pl_upper_envelope(lines: Sequence[Line]) -> PLFunction:
    """Pointwise maximum of finitely many lines, restricted to [0, 2].

    Lines are sorted by slope and dominated lines are removed while building
    the upper hull; the hull corners inside (0, 2) become the breakpoints.
    """
    if not lines:
        raise DomainError("upper envelope of an empty set of lines")

    best_by_slope = {}
    for line in lines:
        current = best_by_slope.get(line.slope)
        if current is None or line.intercept > current.intercept:
            best_by_slope[line.slope] = line
    ordered = [best_by_slope[slope] for slope in sorted(best_by_slope)]

    hull: List[Line] = []
    for line in ordered:
        while len(hull) >= 2 and _crossing(hull[-2], line) <= _crossing(hull[-2], hull[-1]):
            hull.pop()
        hull.append(line)

    ts = [DOMAIN_START]
    for left, right in zip(hull, hull[1:]):
        corner = _crossing(left, right)
        if DOMAIN_START < corner < DOMAIN_END:
            ts.append(corner)
    ts.append(DOMAIN_END)
    return PLFunction(tuple((t, max(line.at(t) for line in hull)) for t in ts))


def pl_sample(f: PLFunction, step: RationalLike) -> List[Breakpoint]:
    """Sample f on the grid 0, step, 2*step, ... and always at t = 2."""
    step = to_rational(step)
    if step <= 0:
        raise DomainError(f"sampling step must be positive, got {format_rational(step)}")
    samples: List[Breakpoint] = []
    t = DOMAIN_START
    while t < DOMAIN_END:
        samples.append((t, pl_eval(f, t)))
        t += step
    samples.append((DOMAIN_END, pl_eval(f, DOMAIN_END)))
    return samples


def pl_serialize(f: PLFunction) -> str:
    """One line per breakpoint: `t<TAB>value`, rationals as p/q or integers."""
    return "".join(
        f"{format_rational(t)}\t{format_rational(v)}\n" for t, v in f.breakpoints
    )


def pl_parse(text: str) -> PLFunction:
    """Inverse of pl_serialize; blank lines and `#` comments are ignored."""
    points: List[Breakpoint] = []
    last_line = 0
    for number, line in content_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise KfcSyntaxError(number, f"expected 't<TAB>value', got '{line}'")
        points.append((parse_rational(fields[0], number), parse_rational(fields[1], number)))
        last_line = number
    try:
        return PLFunction(tuple(points))
    except DomainError as e:
        raise KfcSyntaxError(last_line, str(e)) from e
