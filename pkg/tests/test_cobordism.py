"""Tests for cobordism grading formulas, elementary pieces and their file formats."""

import random
from fractions import Fraction

import pytest

from knotfloer.cobordism import (
    CobordismTopology,
    ComponentTopology,
    ElementaryPiece,
    GradingDelta,
    KnotMap,
    PieceKind,
    alexander_change,
    chern_shift,
    closed_surface_map,
    collapse,
    compose,
    compose_detailed,
    conjugate_delta,
    format_delta,
    glue,
    grt_change,
    grw_change,
    grz_change,
    identity_topology,
    internal_connected_sum_map,
    negdef_knot_map,
    parse_pieces,
    parse_topology,
    piece_delta,
    piece_topology,
    read_pieces,
    topology_delta,
    variable_action,
)
from knotfloer.core import random_piece_sequence, random_topology
from knotfloer.utils.errors import DomainError, KfcSyntaxError

HALF = Fraction(1, 2)


def handle_two_topology(**overrides):
    fields = dict(
        components={"K": ComponentTopology(1, -1, 1, 1, 1, 1)},
        c1_sq=-1,
        chi_W=1,
        sigma_W=-1,
        w_in=1,
        w_out=1,
        z_in=1,
        z_out=1,
    )
    fields.update(overrides)
    return CobordismTopology(**fields)


class TestGradingFormulas:
    def test_chern_shift(self):
        assert chern_shift(-1, 1, -1) == -9

    def test_handle_two(self):
        T = handle_two_topology()
        assert alexander_change(T, "K") == 1
        assert grw_change(T) == 0
        assert grz_change(T) == -2
        assert grt_change(T, 1) == -1
        assert topology_delta(T) == GradingDelta({"K": 1}, 0, -2)

    def test_undefined_maslov_changes(self):
        T = handle_two_topology(c1_sq=None)
        assert grw_change(T) is None
        assert grz_change(T) is None
        assert grt_change(T, 1) is None
        assert topology_delta(T).grt(1) is None

    def test_inconsistent_data(self):
        with pytest.raises(DomainError):
            handle_two_topology(c1_shift_sq=0)
        with pytest.raises(DomainError):
            handle_two_topology(pairing_c1_sigma=5)
        with pytest.raises(DomainError):
            handle_two_topology(z_in=2)
        with pytest.raises(DomainError, match="w_in"):
            handle_two_topology(w_in=2, z_in=2)
        without_counts = {"K": ComponentTopology(1, -1, 1, 1)}
        assert handle_two_topology(components=without_counts, w_in=2, z_in=2).w_in == 2
        assert handle_two_topology(c1_shift_sq=-9).c1_shift_sq == -9

    def test_domain_checks(self):
        T = handle_two_topology()
        with pytest.raises(DomainError):
            grt_change(T, 3)
        with pytest.raises(DomainError):
            T.component("L")

    def test_random_topologies_satisfy_identities(self):
        rng = random.Random(5)
        for _ in range(100):
            T = random_topology(rng)
            delta = topology_delta(T)
            total = collapse(delta, {j: "*" for j in T.labels}).alexander("*")
            assert total == (delta.dgr_w - delta.dgr_z) / 2
            for t in (0, HALF, 1, Fraction(5, 3), 2):
                assert grt_change(T, t) == delta.grt(t)


class TestDeltas:
    def test_equality_ignores_zero_labels(self):
        assert GradingDelta({"K": 0, "L": 1}) == GradingDelta({"L": 1})
        assert hash(GradingDelta({"K": 0})) == hash(GradingDelta())

    def test_addition_propagates_undefined(self):
        total = GradingDelta({"K": 1}, 1, None) + GradingDelta({"K": 1, "L": 2}, 1, 1)
        assert total.alexander("K") == 2
        assert total.total_alexander() == 4
        assert total.dgr_w == 2 and total.dgr_z is None

    def test_variable_action(self):
        assert variable_action("U", "K", "K") == (-1, -2, 0)
        assert variable_action("V", "K", "L") == (0, 0, -2)
        with pytest.raises(DomainError):
            variable_action("W", "K", "K")

    def test_collapse(self):
        delta = GradingDelta({"K": 1, "L": HALF}, 0, 0)
        assert collapse(delta, {"K": "*", "L": "*"}).alexander("*") == Fraction(3, 2)
        collapsed = collapse(delta, {"K": "A", "L": "A"}, targets=["A", "B"])
        assert collapsed.dA == {"A": Fraction(3, 2), "B": 0}
        with pytest.raises(DomainError):
            collapse(delta, {"K": "A"})

    def test_conjugate_delta(self):
        delta = GradingDelta({"K": HALF}, HALF, -HALF)
        assert conjugate_delta(delta) == GradingDelta({"K": -HALF}, -HALF, HALF)


class TestPieces:
    @pytest.mark.parametrize(
        "kind,expected",
        [
            (PieceKind.QUASI_STAB_S, (HALF, HALF, -HALF)),
            (PieceKind.QUASI_STAB_T, (-HALF, -HALF, HALF)),
            (PieceKind.BAND_Z, (HALF, 0, -1)),
            (PieceKind.BAND_W, (-HALF, -1, 0)),
            (PieceKind.DISK_STAB, (0, HALF, HALF)),
            (PieceKind.HANDLE_0, (0, 0, 0)),
            (PieceKind.HANDLE_4, (0, 0, 0)),
            (PieceKind.HANDLE_1, (0, HALF, HALF)),
            (PieceKind.HANDLE_3, (0, HALF, HALF)),
        ],
    )
    def test_piece_deltas(self, kind, expected):
        dA, dgr_w, dgr_z = expected
        assert piece_delta(ElementaryPiece(kind)) == GradingDelta({"K": dA}, dgr_w, dgr_z)

    @pytest.mark.parametrize("kind", [k for k in PieceKind if k is not PieceKind.HANDLE_2])
    def test_fixed_deltas_follow_from_topology(self, kind):
        piece = ElementaryPiece(kind)
        assert topology_delta(piece_topology(piece, {"K": 1})) == piece_delta(piece)

    def test_handle_two(self):
        blow_up = ElementaryPiece(PieceKind.HANDLE_2, c1_sq=-1, sigma=-1)
        assert piece_delta(blow_up) == GradingDelta({"K": 0}, 0, 0)
        linked = ElementaryPiece(
            PieceKind.HANDLE_2, c1_sq=-1, sigma=-1, pairings={"K": 1}, intersections={"K": -1}
        )
        assert piece_delta(linked) == GradingDelta({"K": 1}, 0, -2)

    def test_only_handle_two_carries_data(self):
        with pytest.raises(DomainError):
            ElementaryPiece(PieceKind.BAND_W, c1_sq=1)

    def test_kind_parsing(self):
        assert PieceKind.parse("quasistabs") is PieceKind.QUASI_STAB_S
        with pytest.raises(DomainError):
            PieceKind.parse("Handle5")

    def test_conjugate_pairs(self):
        for kind, mirror in [
            (PieceKind.QUASI_STAB_S, PieceKind.QUASI_STAB_T),
            (PieceKind.BAND_W, PieceKind.BAND_Z),
        ]:
            assert conjugate_delta(piece_delta(ElementaryPiece(kind))) == piece_delta(
                ElementaryPiece(mirror)
            )


class TestComposition:
    def test_stabilize_then_band(self):
        delta, topology = compose(
            [ElementaryPiece(PieceKind.QUASI_STAB_S), ElementaryPiece(PieceKind.BAND_W)]
        )
        assert delta == GradingDelta({"K": 0}, -HALF, -HALF)
        assert topology.labels == ("K",)

    def test_empty_composition_is_identity(self):
        delta, topology = compose([])
        assert delta == GradingDelta()
        assert topology == identity_topology({"K": 1})

    def test_pieces_must_chain(self):
        with pytest.raises(DomainError, match="piece 2"):
            compose(
                [ElementaryPiece(PieceKind.HANDLE_4), ElementaryPiece(PieceKind.QUASI_STAB_S)]
            )
        with pytest.raises(DomainError):
            compose([ElementaryPiece(PieceKind.BAND_W, label="L")])

    def test_random_sequences_are_additive(self):
        rng = random.Random(3)
        for _ in range(200):
            initial, pieces = random_piece_sequence(rng, rng.randint(0, 12))
            result = compose_detailed(pieces, initial)
            delta = result.delta
            assert delta == topology_delta(result.topology)
            point = collapse(delta, {j: "*" for j in initial})
            assert point.alexander("*") == (delta.dgr_w - delta.dgr_z) / 2

    def test_glue_checks(self):
        one = identity_topology({"K": 1})
        assert glue([one, one]) == one
        with pytest.raises(DomainError):
            glue([])
        with pytest.raises(DomainError):
            glue([one, identity_topology({"K": 2})])
        with pytest.raises(DomainError):
            glue([one, identity_topology({"L": 1})])
        with pytest.raises(DomainError):
            glue([handle_two_topology(components={"K": ComponentTopology(0, 0, 1, 1)})])


class TestKnotMaps:
    def test_identity_cobordism(self):
        knot_map = negdef_knot_map(identity_topology({"K": 1}), 0, 0)
        assert (knot_map.d1, knot_map.d2) == (0, 0)
        assert knot_map.exponents == (0, 0)
        assert closed_surface_map(0, 0) == (0, 0)

    def test_genera_become_exponents(self):
        knot_map = negdef_knot_map(identity_topology({"K": 1}), 1, 2)
        assert knot_map.exponents == (1, 2)
        assert knot_map.then(KnotMap(Fraction(-2), Fraction(0))).exponents == (2, 2)

    def test_internal_connected_sum_raises_the_genus(self):
        T = handle_two_topology()
        base = negdef_knot_map(T, 0, 1)
        summed = internal_connected_sum_map(base, 2)
        assert summed == negdef_knot_map(T, 0, 3)
        assert summed.exponents == (base.u_exponent, base.v_exponent + 2)
        assert internal_connected_sum_map(base, 2, side="w") == negdef_knot_map(T, 2, 1)
        assert internal_connected_sum_map(base, 0) == base
        with pytest.raises(DomainError):
            internal_connected_sum_map(base, -1)
        with pytest.raises(DomainError):
            internal_connected_sum_map(base, 1, side="x")

    def test_hypotheses(self):
        T = identity_topology({"K": 1})
        with pytest.raises(DomainError, match="b_2"):
            negdef_knot_map(T, 0, 0, b2_plus_zero=False)
        with pytest.raises(DomainError):
            negdef_knot_map(handle_two_topology(c1_sq=None), 0, 0)
        with pytest.raises(DomainError):
            closed_surface_map(-1, 0)


PIECES_TEXT = """\
# a two-component link
link K=1 L=2
piece QuasiStabS label=K
piece BandZ label=L
piece Handle2 label=K c1_sq=-1 sigma=-1 pairing.K=1 intersection.K=-1
"""

TOPOLOGY_YAML = """\
c1_sq: -1
chi_W: 1
sigma_W: -1
w_in: 1
w_out: 1
z_in: 1
z_out: 1
components:
  K:
    pairing_c1_Sigma_j: 1
    int_Sigma_Sigma_j: -1
    chi_w_j: 1
    chi_z_j: 1
    basepoints_in_j: 1
    basepoints_out_j: 1
"""


class TestFormats:
    def test_parse_pieces(self):
        state, pieces = parse_pieces(PIECES_TEXT)
        assert state == {"K": 1, "L": 2}
        assert [p.kind for p in pieces] == [
            PieceKind.QUASI_STAB_S,
            PieceKind.BAND_Z,
            PieceKind.HANDLE_2,
        ]
        assert pieces[2].pairings == {"K": 1}
        delta, _ = compose(pieces, state)
        assert delta.alexander("K") == Fraction(3, 2)
        assert delta.alexander("L") == HALF

    def test_default_link(self):
        state, pieces = parse_pieces("piece DiskStab\n")
        assert state == {"K": 1}
        assert pieces == [ElementaryPiece(PieceKind.DISK_STAB)]

    @pytest.mark.parametrize(
        "text,line",
        [
            ("link K=1 L=1\npiece BandW\n", 2),
            ("piece Handle2 c1_sq=-1\n", 1),
            ("piece Handle9\n", 1),
            ("piece BandW\nlink K=1\n", 2),
            ("stabilize K\n", 1),
            ("piece BandW color=red\n", 1),
            ("piece BandW c1_sq=1\n", 1),
            ("link K\n", 1),
        ],
    )
    def test_piece_syntax_errors(self, text, line):
        with pytest.raises(KfcSyntaxError) as excinfo:
            parse_pieces(text)
        assert excinfo.value.line_number == line

    def test_read_pieces(self, tmp_path):
        path = tmp_path / "cobordism.txt"
        path.write_text(PIECES_TEXT, encoding="utf-8")
        assert read_pieces(path) == parse_pieces(PIECES_TEXT)

    def test_parse_topology(self):
        T = parse_topology(TOPOLOGY_YAML)
        assert T == handle_two_topology()
        assert topology_delta(T) == GradingDelta({"K": 1}, 0, -2)

    def test_null_c1_is_undefined(self):
        T = parse_topology(TOPOLOGY_YAML.replace("c1_sq: -1", "c1_sq: null"))
        assert format_delta(topology_delta(T), list(T.labels)) == (
            "dA[K]\t1\ndgr_w\tundefined\ndgr_z\tundefined\n"
        )

    @pytest.mark.parametrize(
        "text,error",
        [
            ("- just\n- a list\n", KfcSyntaxError),
            ("chi_W: [1\n", KfcSyntaxError),
            (TOPOLOGY_YAML.replace("sigma_W: -1\n", ""), DomainError),
            (TOPOLOGY_YAML + "colour: blue\n", DomainError),
            (TOPOLOGY_YAML.replace("chi_W: 1", "chi_W: true"), DomainError),
            (TOPOLOGY_YAML.replace("chi_z_j: 1", "chi_z_j: 1\n    genus: 2"), DomainError),
            (
                TOPOLOGY_YAML.replace("w_out: 1", "w_out: 2").replace("z_out: 1", "z_out: 2"),
                DomainError,
            ),
        ],
    )
    def test_topology_errors(self, text, error):
        with pytest.raises(error):
            parse_topology(text)

    def test_format_delta(self):
        T = handle_two_topology()
        text = format_delta(topology_delta(T), ["K"], (Fraction(1), grt_change(T, 1)))
        assert text == "dA[K]\t1\ndgr_w\t0\ndgr_z\t-2\ndgr_t[1]\t-1\n"
