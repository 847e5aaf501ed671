import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contactknots.front import (
    GAMMA,
    TREFOIL,
    UNKNOT,
    Birth,
    Crossing,
    Death,
    FrontDiagram,
    FrontError,
    format_front,
    orient,
    parse_front,
    reverse,
    rotation_number,
    segments,
    self_linking_of_pushoff,
    stabilize,
    thurston_bennequin,
    writhe,
)
from contactknots.sampling import random_front

from oracles import front_geometry
from strategies import fronts

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def invariants(front):
    of = orient(front)
    return thurston_bennequin(of), rotation_number(of), self_linking_of_pushoff(of)


class TestParse:
    def test_minimal_unknot(self):
        f = parse_front("b 1; d 1")
        assert f.events == (Birth(1), Death(1))
        assert f.cusp_count == 2 and f.crossing_count == 0

    def test_lower_crossing_example(self):
        f = parse_front("b 1; b 1; x 2 over=lower; d 1; d 1")
        assert f.cusp_count == 4
        assert f.crossing_count == 1
        assert not f.is_legendrian()
        assert len(orient(f).components) == 1

    def test_newlines_and_comments(self):
        f = parse_front("# two cusps\nb 1\n\nd 1  # close\n")
        assert f == UNKNOT

    @pytest.mark.parametrize("text, index", [
        ("d 1", 0),
        ("b 1; d 2", 1),
        ("b 1; x 2", 1),
        ("b 1; b 4", 1),
        ("b 1", None),
        ("b 0; d 1", 0),
    ])
    def test_invalid(self, text, index):
        with pytest.raises(FrontError) as exc:
            parse_front(text)
        if index is not None:
            assert exc.value.event == index

    @pytest.mark.parametrize("text", ["q 1", "b", "b 1 over=upper; d 1", "x 1 over=sideways"])
    def test_malformed(self, text):
        with pytest.raises(FrontError):
            parse_front(text)

    def test_default_over_is_upper(self):
        assert parse_front("b 1; b 2; x 3; x 3; x 3; d 2; d 1") == TREFOIL
        assert all(e.over == "upper" for e in TREFOIL.events if isinstance(e, Crossing))

    @given(fronts(knot=False, legendrian=None))
    def test_round_trip(self, f):
        assert parse_front(format_front(f)) == f

    @pytest.mark.parametrize("name, const", [("unknot", UNKNOT), ("gamma", GAMMA), ("trefoil", TREFOIL)])
    def test_fixture_files(self, name, const):
        assert parse_front((FIXTURES / f"{name}.front").read_text()) == const


class TestOrientation:
    def test_unknot(self):
        of = orient(UNKNOT)
        assert of.directions == (1, -1)
        assert of.cusp_counts() == (1, 1)

    def test_gamma(self):
        assert orient(GAMMA).cusp_counts() == (1, 3)

    @given(fronts(knot=False))
    def test_cusp_counts_sum(self, f):
        of = orient(f)
        up, down = of.cusp_counts()
        assert up + down == f.cusp_count
        per = [of.cusp_counts(c) for c in range(len(of.components))]
        assert sum(u for u, _ in per) == up and sum(d for _, d in per) == down

    @given(fronts())
    def test_reversal(self, f):
        of = orient(f)
        rev = reverse(of)
        assert rev.cusp_counts() == of.cusp_counts()[::-1]
        assert writhe(rev) == writhe(of)
        assert thurston_bennequin(rev) == thurston_bennequin(of)
        assert rotation_number(rev) == -rotation_number(of)

    def test_reverse_one_component_of_link(self):
        f = parse_front("b 1; b 1; x 2; x 2; d 1; d 1")
        of = orient(f)
        assert len(of.components) == 2
        assert writhe(of) == -2
        assert writhe(reverse(of, 0)) == 2
        assert writhe(reverse(of)) == -2

    def test_matches_geometric_model(self):
        rng = random.Random(7)
        for _ in range(300):
            f = random_front(rng, knot=False, legendrian=rng.random() < 0.5)
            of = orient(f)
            up, down = of.cusp_counts()
            assert front_geometry(f) == (writhe(of), up, down, len(of.components))


class TestInvariants:
    @pytest.mark.parametrize("front, w", [(UNKNOT, 0), (GAMMA, 0), (TREFOIL, 3)])
    def test_writhe(self, front, w):
        assert writhe(orient(front)) == w

    @pytest.mark.parametrize("front, expected", [
        (UNKNOT, (-1, 0, -1)),
        (GAMMA, (-2, 1, -3)),
        (TREFOIL, (1, 0, 1)),
    ])
    def test_classical(self, front, expected):
        assert invariants(front) == expected

    def test_rejects_links(self):
        link = parse_front("b 1; b 1; x 2; x 2; d 1; d 1")
        with pytest.raises(FrontError, match="components"):
            thurston_bennequin(orient(link))
        with pytest.raises(FrontError):
            rotation_number(orient(link))

    def test_rejects_non_legendrian(self):
        f = parse_front("b 1; b 2; x 3 over=lower; x 3; x 3; d 2; d 1")
        with pytest.raises(FrontError, match="Legendrian"):
            thurston_bennequin(orient(f))
        assert writhe(orient(f)) == 1

    @given(fronts())
    def test_tb_plus_r_parity(self, f):
        # tb + r is odd for every Legendrian knot
        tb, r, _ = invariants(f)
        assert (tb + r) % 2 == 1


class TestStabilization:
    @pytest.mark.parametrize("sign, r", [("+", 1), ("-", -1)])
    def test_unknot(self, sign, r):
        s = stabilize(UNKNOT, sign, (0, 1))
        assert s.cusp_count == 4
        assert invariants(s) == (-2, r, -2 - r)

    def test_gamma_is_a_stabilized_unknot(self):
        assert invariants(stabilize(UNKNOT, "+", (0, 1))) == invariants(GAMMA)

    @given(fronts(), st.data())
    def test_laws(self, f, data):
        tb, r, sl = invariants(f)
        loc = data.draw(st.sampled_from(segments(f)))
        plus = stabilize(f, "+", loc)
        minus = stabilize(f, "minus", loc)
        assert invariants(plus) == (tb - 1, r + 1, sl - 2)
        assert invariants(minus) == (tb - 1, r - 1, sl)
        assert len(orient(plus).components) == 1

    @pytest.mark.parametrize("loc", [(-1, 1), (2, 1), (0, 3), (0, 0)])
    def test_bad_location(self, loc):
        with pytest.raises(FrontError):
            stabilize(UNKNOT, "+", loc)

    def test_bad_sign(self):
        with pytest.raises(FrontError):
            stabilize(UNKNOT, "*", (0, 1))

    def test_inserted_after_event(self):
        s = stabilize(TREFOIL, "-", (2, 2))
        assert s.events[:3] == TREFOIL.events[:3]
        assert s.events[5:] == TREFOIL.events[3:]
        assert isinstance(s.events[3], Birth) and isinstance(s.events[4], Death)


def test_frozen_and_hashable():
    assert len({UNKNOT, parse_front("b 1; d 1"), GAMMA}) == 2
    with pytest.raises(Exception):
        UNKNOT.events = ()
    assert FrontDiagram((Birth(1), Death(1))) == UNKNOT
