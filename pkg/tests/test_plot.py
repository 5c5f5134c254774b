from fractions import Fraction

import pytest

from stabsys.core import StabError
from stabsys.plot import chamber_svg, tick_positions, write_svg
from stabsys.walls import chamber_scan
from stabsys.core import ClassVector


def test_tick_position_examples():
    kept, clipped = tick_positions((1, 6), [3])
    assert kept == [(3, Fraction(2, 5))] and clipped == []
    kept, clipped = tick_positions((1, 6), [7])
    assert kept == [] and clipped == [7]
    with pytest.raises(StabError):
        tick_positions((2, 2), [])


def test_single_wall_svg():
    rep = chamber_scan(-ClassVector(1, 0, 2), 1, 3, (1, 6), 5).to_json()
    svg = chamber_svg(rep)
    assert svg.count('class="wall"') == 1 and 'data-rel="2/5"' in svg
    assert svg.count('class="chamber"') == 2


def test_no_walls_single_band():
    svg = chamber_svg({"gamma_range": ["1", "10"], "walls": [], "chambers": []})
    assert svg.count('class="chamber"') == 1 and 'class="wall"' not in svg


def test_clipped_wall_in_metadata():
    svg = chamber_svg({"gamma_range": ["1", "2"], "walls": [{"gamma0": "5/2"}]})
    assert 'class="wall"' not in svg and "outside range: 5/2" in svg


def test_byte_stable(tmp_path):
    rep = chamber_scan(-ClassVector(1, 0, 2), 1, 3, (1, 6), 5).to_json()
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    write_svg(rep, a)
    write_svg(rep, b)
    assert a.read_bytes() == b.read_bytes()
    with pytest.raises(StabError):
        write_svg(rep, tmp_path / "missing" / "x.svg")
