import os
import subprocess

import pytest

import infimax

PERIOD41 = "31" + "311" * 10 + "312" * 3
FIXED64 = "3123113122312311311312311312231223123113122312311311312311311312"


def test_minimax_words():
    assert infimax.minimax([24, 3, 14]) == PERIOD41
    assert infimax.minimax([2, 3, 1, 3]) == "422234141"
    assert infimax.minimax_power_form([24, 3, 14]) == "31 311^10 312^3"
    assert infimax.minimax_length([24, 3, 14]) == 41
    assert infimax.minimax_length([10**18, 1, 1]) == 10**18 + 2


def test_count_chain():
    record = infimax.count_chain([24, 3, 14])
    assert record["entries"] == [1, 0, 10, 3]
    assert record["terminal_power"] == 1
    assert record["chain"][0] == [24, 3, 14]
    assert record["chain"][-1] == [0, 0, 1]


def test_itinerary_roundtrip():
    entries, terminated = infimax.itinerary(3, "24/41,3/41,14/41")
    assert entries == [1, 0, 10, 3]
    assert terminated
    assert infimax.point_from_itinerary(3, entries) == "24/41,3/41,14/41"


def test_infimax_prefixes():
    assert infimax.infimax(3, "periodic:1", 64) == FIXED64
    assert infimax.infimax(3, "24/41,3/41,14/41", 82) == PERIOD41 * 2
    assert infimax.is_maximal(3, PERIOD41)
    assert not infimax.is_maximal(3, "13")


def test_regularity_verdicts():
    assert infimax.regularity(3, "list:1,0,10,3")["verdict"] == "Regular"
    assert infimax.regularity(3, "periodic:1")["verdict"] == "Regular"
    record = infimax.regularity(3, "growth:minimal,n0=1,r=5")
    assert record["verdict"] == "Exceptional"
    assert record["dimension_estimate"] == 1


def test_vertices_exact():
    verts = infimax.vertices(3, "list:1", 0)
    assert verts == [["0", "1", "0"], ["2/3", "0", "1/3"], ["1/2", "0", "1/2"]]


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        infimax.minimax([1, 2, 0])
    with pytest.raises(ValueError):
        infimax.itinerary(3, "not-a-point")


@pytest.mark.skipif("INFIMAX_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_round_trip():
    cli = os.environ["INFIMAX_CLI"]
    result = subprocess.run(
        [cli, "minimax", "-k", "3", "24,3,14"], capture_output=True, text=True, check=True
    )
    assert result.stdout == "31 311^10 312^3\n"

    selftest = subprocess.run([cli, "selftest"], capture_output=True, text=True)
    assert selftest.returncode == 0, selftest.stdout
