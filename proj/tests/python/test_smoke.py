import json
import math
import pathlib

import pytest

import gmac

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def h2(p):
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def test_channel_loading_round_trip():
    ch = gmac.load_channel(str(DATA / "channels" / "clean_mac.json"))
    assert ch.sizes == [2, 2, 4, 1, 1]
    again = gmac.channel_from_dict(json.loads(ch.to_json()))
    assert again.p(1, 1, 3, 0, 0) == 1.0


def test_degradedness_verdicts():
    assert gmac.check_degraded(gmac.examples.binary_degraded())["verdict"] == "physically-degraded"
    v = gmac.check_degraded(gmac.load_channel(str(DATA / "channels" / "noiseless_wiretapper.json")))
    assert v["verdict"] == "not-degraded"
    assert v["residual"] > 0


def test_secrecy_capacity():
    assert gmac.secrecy_capacity(gmac.examples.clean_mac())["value"] >= 0.99
    assert gmac.secrecy_capacity(gmac.examples.leaky_mac(), r0=0.3)["value"] == 0.0
    r = gmac.secrecy_capacity(gmac.examples.binary_degraded(), degraded=True)
    assert abs(r["value"] - (h2(0.18) - h2(0.1))) < 0.02
    assert r["witness"]["kind"] == "degraded"


def test_region_frontier():
    r = gmac.region(gmac.examples.clean_mac(), "secrecy1", config={"sample_count": 300}, resolution=32)
    pts = [f["point"] for f in r["frontier"]]
    assert any(abs(x - 1) <= 0.02 and abs(y - 1) <= 0.02 for x, y in pts)
    assert gmac.frontier_csv([tuple(p) for p in pts], ("R0", "R1")).startswith("R0,R1\n")


def test_information():
    scheme = json.loads((DATA / "schemes" / "uniform_one_set.json").read_text())
    ch = gmac.examples.clean_mac()
    assert gmac.information(ch, scheme, ["X1"], ["Y"], ["X2"]) == pytest.approx(1.0)
    assert gmac.information(ch, scheme, ["U"], ["U"]) == pytest.approx(gmac.information(ch, scheme, ["U"]))


def test_simulate():
    out = gmac.simulate(
        gmac.examples.binary_pure_noise_wiretap(),
        {"n": 4, "M1": 4, "seeds": [1, 2]},
    )
    assert [r["equivocation_user2"] for r in out["reports"]] == [0.5, 0.5]


def test_errors_carry_their_kind():
    with pytest.raises(gmac.GmacError, match="UnknownVariable"):
        gmac.region(gmac.examples.clean_mac(), "inner1", plane=("R0", "R9"))
    with pytest.raises(gmac.GmacError, match="InvalidInput"):
        gmac.channel_from_dict({"x1": 2})
