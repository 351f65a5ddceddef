import math
import os

import pytest

import hilbertvd

SCENES = os.path.join(os.path.dirname(__file__), "..", "..", "scenes")
SQUARE = hilbertvd.make_scene([(0, 0), (1, 0), (1, 1), (0, 1)], [(0.27, 0.56), (0.71, 0.43), (0.46, 0.81)])


def scene_path(name):
    return os.path.join(SCENES, name)


def test_distance_spot_value():
    r = hilbertvd.distance(SQUARE, (0.5, 0.5), (0.75, 0.5))
    assert r["distance"] == pytest.approx(0.5 * math.log(3), abs=1e-9)


def test_voronoi_all_orders():
    r = hilbertvd.voronoi(SQUARE)
    assert [d["k"] for d in r["orders"]] == [1, 2]
    assert r["diagnostics"]["label_disagreements"] == 0


def test_verify_scene_file():
    r = hilbertvd.verify(scene_path("non_star_shaped.json"), order=2, resolution=200)
    assert r["max_mismatch_fraction"] < 0.005


def test_regions_partition_domain():
    r = hilbertvd.regions(scene_path("pentagon.json"), 0, 2)
    assert r["Z"]["area"] > 0
    assert r["Z"]["area"] + r["W"]["area"] <= r["domain_area"] + 1e-9


def test_cluster_methods():
    k = hilbertvd.cluster(scene_path("clusters.json"), method="kmeans", k=3, steps=20)
    assert k["clusters"] == 3
    assert all(b <= a + 1e-9 for a, b in zip(k["objectives"], k["objectives"][1:]))
    s = hilbertvd.cluster(scene_path("clusters.json"), method="slink", count=3)
    assert s["clusters"] == 3


def test_delaunay_and_circumcenter():
    m = hilbertvd.delaunay(scene_path("pentagon.json"), 2)
    assert m["mosaic"]["nodes"]
    c = hilbertvd.circumcenter(SQUARE, 0, 1, 2)
    assert "exists" in c


def test_session_round_trip():
    s = hilbertvd.Session(scene_path("pentagon.json"))
    f = s.send("MoveSite", index=0, to=[1.1, 0.9])
    assert f["kind"] == "GeometryUpdate" and f["seq"] == 1
    assert s.send("SetOrder", k=2)["order"] == 2
    bad = s.send("SetOrder", k=99)
    assert bad["kind"] == "Error" and bad["error"] == "OutOfRange"
    assert s.scene["order"] == 2
    assert s.send("ToggleLayer", layer="balls")["kind"] == "Ack"
    assert s.snapshot()["diagram"]["k"] == 2


def test_errors_raise():
    with pytest.raises(hilbertvd.HilbertError):
        hilbertvd.bisector(SQUARE, 0, 7)
    with pytest.raises(ValueError):
        hilbertvd.distance(SQUARE, (2, 2), (0.5, 0.5))


def test_load_scene_normalizes():
    s = hilbertvd.load_scene(scene_path("unit_square.json"))
    assert s["schema"] == "hilbert-scene" and len(s["sites"]) == 4
