"""Higher-order Voronoi diagrams, Delaunay mosaics, overlap regions and
clustering in the Hilbert metric (and its Funk and Thompson relatives) on
convex polygons.

Scenes are plain dicts in the scene JSON format (or paths to such files);
every function returns the decoded JSON report of the matching CLI command.
"""

import json
import os

from . import _core
from ._core import HilbertError

__all__ = [
    "HilbertError",
    "Session",
    "ball",
    "bisector",
    "circumcenter",
    "cluster",
    "delaunay",
    "distance",
    "load_scene",
    "make_scene",
    "regions",
    "verify",
    "voronoi",
]


def make_scene(domain, sites=(), metric="hilbert", order=1):
    return {
        "schema": "hilbert-scene",
        "version": 1,
        "metric": metric,
        "domain": [list(p) for p in domain],
        "sites": [list(p) for p in sites],
        "order": order,
    }


def load_scene(path):
    with open(path, encoding="utf-8") as f:
        return json.loads(_core.normalize_scene(f.read()))


def _text(scene):
    if isinstance(scene, (str, os.PathLike)):
        with open(scene, encoding="utf-8") as f:
            return f.read()
    return json.dumps(scene)


def _orders(scene, order):
    if order is not None:
        return [order]
    n = len(json.loads(_text(scene)).get("sites", []))
    return list(range(1, n))


def distance(scene, p, q):
    return json.loads(_core.distance(_text(scene), tuple(p), tuple(q)))


def ball(scene, center, radius):
    return json.loads(_core.ball(_text(scene), tuple(center), radius))


def bisector(scene, i, j):
    return json.loads(_core.bisector(_text(scene), i, j))


def circumcenter(scene, i, j, k):
    return json.loads(_core.circumcenter(_text(scene), i, j, k))


def voronoi(scene, order=None):
    """Diagrams of one order, or of every order 1..n-1 when order is None."""
    return json.loads(_core.voronoi(_text(scene), _orders(scene, order)))


def delaunay(scene, order):
    return json.loads(_core.delaunay(_text(scene), order))


def regions(scene, i, j):
    return json.loads(_core.regions(_text(scene), i, j))


def cluster(scene, method="kmeans", k=2, steps=10, count=1, height=-1.0):
    return json.loads(_core.cluster(_text(scene), method, k, steps, count, height))


def verify(scene, order=None, resolution=400):
    return json.loads(_core.verify(_text(scene), _orders(scene, order), resolution))


class Session:
    """An event-driven scene; see the session protocol in the README."""

    def __init__(self, scene):
        self._session = _core.Session(_text(scene))
        self._seq = 0

    def send(self, kind, **payload):
        self._seq += 1
        return self.handle({"kind": kind, "seq": self._seq, **payload})

    def handle(self, message):
        if "seq" in message:
            self._seq = max(self._seq, message["seq"])
        return json.loads(self._session.handle(json.dumps(message)))

    def snapshot(self):
        return json.loads(self._session.snapshot())

    @property
    def scene(self):
        return json.loads(self._session.scene())
