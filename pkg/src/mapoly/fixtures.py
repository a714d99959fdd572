"""Small named maps used by the tests, the CLI self-test and the examples."""

from __future__ import annotations

from .maps import Map, build_map


def edge() -> Map:
    """Two vertices joined by one edge."""
    return build_map([["1+"], ["1-"]])


def loop0() -> Map:
    """One vertex with one loop."""
    return build_map([["1+", "1-"]])


def vertex() -> Map:
    """A single isolated vertex."""
    return build_map([[]])


def bouquet_plane() -> Map:
    """Two non-interleaved loops on one vertex (sphere)."""
    return build_map([["1+", "1-", "2+", "2-"]])


def bouquet(g: int) -> Map:
    """``2g`` loops on one vertex with rotation ``e1 e2 e1 e2 ... e_{2g-1} e_{2g} e_{2g-1} e_{2g}``; genus ``g``."""
    rot = []
    for i in range(g):
        a, b = 2 * i + 1, 2 * i + 2
        rot += [f"{a}+", f"{b}+", f"{a}-", f"{b}-"]
    return build_map([rot])


def m1() -> Map:
    """Genus-2 map: a bridge (edge 5) between two vertices, each carrying two interleaved loops."""
    return build_map([["5+", "1+", "2+", "1-", "2-"],
                      ["5-", "3+", "4+", "3-", "4-"]])


def m2(position: int = 0) -> Map:
    """Genus-2 bouquet of four loops with a pendant edge (edge 5).

    ``position`` is the slot in the bouquet rotation where the pendant edge is
    inserted; 0 puts it before the first loop half-edge.
    """
    rot = list(bouquet(2).rotations[0])
    rot.insert(position, "5+")
    return build_map([rot, ["5-"]])


def triangle() -> Map:
    """Plane 3-cycle."""
    return build_map([["1+", "3-"], ["2+", "1-"], ["3+", "2-"]])


def k4_plane() -> Map:
    return build_map([["1+", "2+", "3+"], ["1-", "6-", "4+"],
                      ["2-", "4-", "5+"], ["3-", "5-", "6+"]])


def k4_torus() -> Map:
    """Genus-1 embedding of K4 with two faces, of degrees 4 and 8."""
    return build_map([["1+", "2+", "3+"], ["1-", "4+", "6-"],
                      ["2-", "4-", "5+"], ["3-", "6+", "5-"]])


def k4_torus_3_9() -> Map:
    """Genus-1 embedding of K4 with faces of degrees 3 and 9."""
    return build_map([["1+", "2+", "3+"], ["1-", "4+", "6-"],
                      ["2-", "4-", "5+"], ["3-", "5-", "6+"]])


def theta_torus() -> Map:
    """Three parallel edges between two vertices, embedded in the torus (one face)."""
    return build_map([["1+", "2+", "3+"], ["1-", "2-", "3-"]])


def theta_plane() -> Map:
    return build_map([["1+", "2+", "3+"], ["3-", "2-", "1-"]])


def named_fixtures() -> dict[str, Map]:
    """Every shipped fixture, keyed by the name used for the ``.map`` files."""
    return {
        "edge": edge(),
        "loop0": loop0(),
        "vertex": vertex(),
        "b0": bouquet_plane(),
        "b1": bouquet(1),
        "b2": bouquet(2),
        "b3": bouquet(3),
        "m1": m1(),
        "m2": m2(),
        "triangle": triangle(),
        "k4_plane": k4_plane(),
        "k4_torus": k4_torus(),
        "k4_torus_3_9": k4_torus_3_9(),
        "theta_plane": theta_plane(),
        "theta_torus": theta_torus(),
    }
