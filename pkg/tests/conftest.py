"""Shared fixtures and small scene builders for the test suite."""

import pathlib

import pytest

from sightlines import Poly, Pt, Region, Scene, Seg, pt

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def point_region(name: str, x, y) -> Region:
    return Region(name, (Pt(pt(x, y)),))


def seg_region(name: str, ax, ay, bx, by) -> Region:
    return Region(name, (Seg(pt(ax, ay), pt(bx, by)),))


def square_region(name: str, x, y, side=1) -> Region:
    """Axis-aligned square with lower-left corner (x, y), listed CCW."""
    s = side
    verts = (pt(x, y), pt(x + s, y), pt(x + s, y + s), pt(x, y + s))
    return Region(name, (Poly(verts),))


@pytest.fixture
def three_points_scene() -> Scene:
    # Collinear points: the middle one blocks the outer pair (regions
    # are closed, so grazing the middle point already disqualifies the
    # sightline).
    return Scene(
        (
            point_region("a", 0, 0),
            point_region("b", 5, 0),
            point_region("c", 10, 0),
        )
    )
