import io
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from moment_forge.belyi import NotBelyiError, RationalFunction, build_candidate, laurent_as_rational
from moment_forge.counterexample import F1_PARAMS, laurent_L
from moment_forge.dessin import (
    RootFindingError,
    aberth,
    distinct_count,
    render_dessin,
    roots_numeric,
    summary,
)
from moment_forge.laurent import Polynomial

x = Polynomial.x()


def test_roots_of_simple_polynomials():
    r = np.sort_complex(roots_numeric(x ** 2 - 1))
    assert np.allclose(r, [-1, 1], atol=1e-12)
    r = roots_numeric(x ** 2 + 1)
    assert sorted(np.round(r.imag, 12)) == [-1.0, 1.0]


def test_roots_agree_with_numpy():
    coeffs = [3, -1, 4, 1, -5, 9, 2]
    p = Polynomial(coeffs[::-1])
    ours = roots_numeric(p)
    ref = np.roots(coeffs)
    dist = np.abs(ours[:, None] - ref[None, :])
    assert np.all(dist.min(axis=1) < 1e-9) and np.all(dist.min(axis=0) < 1e-9)


def test_degree_zero_rejected():
    with pytest.raises(ValueError):
        roots_numeric(Polynomial([3]))


def test_non_convergence_reported():
    with pytest.raises(RootFindingError):
        aberth(np.array([1, 0, 0, -1], dtype=complex), np.array([0.1, 0.2, 0.3], dtype=complex), max_iter=1)


@pytest.fixture(scope="module")
def plot_F1():
    return render_dessin(build_candidate(*F1_PARAMS), samples=200)


def test_F1_structure(plot_F1):
    assert len(plot_F1.arcs) == 10
    assert plot_F1.black_degrees() == [6, 3, 1]
    assert plot_F1.white_degrees() == [2, 2, 2, 1, 1, 1, 1]
    assert plot_F1.consistent() and not plot_F1.warnings


def test_vertex_positions(plot_F1):
    blacks = sorted((v.position.real, v.multiplicity) for v in plot_F1.black_vertices)
    assert [m for _, m in blacks] == [1, 6, 3]  # x = -1, 0, 1
    assert np.allclose([p for p, _ in blacks], [-1, 0, 1], atol=1e-9)


def test_arcs_run_black_to_white(plot_F1):
    for arc, (b, w) in zip(plot_F1.arcs, plot_F1.arc_ends):
        assert arc[0] == plot_F1.black_vertices[b].position
        assert arc[-1] == plot_F1.white_vertices[w].position


def test_points_lie_on_preimage(plot_F1):
    F = build_candidate(*F1_PARAMS)
    num = np.array([complex(float(c)) for c in F.num.coeffs[::-1]])
    den = np.array([complex(float(c)) for c in F.den.coeffs[::-1]])
    for arc in plot_F1.arcs:
        for p in arc[1:-1:25]:
            val = np.polyval(num, p) / np.polyval(den, p)
            assert abs(val.imag) < 1e-6 and -1e-6 < val.real < 1 + 1e-6


def test_L_renders_same_structure():
    plot = render_dessin(laurent_as_rational(laurent_L()), samples=120)
    assert plot.black_degrees() == [6, 3, 1]
    assert plot.white_degrees() == [2, 2, 2, 1, 1, 1, 1]


def test_linear_map_single_arc():
    plot = render_dessin(RationalFunction(x, Polynomial([1])), samples=10)
    assert len(plot.arcs) == 1


def test_non_belyi_refused():
    with pytest.raises(NotBelyiError):
        render_dessin(build_candidate(2, 3, 5))


def test_svg_output(plot_F1):
    from moment_forge.dessin import write_svg

    buf = io.StringIO()
    write_svg(plot_F1, buf)
    root = ET.fromstring(buf.getvalue())
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}path")) == 10
    squares = [r for r in root.findall(f"{ns}rect") if r.get("width") == "6"]
    assert len(squares) == 3 and all(r.get("fill") == "black" for r in squares)
    circles = root.findall(f"{ns}circle")
    assert len(circles) == 7 and all(c.get("r") == "4" and c.get("stroke") == "black" for c in circles)


def test_summary_and_distinct(plot_F1):
    s = summary(plot_F1)
    assert s["arcs"] == 10 and s["consistent"]
    assert distinct_count([0, 1e-12, 1], 1e-9) == 2


def test_rendering_is_deterministic():
    F = build_candidate(*F1_PARAMS)
    a = io.StringIO()
    b = io.StringIO()
    render_dessin(F, samples=50, out=a)
    render_dessin(F, samples=50, out=b)
    assert a.getvalue() == b.getvalue()
