"""Numeric drawing of the preimage F^-1([0, 1]) of a Belyi function as SVG.

Roots of ``num(F) - t den(F)`` are tracked along a grid in t, one continuous
chain per edge, and each chain is glued to the black vertex (root of num F)
and the white vertex (root of num(F-1)) it approaches.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from .belyi import RationalFunction, ramification_profile
from .laurent import Polynomial, poly_squarefree
from .numfield import field_to_float

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 500
DEFAULT_SAMPLES = 200
VERTEX_TOL = 1e-9


class RootFindingError(RuntimeError):
    pass


def _complex_coeffs(p) -> np.ndarray:
    """Highest-degree-first complex coefficients of a Polynomial or a sequence."""
    if isinstance(p, Polynomial):
        c = [complex(field_to_float(x)) for x in p.coeffs]
    else:
        c = [complex(x) for x in p]
    while c and c[-1] == 0:
        c.pop()
    return np.array(c[::-1], dtype=complex)


def _initial_circle(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    a = np.abs(c[1:] / c[0])
    radius = max(float(np.max(a ** (1.0 / np.arange(1, n + 1)))), 1e-3)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def aberth(c: np.ndarray, z0: np.ndarray, tol: float = DEFAULT_TOL,
           max_iter: int = DEFAULT_MAX_ITER) -> np.ndarray:
    """Aberth-Ehrlich iteration on coefficients ``c`` (highest first).

    A root is accepted when its Newton correction is below ``tol`` (relative
    to max(1, |z|)) or when |p(z)| is already at the rounding-noise level of
    the evaluation, which is the best attainable near clustered roots.
    """
    c = c / c[0]
    dc = np.polyder(c)
    abs_c = np.abs(c)
    z = np.array(z0, dtype=complex)
    n = len(z)
    eps = np.finfo(float).eps
    for _ in range(max_iter):
        pv = np.polyval(c, z)
        dpv = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpv != 0, pv / dpv, pv)
        noise = 16 * eps * np.polyval(abs_c, np.abs(z))
        done = (np.abs(ratio) < tol * np.maximum(1.0, np.abs(z))) | (np.abs(pv) <= noise)
        if np.all(done):
            return z
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        if n > 1 and np.any(diff == 0):
            # coincident iterates: nudge apart deterministically
            z = z + 1e-8 * np.exp(1j * np.arange(n))
            continue
        s = np.sum(1.0 / diff, axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, ratio)
        z = z - np.where(done, 0, w)
    raise RootFindingError(f"Aberth iteration did not converge in {max_iter} steps")


def roots_numeric(p, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                  init: np.ndarray | None = None) -> np.ndarray:
    """All roots of p, deterministic start on a circle unless ``init`` is given."""
    c = _complex_coeffs(p)
    if len(c) < 2:
        raise ValueError("polynomial must have degree >= 1")
    z0 = _initial_circle(c / c[0]) if init is None else init
    return aberth(c, z0, tol, max_iter)


@dataclass
class Vertex:
    position: complex
    multiplicity: int
    degree: int = 0


@dataclass
class DessinPlot:
    arcs: list[list[complex]]
    black_vertices: list[Vertex]
    white_vertices: list[Vertex]
    arc_ends: list[tuple[int, int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def black_degrees(self) -> list[int]:
        return sorted((v.degree for v in self.black_vertices), reverse=True)

    def white_degrees(self) -> list[int]:
        return sorted((v.degree for v in self.white_vertices), reverse=True)

    def consistent(self) -> bool:
        """Every vertex touches as many arcs as its exact multiplicity."""
        return all(v.degree == v.multiplicity for v in self.black_vertices + self.white_vertices)


def _vertices(P: Polynomial, degree: int) -> list[Vertex]:
    if P.degree < degree:
        raise ValueError("vertex at infinity: apply a Mobius map before rendering")
    out = []
    for mult, factor in enumerate(poly_squarefree(P), start=1):
        if factor.degree < 1:
            continue
        for r in roots_numeric(factor):
            out.append(Vertex(complex(r), mult))
    positions = [v.position for v in out]
    for i, a in enumerate(positions):
        for b in positions[i + 1:]:
            if abs(a - b) < VERTEX_TOL:
                raise RootFindingError("two distinct exact roots collapsed numerically")
    return out


def _match(prev: np.ndarray, new: np.ndarray) -> np.ndarray | None:
    """Permutation of ``new`` following ``prev`` by nearest neighbour, or None if ambiguous."""
    n = len(prev)
    if n == 1:
        return new
    dist = np.abs(prev[:, None] - new[None, :])
    gaps = np.abs(prev[:, None] - prev[None, :]) + np.diag(np.full(n, np.inf))
    threshold = 0.5 * np.min(gaps)
    idx = np.argmin(dist, axis=1)
    if len(set(idx.tolist())) != n or np.any(dist[np.arange(n), idx] >= threshold):
        return None
    return new[idx]


class _Tracker:
    def __init__(self, num: np.ndarray, den: np.ndarray, tol: float, max_iter: int):
        m = max(len(num), len(den))
        self.num = np.concatenate([np.zeros(m - len(num), complex), num])
        self.den = np.concatenate([np.zeros(m - len(den), complex), den])
        self.tol = tol
        self.max_iter = max_iter
        self.warnings: list[str] = []

    def solve(self, t: float, init: np.ndarray | None) -> np.ndarray:
        c = self.num - t * self.den
        z0 = _initial_circle(c / c[0]) if init is None else init
        return aberth(c, z0, self.tol, self.max_iter)

    def step(self, t0: float, z0: np.ndarray, t1: float, depth: int = 0) -> list[tuple[float, np.ndarray]]:
        """Roots at t1 matched to z0, subdividing [t0, t1] while matching is ambiguous."""
        z1 = _match(z0, self.solve(t1, z0))
        if z1 is not None:
            return [(t1, z1)]
        if depth >= 8:
            self.warnings.append(f"ambiguous root matching near t={t1:.6g}")
            z1 = self.solve(t1, z0)
            return [(t1, z1)]
        tm = 0.5 * (t0 + t1)
        first = self.step(t0, z0, tm, depth + 1)
        return first + self.step(tm, first[-1][1], t1, depth + 1)


def _nearest(vertices: list[Vertex], z: complex) -> int:
    return min(range(len(vertices)), key=lambda i: abs(vertices[i].position - z))


def render_dessin(F: RationalFunction, samples: int = DEFAULT_SAMPLES, out: TextIO | None = None,
                  tol: float = DEFAULT_TOL, tail_steps: int = 12) -> DessinPlot:
    """Trace F^-1([0,1]) and optionally write SVG to ``out``.

    The grid is t = k/samples for 0 < k < samples.  Chains are continued
    geometrically towards t = 0 and t = 1 (``tail_steps`` halvings of the
    end gap) before being attached to their vertices.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    ramification_profile(F)  # certifies F is Belyi before drawing
    n = F.degree
    black = _vertices(F.num, n)
    white = _vertices(F.num - F.den, n)
    tr = _Tracker(_complex_coeffs(F.num), _complex_coeffs(F.den), tol, DEFAULT_MAX_ITER)

    grid = [k / samples for k in range(1, samples)]
    z = tr.solve(grid[0], None)
    path = [(grid[0], z)]
    for t0, t1 in zip(grid, grid[1:]):
        path += tr.step(t0, path[-1][1], t1)

    head = []
    t_prev, z_prev = grid[0], path[0][1]
    for k in range(1, tail_steps + 1):
        t = grid[0] * 0.5 ** k
        seg = tr.step(t_prev, z_prev, t)
        head = seg[::-1] + head
        t_prev, z_prev = seg[-1]
    tail = []
    t_prev, z_prev = grid[-1], path[-1][1]
    for k in range(1, tail_steps + 1):
        t = 1.0 - (1.0 - grid[-1]) * 0.5 ** k
        seg = tr.step(t_prev, z_prev, t)
        tail += seg
        t_prev, z_prev = seg[-1]

    full = head + path + tail
    arcs = []
    ends = []
    for i in range(n):
        pts = [complex(zz[i]) for _, zz in full]
        b = _nearest(black, pts[0])
        w = _nearest(white, pts[-1])
        black[b].degree += 1
        white[w].degree += 1
        arcs.append([black[b].position] + pts + [white[w].position])
        ends.append((b, w))

    plot = DessinPlot(arcs, black, white, ends, tr.warnings)
    if not plot.consistent():
        plot.warnings.append("arc census disagrees with the exact vertex multiplicities")
    for msg in plot.warnings:
        log.warning(msg)
    if out is not None:
        write_svg(plot, out)
    return plot


def write_svg(plot: DessinPlot, out: TextIO, size: int = 640, margin: int = 24) -> None:
    pts = [p for arc in plot.arcs for p in arc]
    xs = [p.real for p in pts]
    ys = [p.imag for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    scale = (size - 2 * margin) / max(x1 - x0, y1 - y0, 1e-12)

    def px(p: complex) -> tuple[float, float]:
        # SVG y axis points down
        return margin + (p.real - x0) * scale, size - margin - (p.imag - y0) * scale

    out.write(f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
              f'viewBox="0 0 {size} {size}">\n')
    out.write('<rect width="100%" height="100%" fill="white"/>\n')
    for arc in plot.arcs:
        d = " ".join(("M" if k == 0 else "L") + "%.3f,%.3f" % px(p) for k, p in enumerate(arc))
        out.write(f'<path d="{d}" fill="none" stroke="black" stroke-width="1.2"/>\n')
    for v in plot.black_vertices:
        x, y = px(v.position)
        out.write(f'<rect x="{x - 3:.3f}" y="{y - 3:.3f}" width="6" height="6" fill="black"/>\n')
    for v in plot.white_vertices:
        x, y = px(v.position)
        out.write(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="white" stroke="black"/>\n')
    out.write("</svg>\n")


def summary(plot: DessinPlot) -> dict:
    return {
        "arcs": len(plot.arcs),
        "black_degrees": plot.black_degrees(),
        "white_degrees": plot.white_degrees(),
        "consistent": plot.consistent(),
        "warnings": list(plot.warnings),
        "black_vertices": [[v.position.real, v.position.imag, v.multiplicity] for v in plot.black_vertices],
        "white_vertices": [[v.position.real, v.position.imag, v.multiplicity] for v in plot.white_vertices],
    }


def distinct_count(values: Sequence[complex], tol: float) -> int:
    """Number of values pairwise further apart than ``tol``."""
    reps: list[complex] = []
    for v in values:
        if all(abs(v - r) > tol for r in reps):
            reps.append(v)
    return len(reps)
