"""Adjacency spectra: Perron pairs, dense spectra, power traces and bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .graph import Graph, members

EQ_TOL = 1e-8
STRICT_MARGIN = 1e-10


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, iterate: np.ndarray, residual: float):
        super().__init__(message)
        self.iterate = iterate
        self.residual = residual


def _power_iteration(a: np.ndarray, tol: float, max_iter: int) -> tuple[float, np.ndarray, float, int]:
    # shift by I so bipartite components do not oscillate
    n = a.shape[0]
    shifted = a + np.eye(n)
    x = np.ones(n)
    lam = 0.0
    res = math.inf
    for it in range(1, max_iter + 1):
        y = shifted @ x
        x = y / y.max()
        ax = a @ x
        lam = float(x @ ax / (x @ x))
        res = float(np.abs(ax - lam * x).max())
        if res <= tol:
            return lam, x, res, it
    raise ConvergenceError(f"power iteration did not reach {tol:g} in {max_iter} steps", x, res)


@dataclass(frozen=True)
class SpectralResult:
    graph: Graph = field(repr=False)
    lambda1: float
    perron: tuple[float, ...]
    residual: float
    iterations: int

    @property
    def u_star(self) -> int:
        """Extremal vertex: largest Perron coordinate, lowest index on ties."""
        top = max(self.perron)
        return next(i for i, v in enumerate(self.perron) if v >= top - 1e-12)

    @cached_property
    def lambda2(self) -> float:
        spec = full_spectrum(self.graph)
        return spec[1] if len(spec) > 1 else -math.inf

    def as_dict(self) -> dict:
        return {
            "lambda1": self.lambda1,
            "lambda2": self.lambda2 if self.graph.n > 1 else None,
            "residual": self.residual,
            "iterations": self.iterations,
            "perron": list(self.perron),
            "u_star": self.u_star,
        }


def spectral_radius(g: Graph, tol: float = 1e-12, max_iter: int = 10**6) -> SpectralResult:
    """λ₁ and a max-normalised Perron vector.

    For a disconnected graph the vector is supported on the component with
    the largest radius (lowest vertex wins ties) and is zero elsewhere.
    """
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    best = None
    total_iter = 0
    for comp in g.components():
        verts = members(comp)
        if len(verts) == 1:
            lam, vec, res, it = 0.0, np.ones(1), 0.0, 0
        else:
            sub = np.zeros((len(verts), len(verts)))
            pos = {v: i for i, v in enumerate(verts)}
            for v in verts:
                for w in members(g.adj[v]):
                    sub[pos[v], pos[w]] = 1.0
            lam, vec, res, it = _power_iteration(sub, tol, max_iter)
        total_iter += it
        if best is None or lam > best[0] + STRICT_MARGIN:
            best = (lam, verts, vec, res)
    lam, verts, vec, res = best
    perron = np.zeros(g.n)
    perron[verts] = vec / vec.max()
    return SpectralResult(g, lam, tuple(float(v) for v in perron), res, total_iter)


def jacobi_eigenvalues(a: np.ndarray, threshold: float = 1e-13, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending."""
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = math.sqrt(float((np.triu(a, 1) ** 2).sum()))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    else:
        off = math.sqrt(float((np.triu(a, 1) ** 2).sum()))
        if off > threshold:
            raise ConvergenceError("Jacobi sweeps exhausted", np.diag(a).copy(), off)
    return np.sort(np.diag(a))[::-1]


def full_spectrum(g: Graph) -> list[float]:
    if g.n == 0:
        return []
    return [float(v) for v in jacobi_eigenvalues(g.to_numpy())]


def _closed_walks(g: Graph, p: int) -> int:
    # exact integer arithmetic; entries of A^12 overflow int64 near n = 62
    a = [[int(g.has_edge(i, j)) for j in range(g.n)] for i in range(g.n)]

    def mul(x, y):
        cols = list(zip(*y))
        return [[sum(u * v for u, v in zip(row, col)) for col in cols] for row in x]

    result = None
    base = a
    e = p
    while e:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return sum(result[i][i] for i in range(g.n))


@dataclass(frozen=True)
class TraceReport:
    p: int
    by_eigenvalues: float
    by_walks: int

    @property
    def value(self) -> int:
        return self.by_walks

    @property
    def discrepancy(self) -> float:
        return abs(self.by_eigenvalues - self.by_walks)


def power_trace(g: Graph, p: int, tol: float = 1e-6) -> TraceReport:
    """Tr(A^p) for even p <= 12, computed from the spectrum and by walk counting."""
    if p <= 0 or p % 2 or p > 12:
        raise ValueError(f"p must be an even integer in [2, 12], got {p}")
    if g.n == 0:
        return TraceReport(p, 0.0, 0)
    spec = np.array(full_spectrum(g))
    eig = float((spec ** p).sum())
    walks = _closed_walks(g, p)
    if abs(eig - walks) > tol * max(1.0, abs(walks)):
        raise ArithmeticError(f"trace routes disagree: {eig} vs {walks}")
    return TraceReport(p, eig, walks)


@dataclass(frozen=True)
class TraceInequality:
    k: int
    lhs: float
    rhs: float
    holds: bool


def trace_inequality(g: Graph, k: int, tol: float = 1e-6, check_free: bool = True) -> TraceInequality:
    """λ₁^{2k} + λ₂^{2k} <= Tr(A^{2k}) / 2 for {C_3, ..., C_{2k+1}}-free graphs."""
    if k < 1:
        raise ValueError("k must be positive")
    if check_free:
        from .patterns import odd_girth_check

        if not odd_girth_check(g, k):
            raise ValueError(f"graph contains an odd cycle of length <= {2 * k + 1}")
    spec = full_spectrum(g)
    l1 = spec[0] if spec else 0.0
    l2 = spec[1] if len(spec) > 1 else 0.0
    lhs = l1 ** (2 * k) + l2 ** (2 * k)
    rhs = power_trace(g, 2 * k).value / 2
    return TraceInequality(k, lhs, rhs, lhs <= rhs + tol)


# ---------------------------------------------------------------- bounds

BOUND_KINDS = ("nosal", "lnw", "fan_theorem", "friendship_f23", "brualdi_hoffman", "nikiforov")


@dataclass(frozen=True)
class BoundSpec:
    kind: str
    m: int
    k: int | None = None
    r: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if self.m < 0:
            raise ValueError("m must be nonnegative")


def _largest_root_3x3(q: np.ndarray) -> float:
    coeffs = np.poly(q)
    lam = float(max(np.linalg.eigvals(q).real))
    for _ in range(50):
        f = np.polyval(coeffs, lam)
        df = np.polyval(np.polyder(coeffs), lam)
        if df == 0:
            break
        step = f / df
        lam -= step
        if abs(step) < 1e-15 * max(1.0, abs(lam)):
            break
    return lam


def bound_value(spec: BoundSpec) -> float:
    m = spec.m
    if spec.kind == "nosal":
        return math.sqrt(m)
    if spec.kind == "lnw":
        if m < 1:
            raise ValueError("lnw bound needs m >= 1")
        return math.sqrt(m - 1)
    if spec.kind == "friendship_f23":
        if 4 * m < 3:
            raise ValueError("friendship bound needs m >= 1")
        return (1 + math.sqrt(4 * m - 3)) / 2
    if spec.kind == "fan_theorem":
        k = spec.k
        if k is None or k < 1:
            raise ValueError("fan_theorem bound needs k >= 1")
        if 4 * m < k * k - 1:
            raise ValueError(f"fan_theorem bound needs 4m >= k^2 - 1 (k={k}, m={m})")
        return (k - 1 + math.sqrt(4 * m - k * k + 1)) / 2
    if spec.kind == "nikiforov":
        r = spec.r
        if r is None or r < 1:
            raise ValueError("nikiforov bound needs r >= 1")
        return math.sqrt(2 * m * (1 - 1 / r))
    # brualdi_hoffman: λ(K_b ∨ (K_{a-b} ∪ K_1)) via its equitable quotient
    from .families import bh_parameters

    a, b = bh_parameters(m)
    if b == 0:
        return float(a - 1)
    q = np.array([[b - 1, a - b, 1], [b, a - b - 1, 0], [b, 0, 0]], dtype=float)
    return _largest_root_3x3(q)


@dataclass(frozen=True)
class EqualityReport:
    k: int
    t: int
    m: int
    lambda1: float
    bound: float
    gap: float
    ok: bool


def equality_check(k: int, t: int, tol: float = EQ_TOL) -> EqualityReport:
    """Compare λ(K_k ∨ tK_1) with the fan bound at m = k(k-1)/2 + kt."""
    from .families import extremal, extremal_size

    m = extremal_size(k, t)
    lam = spectral_radius(extremal(k, t).graph).lambda1
    bound = bound_value(BoundSpec("fan_theorem", m, k=k))
    gap = bound - lam
    report = EqualityReport(k, t, m, lam, bound, gap, abs(gap) <= tol)
    if not report.ok:
        raise AssertionError(f"equality fails for k={k}, t={t}: {report}")
    return report


def rayleigh_quotient(g: Graph, y) -> float:
    y = np.asarray(y, dtype=float)
    return float(y @ g.to_numpy() @ y / (y @ y))


def compare_strict(a: float, b: float) -> str:
    """'greater', 'less' or 'inconclusive' when |a - b| <= 1e-10."""
    if a > b + STRICT_MARGIN:
        return "greater"
    if a < b - STRICT_MARGIN:
        return "less"
    return "inconclusive"
