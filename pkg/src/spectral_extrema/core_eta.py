"""k-cores, the η functional and the decomposition around an extremal vertex.

Notation follows the usual setup for a connected graph with Perron vector x
scaled so that x[u*] = 1 at an extremal vertex u*:

    R = N(u*),  S = V \\ N[u*],  S0 = {w in S : d_S(w) = 0},  S1 = S \\ S0,
    gamma = -k(k-1)/2,
    eta(L) = sum_{u in L} (d_L(u) - k + 1) x_u - e(L)   for L ⊆ R.

``x`` may hold floats (Perron vectors) or Fractions (synthetic tests); η is
then exact.
"""
from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from . import families
from .graph import Graph, VertexSet, as_mask, induced_with_map, join, members
from .paths import find_path, longest_cycle
from .spectral import spectral_radius

ETA_SLACK = 1e-9


@dataclass(frozen=True)
class CoreResult:
    core: VertexSet
    peel_order: tuple[tuple[int, int], ...]   # (vertex, degree at removal)

    @property
    def vertices(self) -> list[int]:
        return members(self.core)


def k_core(g: Graph, k: int, within: int | Iterable[int] | None = None,
           rng: random.Random | None = None) -> CoreResult:
    """The k-core of G[within] by repeated deletion of vertices of degree < k.

    Without ``rng`` the lowest-index eligible vertex is peeled first; with
    it the choice is random (the resulting core does not depend on it).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    alive = g.vertex_mask if within is None else as_mask(within)
    peel = []
    while True:
        low = [v for v in members(alive) if (g.adj[v] & alive).bit_count() < k]
        if not low:
            break
        v = rng.choice(low) if rng is not None else low[0]
        peel.append((v, (g.adj[v] & alive).bit_count()))
        alive &= ~(1 << v)
    return CoreResult(alive, tuple(peel))


def k_core_bruteforce(g: Graph, k: int) -> VertexSet:
    """Largest vertex subset inducing minimum degree >= k (subset enumeration)."""
    best = 0
    for mask in range(1 << g.n):
        if all((g.adj[v] & mask).bit_count() >= k for v in members(mask)):
            best |= mask   # the union of such sets is again such a set
    return best


@dataclass(frozen=True)
class CoreEtaContext:
    k: int
    host: Graph = field(repr=False)
    x: tuple
    u_star: int
    R: VertexSet
    S: VertexSet
    S0: VertexSet
    S1: VertexSet
    lambda1: float | None = None

    @property
    def gamma(self) -> Fraction:
        return Fraction(-self.k * (self.k - 1), 2)

    @classmethod
    def from_vector(cls, g: Graph, k: int, x: Sequence, u_star: int,
                    lambda1: float | None = None) -> CoreEtaContext:
        if k < 1:
            raise ValueError("k must be positive")
        if len(x) != g.n:
            raise ValueError("vector length does not match the graph")
        R = g.adj[u_star]
        S = g.vertex_mask & ~R & ~(1 << u_star)
        S0 = as_mask(w for w in members(S) if not g.adj[w] & S)
        return cls(k, g, tuple(x), u_star, R, S, S0, S & ~S0, lambda1)

    def d_in(self, u: int, L: VertexSet) -> int:
        return (self.host.adj[u] & L).bit_count()

    def as_dict(self) -> dict:
        return {
            "k": self.k, "u_star": self.u_star, "lambda1": self.lambda1,
            "R": members(self.R), "S": members(self.S),
            "S0": members(self.S0), "S1": members(self.S1),
            "gamma": float(self.gamma), "x": [float(v) for v in self.x],
        }


def decompose(g: Graph, k: int) -> CoreEtaContext:
    if g.n == 0 or not g.is_connected():
        raise ValueError("decompose needs a connected graph; pass one component at a time")
    res = spectral_radius(g)
    return CoreEtaContext.from_vector(g, k, res.perron, res.u_star, res.lambda1)


def eta(ctx: CoreEtaContext, L: int | Iterable[int]):
    L = as_mask(L)
    if L & ~ctx.R:
        raise ValueError("L must be a subset of R = N(u*)")
    if not L:
        return 0
    total = sum((ctx.d_in(u, L) - ctx.k + 1) * ctx.x[u] for u in members(L))
    return total - ctx.host.edges_within(L)


def l_core(ctx: CoreEtaContext, L: int | Iterable[int]) -> VertexSet:
    """L^c: the (k-1)-core of G[L]."""
    return k_core(ctx.host, ctx.k - 1, within=as_mask(L)).core


@dataclass(frozen=True)
class EtaComparison:
    eta_L: float
    eta_core: float
    holds: bool
    equal: bool
    is_core: bool


def eta_core_inequality(ctx: CoreEtaContext, L: int | Iterable[int]) -> EtaComparison:
    """Compare η(L) with η(L^c); equality should occur exactly when L = L^c."""
    L = as_mask(L)
    Lc = l_core(ctx, L)
    a, b = eta(ctx, L), eta(ctx, Lc)
    return EtaComparison(a, b, a <= b + ETA_SLACK, abs(a - b) <= ETA_SLACK, L == Lc)


@dataclass(frozen=True)
class ComponentClass:
    component: VertexSet
    cls: str
    circumference: int | None
    t_J: int | None
    eta: float

    def as_dict(self) -> dict:
        return {"component": members(self.component), "class": self.cls,
                "circumference": self.circumference, "t_J": self.t_J, "eta": float(self.eta)}


def classify_components(ctx: CoreEtaContext) -> list[ComponentClass]:
    """Classify the components of G[R^c] into J1..J5 (J5 = J4 with η > 0)."""
    k, g = ctx.k, ctx.host
    Rc = l_core(ctx, ctx.R)
    sub, index = induced_with_map(g, Rc)
    out = []
    for comp in sub.components():
        J = as_mask(index[i] for i in members(comp))
        size = J.bit_count()
        value = eta(ctx, J)
        if size >= 2 * k + 1:
            out.append(ComponentClass(J, "J1", None, None, value))
            continue
        circ = longest_cycle(g, J)
        t_J = None
        if circ <= 2 * k - 2:
            cls = "J2"
        elif circ == 2 * k - 1:
            cls = "J3"
        else:
            cls = "J5" if value > ETA_SLACK else "J4"
            t_J = (2 * k) * (2 * k - 1) // 2 - g.edges_within(J)
        out.append(ComponentClass(J, cls, circ, t_J, value))
    return out


@dataclass(frozen=True)
class SlackReport:
    lhs: float                  # λ² - (k-1)λ
    identity_rhs: float         # d(u*) + Σ_R (d_R(u)-k+1) x_u + Σ_S d_R(w) x_w
    identity_residual: float
    spectral_slack: float       # λ² - (k-1)λ - m - γ
    eta_edge_slack: float       # η(R) + m - e(S) - (λ² - (k-1)λ)
    eta_gamma_slack: float      # η(R) - e(S) - γ
    eta_R: float
    e_S: int

    def as_dict(self) -> dict:
        return {k: float(v) for k, v in self.__dict__.items()}


def slack_report(ctx: CoreEtaContext) -> SlackReport:
    g, k, x = ctx.host, ctx.k, ctx.x
    lam = ctx.lambda1 if ctx.lambda1 is not None else spectral_radius(g).lambda1
    lhs = lam * lam - (k - 1) * lam
    rhs = (g.degree(ctx.u_star)
           + sum((ctx.d_in(u, ctx.R) - k + 1) * x[u] for u in members(ctx.R))
           + sum(ctx.d_in(w, ctx.R) * x[w] for w in members(ctx.S)))
    eta_R = eta(ctx, ctx.R)
    e_S = g.edges_within(ctx.S)
    gamma = float(ctx.gamma)
    return SlackReport(
        lhs=lhs,
        identity_rhs=float(rhs),
        identity_residual=abs(lhs - float(rhs)),
        spectral_slack=lhs - g.m - gamma,
        eta_edge_slack=float(eta_R) + g.m - e_S - lhs,
        eta_gamma_slack=float(eta_R) - e_S - gamma,
        eta_R=float(eta_R),
        e_S=e_S,
    )


@dataclass(frozen=True)
class PathLemmaResult:
    s: int
    holds: bool
    cases: int
    counterexample: tuple | None = None


def verify_path_lemma(s: int) -> PathLemmaResult:
    """For every H = K_{2s-1} minus s edges and every v in H, K_1 ∨ H has a
    path on 2s vertices starting at v (checked exhaustively)."""
    if not 2 <= s <= 3:
        raise ValueError("exhaustive range is 2 <= s <= 3")
    base = families.complete(2 * s - 1)
    all_edges = base.edges()
    cases = 0
    for removed in itertools.combinations(all_edges, s):
        keep = [e for e in all_edges if e not in removed]
        h = Graph.from_edges(2 * s - 1, keep)
        g = join(h, families.complete(1))   # H on 0..2s-2, apex last
        for v in range(h.n):
            cases += 1
            if find_path(g, g.vertex_mask, 2 * s, start=v) is None:
                return PathLemmaResult(s, False, cases, (tuple(removed), v))
    return PathLemmaResult(s, True, cases)
