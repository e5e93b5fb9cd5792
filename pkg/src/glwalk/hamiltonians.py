"""Hamiltonian matrices for the walk models built from a graph.

Every model carries the physics sign convention H = -(matrix of the model):
adjacency -> -A, Laplacian -> -A + D, signless -> -(A + D),
generalized -> -(A + k*D), loop-perturbed -> -(A + q*(E_u + E_v)).
Pre-existing loop weights of the graph fold into the diagonal of A in all
models, so a loop-perturbed model on a plain graph equals the adjacency
model on the same graph with those loop weights attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DegreeStructureError
from .graphs import Graph


@dataclass(frozen=True)
class Adjacency:
    pass


@dataclass(frozen=True)
class Laplacian:
    pass


@dataclass(frozen=True)
class SignlessLaplacian:
    pass


@dataclass(frozen=True)
class Generalized:
    """Degree-scaled family A + k*D; k=0 is adjacency, k=1 signless, k=-1 Laplacian."""

    k: float


@dataclass(frozen=True)
class LoopPerturbed:
    """Adjacency walk with equal self-loop weight q added at the two marked vertices."""

    u: int
    v: int
    q: float

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("loop perturbation needs two distinct vertices")


Model = Union[Adjacency, Laplacian, SignlessLaplacian, Generalized, LoopPerturbed]


@dataclass(frozen=True)
class HamiltonianSpec:
    model: Model
    graph: Graph


def hamiltonian_matrix(spec: HamiltonianSpec) -> np.ndarray:
    """Dense Hamiltonian for the spec's model; exactly symmetric by construction."""
    g = spec.graph
    a = g.adjacency_matrix()
    model = spec.model
    if isinstance(model, Adjacency):
        h = -a
    elif isinstance(model, Laplacian):
        h = -a + np.diag(g.degree_vector().astype(float))
    elif isinstance(model, SignlessLaplacian):
        h = -(a + np.diag(g.degree_vector().astype(float)))
    elif isinstance(model, Generalized):
        h = -(a + model.k * np.diag(g.degree_vector().astype(float)))
    elif isinstance(model, LoopPerturbed):
        g.check_vertex(model.u)
        g.check_vertex(model.v)
        perturbation = np.zeros_like(a)
        perturbation[model.u, model.u] = model.q
        perturbation[model.v, model.v] = model.q
        h = -(a + perturbation)
    else:
        raise TypeError(f"unknown model {model!r}")
    h.setflags(write=False)
    return h


def reduced_spec(graph: Graph, u: int, v: int, k: float) -> tuple[HamiltonianSpec, float]:
    """Loop-perturbed spec dynamically equivalent to the generalized model.

    Requires exactly two degree classes: deg(u) = deg(v) = d1 and every other
    vertex of degree d2 != d1. Dropping the constant d2 background shifts the
    generator by a multiple of the identity (a global phase), leaving the
    adjacency matrix plus weight q = k*(d1 - d2) self-loops at u and v.
    """
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u == v:
        raise DegreeStructureError("the marked vertices must be distinct")
    deg = graph.degree_vector()
    d1 = int(deg[u])
    if int(deg[v]) != d1:
        raise DegreeStructureError(
            f"vertices {u} and {v} have degrees {d1} and {int(deg[v])}; they must match"
        )
    others = [w for w in range(graph.n) if w != u and w != v]
    if not others:
        raise DegreeStructureError("need at least one vertex outside the marked pair")
    d2 = int(deg[others[0]])
    for w in others:
        if int(deg[w]) != d2:
            raise DegreeStructureError(
                f"vertex {w} has degree {int(deg[w])}, expected background degree {d2}"
            )
    if d1 == d2:
        raise DegreeStructureError(
            f"marked and background degrees coincide ({d1}); no loop-weight reduction exists"
        )
    q = k * (d1 - d2)
    return HamiltonianSpec(LoopPerturbed(u, v, q), graph), q


def parse_model(text: str) -> Model:
    """Parse a CLI/config model name.

    Accepted forms: "adjacency", "laplacian", "signless", "generalized:<k>",
    "loops:<u>,<v>,<q>" (decimal reals, scientific notation accepted).
    """
    t = text.strip()
    if t == "adjacency":
        return Adjacency()
    if t == "laplacian":
        return Laplacian()
    if t == "signless":
        return SignlessLaplacian()
    if t.startswith("generalized:"):
        try:
            return Generalized(k=float(t.removeprefix("generalized:")))
        except ValueError:
            raise ValueError(f"cannot parse generalized model parameter in {text!r}") from None
    if t.startswith("loops:"):
        parts = t.removeprefix("loops:").split(",")
        if len(parts) != 3:
            raise ValueError(f"loops model needs 'loops:<u>,<v>,<q>', got {text!r}")
        try:
            return LoopPerturbed(u=int(parts[0]), v=int(parts[1]), q=float(parts[2]))
        except ValueError:
            raise ValueError(f"cannot parse loops model parameters in {text!r}") from None
    raise ValueError(f"unknown model {text!r}")


def model_name(model: Model) -> str:
    """Inverse of parse_model, used for deterministic reports."""
    if isinstance(model, Adjacency):
        return "adjacency"
    if isinstance(model, Laplacian):
        return "laplacian"
    if isinstance(model, SignlessLaplacian):
        return "signless"
    if isinstance(model, Generalized):
        return f"generalized:{model.k:g}"
    if isinstance(model, LoopPerturbed):
        return f"loops:{model.u},{model.v},{model.q:g}"
    raise TypeError(f"unknown model {model!r}")
