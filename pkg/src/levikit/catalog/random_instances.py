"""
Seeded random instances: sl2 or sl2 + sl2 acting on a graded nilpotent radical, transported by
a random inner automorphism exp(ad X) with X in the radical.

Modules are the irreducible V(n) with basis u_0, ..., u_n:
h u_k = (n - 2k) u_k, f u_k = u_{k+1}, e u_k = k (n - k + 1) u_{k-1}.
An odd V(n) may carry the invariant bracket [u_k, u_{n-k}] = (-1)^k z into a central z.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from levikit.algebra import LieAlgebra, automorphism_exp
from levikit.errors import DimensionMismatch
from levikit.gradings import (
    DerivationFamily,
    Grading,
    grading_to_derivations,
    transport_family,
    transport_grading,
)
from levikit.linalg import Subspace, Vector, combine, unit_vector


@dataclass(frozen=True)
class RandomInstance:
    algebra: LieAlgebra
    grading: Grading
    family: DerivationFamily
    expected_levi: Subspace
    seed: int
    radical: Optional[Subspace] = field(compare=False, default=None)
    inner: bool = False


@dataclass
class _Module:
    highest_weight: int
    copy: int
    start: int

    @property
    def dim(self) -> int:
        return self.highest_weight + 1


def _block(copies: int) -> Tuple[List[str], List[Tuple[int, int, int, int]]]:
    names: List[str] = []
    entries = []
    for c in range(copies):
        suffix = "" if copies == 1 else str(c + 1)
        h, e, f = 3 * c, 3 * c + 1, 3 * c + 2
        names += [f"h{suffix}", f"e{suffix}", f"f{suffix}"]
        entries += [(h, e, e, 2), (h, f, f, -2), (e, f, h, 1)]
    return names, entries


def _module_entries(module: _Module) -> List[Tuple[int, int, int, int]]:
    n, base = module.highest_weight, module.start
    h, e, f = 3 * module.copy, 3 * module.copy + 1, 3 * module.copy + 2
    entries = []
    for k in range(n + 1):
        u = base + k
        if n - 2 * k:
            entries.append((h, u, u, n - 2 * k))
        if k < n:
            entries.append((f, u, u + 1, 1))
        if k > 0:
            entries.append((e, u, u - 1, k * (n - k + 1)))
    return entries


def random_instance(seed: int, max_dim: int, inner: Optional[bool] = None) -> RandomInstance:
    """Deterministic instance of dimension at most ``max_dim`` (at least 3).

    The dimension is drawn from ``3..max_dim`` first. The untransported grading has degrees
    (weights under each h, level): the semisimple block at level 0, modules at level 1, the
    center z at level 2. An inner instance drops the level, so its family is ad of the
    transported h's. ``inner`` is drawn from the seed unless given.
    """
    if max_dim < 3:
        raise DimensionMismatch(f"max_dim must be at least 3, got {max_dim}")
    rng = random.Random(seed)
    target = rng.randint(3, max_dim)
    copies = 2 if target >= 8 and rng.random() < 0.5 else 1
    names, entries = _block(copies)
    budget = target - 3 * copies

    modules: List[_Module] = []
    dim = 3 * copies
    while budget >= 2:
        n = rng.randint(1, min(budget - 1, 4))
        module = _Module(n, rng.randrange(copies), dim)
        modules.append(module)
        dim += module.dim
        budget -= module.dim

    odd = [m for m in modules if m.highest_weight % 2 == 1]
    center: Optional[int] = None
    trivial: Optional[int] = None
    if budget == 1:
        if odd and rng.random() < 0.5:
            center = dim
        else:
            trivial = dim
        dim += 1
    drawn_inner = rng.random() < 0.4
    inner = drawn_inner if inner is None else inner

    for i, module in enumerate(modules):
        names += [f"u{i}_{k}" for k in range(module.dim)]
        entries += _module_entries(module)
    if center is not None:
        names.append("z")
        m = odd[0]
        n = m.highest_weight
        for k in range((n + 1) // 2):
            entries.append((m.start + k, m.start + n - k, center, (-1) ** k))
    if trivial is not None:
        names.append("w")

    g = LieAlgebra(dim, tuple(names), tuple(entries))

    degrees: List[Tuple[int, ...]] = []
    for c in range(copies):
        for weight in (0, 2, -2):
            degrees.append(tuple(weight if d == c else 0 for d in range(copies)) + (0,))
    for module in modules:
        for k in range(module.dim):
            w = module.highest_weight - 2 * k
            degrees.append(tuple(w if d == module.copy else 0 for d in range(copies)) + (1,))
    if center is not None:
        degrees.append((0,) * copies + (2,))
    if trivial is not None:
        degrees.append((0,) * copies + (1,))
    if inner:
        degrees = [d[:copies] for d in degrees]
    grading = Grading.from_degrees(len(degrees[0]), degrees)
    family = grading_to_derivations(g, grading)

    radical = Subspace.span(dim, [unit_vector(dim, k) for k in range(3 * copies, dim)])
    coefficients = [Fraction(rng.randint(-2, 2)) for _ in range(3 * copies, dim)]
    X: Vector = combine(coefficients, radical.vectors, dim)
    transform = automorphism_exp(g, X)
    inverse = automorphism_exp(g, tuple(-c for c in X))
    block = Subspace.span(dim, [unit_vector(dim, k) for k in range(3 * copies)])

    labels = tuple(f"weight_h{c + 1}" for c in range(copies)) + (() if inner else ("level",))
    family = DerivationFamily(g, family.matrices, labels)
    return RandomInstance(
        algebra=g,
        grading=transport_grading(grading, transform),
        family=transport_family(family, transform, inverse, g),
        expected_levi=block.image_under(transform),
        seed=seed,
        radical=radical,
        inner=inner,
    )
