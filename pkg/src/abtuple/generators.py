"""Seeded factories for canonical-form instances and unimodular fuzzing.

``generate`` builds a type-A or type-B tuple from a GeneratorSpec: a seeded
random integer basis (standard basis rows pushed through bounded elementary
transvections), the canonical pattern over that basis, a seeded slot
permutation, and a constant translation.  Everything is deterministic per
seed; a spec with unimodular_bound 0, no permutation seed, and no translation
reproduces the literal canonical patterns.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .classify import VARIANT_TYPE_A, VARIANT_TYPE_B, canonical_pattern
from .lattice import Vector
from .tuples import GroupTuple


def random_unimodular(
    dim: int, rng: random.Random, bound: int, steps: int | None = None
) -> list[Vector]:
    """Random determinant-±1 integer matrix as a list of rows.

    Built from the identity by elementary moves: transvections row_i +=
    c*row_j with 1 <= |c| <= bound, row swaps, and row negations.  bound 0
    returns the identity.
    """
    mat = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    if bound <= 0 or dim == 1:
        if bound > 0 and dim == 1 and rng.random() < 0.5:
            mat[0][0] = -1
        return [tuple(row) for row in mat]
    if steps is None:
        steps = 3 * dim + 2
    for _ in range(steps):
        move = rng.randrange(4)
        i, j = rng.sample(range(dim), 2)
        if move <= 1:
            c = rng.choice([-1, 1]) * rng.randint(1, bound)
            mat[i] = [u + c * v for u, v in zip(mat[i], mat[j])]
        elif move == 2:
            mat[i], mat[j] = mat[j], mat[i]
        else:
            mat[i] = [-u for u in mat[i]]
    return [tuple(row) for row in mat]


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one canonical-form instance.

    kind "a" needs odd s; kind "b" needs k breakpoints strictly increasing in
    {1..s-1}.  dim >= s-1.  The basis is the image of the first s-1 standard
    basis rows under a seeded unimodular transform whose transvection
    coefficients are bounded by unimodular_bound (0 = identity).  translation
    is added to every element after the permutation.
    """

    kind: str
    s: int
    dim: int
    k: int = 0
    breakpoints: tuple[int, ...] = ()
    seed: int = 0
    unimodular_bound: int = 0
    translation: Vector | None = None
    permutation_seed: int | None = None


def _validate(spec: GeneratorSpec) -> None:
    if spec.kind not in ("a", "b"):
        raise ValueError(f"kind must be 'a' or 'b', got {spec.kind!r}")
    if spec.s < 2:
        raise ValueError("s must be at least 2")
    if spec.dim < spec.s - 1:
        raise ValueError(f"dim {spec.dim} below basis size {spec.s - 1}")
    if spec.kind == "a":
        if spec.s % 2 == 0:
            raise ValueError("type A requires odd s")
        if spec.k or spec.breakpoints:
            raise ValueError("type A takes no k/breakpoints")
    else:
        if not (0 <= spec.k <= spec.s - 1):
            raise ValueError(f"k must lie in 0..{spec.s - 1}")
        b = spec.breakpoints
        if len(b) != spec.k:
            raise ValueError(f"expected {spec.k} breakpoints, got {len(b)}")
        if b and not (
            all(1 <= a <= spec.s - 1 for a in b)
            and all(x < y for x, y in zip(b, b[1:]))
        ):
            raise ValueError("breakpoints must increase strictly within 1..s-1")
    if spec.translation is not None and len(spec.translation) != spec.dim:
        raise ValueError("translation dimension mismatch")


def generate(spec: GeneratorSpec) -> GroupTuple:
    """Deterministic instance for the spec; see the module docstring."""
    _validate(spec)
    rng = random.Random(spec.seed)
    transform = random_unimodular(spec.dim, rng, spec.unimodular_bound)
    basis = transform[: spec.s - 1]
    if spec.kind == "a":
        pattern = canonical_pattern(VARIANT_TYPE_A, spec.s, basis)
    else:
        pattern = canonical_pattern(
            VARIANT_TYPE_B, spec.s, basis, k=spec.k, breakpoints=spec.breakpoints
        )
    order = list(range(len(pattern)))
    if spec.permutation_seed is not None:
        random.Random(spec.permutation_seed).shuffle(order)
    elements = [pattern[j] for j in order]
    if spec.translation is not None:
        elements = [
            tuple(u + v for u, v in zip(e, spec.translation)) for e in elements
        ]
    return GroupTuple(dim=spec.dim, elements=tuple(elements))


def spec_to_json_obj(spec: GeneratorSpec) -> dict:
    return {
        "kind": spec.kind,
        "s": spec.s,
        "dim": spec.dim,
        "k": spec.k,
        "breakpoints": list(spec.breakpoints),
        "seed": spec.seed,
        "unimodular_bound": spec.unimodular_bound,
        "translation": None if spec.translation is None else list(spec.translation),
        "permutation_seed": spec.permutation_seed,
    }


def spec_from_json_obj(obj: dict) -> GeneratorSpec:
    return GeneratorSpec(
        kind=obj["kind"],
        s=int(obj["s"]),
        dim=int(obj["dim"]),
        k=int(obj.get("k", 0)),
        breakpoints=tuple(obj.get("breakpoints", ())),
        seed=int(obj.get("seed", 0)),
        unimodular_bound=int(obj.get("unimodular_bound", 0)),
        translation=(
            None if obj.get("translation") is None else tuple(obj["translation"])
        ),
        permutation_seed=obj.get("permutation_seed"),
    )
