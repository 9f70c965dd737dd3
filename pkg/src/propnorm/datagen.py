"""Deterministic generation of the two-category synthetic dataset.

Category A draws feature 1 from an equal-weight mixture of
Normal(5.0, 1.0) and Normal(-1.0, 0.2); category B replaces the second
component with Normal(-2.5, 0.2).  Both categories draw feature 2 from
Normal(3.0, 1.0), so they differ only in the negative cluster of
feature 1.  The proportional representation applies the sign-preserving
base-2 transform elementwise to the uniform draws, which keeps the two
representations consistent draw for draw.

One seeded stream drives everything, consumed in a fixed order:
category A feature 1, A feature 2, then B feature 1, B feature 2.
Identical configs give bit-identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .stats import FeatureMatrix
from .transform import TransformSpec, apply_transform_array

REPRESENTATIONS = ("uniform", "proportional")

SIGN_PRESERVING_BASE2 = TransformSpec("signed_proportional", c=2.0)


@dataclass(frozen=True)
class MixtureSpec:
    """Univariate Gaussian mixture, optionally followed by a transform."""

    components: tuple[tuple[float, float, float], ...]  # (weight, mean, std)
    transform: TransformSpec | None = None

    def __post_init__(self):
        if not self.components:
            raise ValidationError("mixture needs at least one component")
        weights = [w for w, _, _ in self.components]
        if any(w <= 0.0 for w in weights):
            raise ValidationError("component weights must be strictly positive")
        if abs(sum(weights) - 1.0) > 1e-9:
            raise ValidationError(f"component weights must sum to 1, got {sum(weights)!r}")
        if any(std <= 0.0 for _, _, std in self.components):
            raise ValidationError("component stds must be strictly positive")
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))


MIXTURE_CATEGORY_A_F1 = MixtureSpec(((0.5, 5.0, 1.0), (0.5, -1.0, 0.2)))
MIXTURE_CATEGORY_B_F1 = MixtureSpec(((0.5, 5.0, 1.0), (0.5, -2.5, 0.2)))
MIXTURE_SHARED_F2 = MixtureSpec(((1.0, 3.0, 1.0),))


@dataclass(frozen=True)
class DatasetConfig:
    seed: int
    n_per_category: int = 100
    representation: str = "uniform"

    def __post_init__(self):
        if self.n_per_category < 2:
            raise ValidationError(f"n_per_category must be >= 2, got {self.n_per_category}")
        if self.representation not in REPRESENTATIONS:
            raise ValidationError(
                f"representation must be one of {REPRESENTATIONS}, got {self.representation!r}"
            )


def _draw(rng: np.random.Generator, spec: MixtureSpec, n: int) -> np.ndarray:
    weights = np.array([w for w, _, _ in spec.components])
    means = np.array([mu for _, mu, _ in spec.components])
    stds = np.array([sd for _, _, sd in spec.components])
    chosen = rng.choice(len(spec.components), size=n, p=weights)
    values = rng.normal(means[chosen], stds[chosen])
    if spec.transform is not None:
        values = apply_transform_array(spec.transform, values)
    return values


def sample_mixture(spec: MixtureSpec, n: int, seed: int) -> np.ndarray:
    """n mixture draws; per draw a component is chosen by weight, then sampled."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return _draw(np.random.default_rng(seed), spec, n)


def build_dataset(config: DatasetConfig) -> FeatureMatrix:
    """2 * n_per_category rows, features f1/f2, labels A then B."""
    rng = np.random.default_rng(config.seed)
    n = config.n_per_category
    a_f1 = _draw(rng, MIXTURE_CATEGORY_A_F1, n)
    a_f2 = _draw(rng, MIXTURE_SHARED_F2, n)
    b_f1 = _draw(rng, MIXTURE_CATEGORY_B_F1, n)
    b_f2 = _draw(rng, MIXTURE_SHARED_F2, n)
    values = np.column_stack([np.concatenate([a_f1, b_f1]), np.concatenate([a_f2, b_f2])])
    if config.representation == "proportional":
        values = apply_transform_array(SIGN_PRESERVING_BASE2, values)
    labels = ("A",) * n + ("B",) * n
    return FeatureMatrix(values, ("f1", "f2"), labels)
