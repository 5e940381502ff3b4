"""Named verification suites over the library's invariants.

Each suite bundles related checks into a report of (deviation, tolerance)
pairs: generator relations, orthogonality and round trips, the permutation
equivariance identity, band-limitedness of lifted vectors, and the scalar
constants linking the full-group oracle to the fast transform.  Suites are
deterministic given a seed; randomness comes from numpy's default_rng.

Checks that depend on input scale report a ratio against their input-scaled
bound, with tolerance 1.0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oracle import derive_schur_constants, verify_bandlimit
from .permutations import Permutation, compose, enumerate_group, random_permutation
from .transform import (
    build_plan,
    dense_transform,
    inverse_transform,
    spectral_shift,
    transform,
)
from .yor import standard_irrep, verify_coxeter

SUITES = ("coxeter", "orthogonality", "theorem", "prop1", "schur")


@dataclass(frozen=True)
class Check:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n: int
    seed: int | None
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def max_deviation(self) -> float:
        return max(check.deviation for check in self.checks)


def run_coxeter(n: int) -> SuiteReport:
    """Involution, braid, and distant-commutation relations of the generators."""
    return SuiteReport(
        suite="coxeter",
        n=n,
        seed=None,
        checks=(Check("coxeter_relations", verify_coxeter(n), 1e-12),),
    )


def run_orthogonality(n: int, seed: int = 0, trials: int = 20) -> SuiteReport:
    """Orthogonality of the transform and the irrep, plus round-trip identities."""
    plan = build_plan(n)
    dense = dense_transform(plan)
    orth = float(np.max(np.abs(dense @ dense.T - np.eye(n))))

    rng = np.random.default_rng(seed)
    fast_dense = parseval = roundtrip = inv_dense = irrep_orth = 0.0
    for _ in range(trials):
        x = rng.uniform(-1.0, 1.0, n)
        spectrum = transform(x, plan)
        scale = max(1.0, float(np.max(np.abs(x))))
        fast_dense = max(fast_dense, float(np.max(np.abs(spectrum - dense @ x))) / scale)
        parseval = max(
            parseval,
            abs(float(np.linalg.norm(spectrum)) - float(np.linalg.norm(x)))
            / max(1.0, float(np.linalg.norm(x))),
        )
        roundtrip = max(roundtrip, float(np.max(np.abs(inverse_transform(spectrum, plan) - x))))
        inv_dense = max(inv_dense, float(np.max(np.abs(inverse_transform(x, plan) - dense.T @ x))))
        sigma = random_permutation(n, rng)
        rep = standard_irrep(n, sigma)
        irrep_orth = max(irrep_orth, float(np.max(np.abs(rep @ rep.T - np.eye(n - 1)))))

    return SuiteReport(
        suite="orthogonality",
        n=n,
        seed=seed,
        checks=(
            Check("transform_orthogonality", orth, 1e-12),
            Check("fast_dense_agreement", fast_dense, 1e-12),
            Check("parseval", parseval, 1e-12),
            Check("round_trip", roundtrip, 1e-10),
            Check("inverse_dense_agreement", inv_dense, 1e-12),
            Check("irrep_orthogonality", irrep_orth, 1e-10),
        ),
    )


def _equivariance_deviation(sigma: Permutation, x: np.ndarray, plan) -> float:
    lhs = transform(sigma.apply_to_vector(x), plan)
    rhs = spectral_shift(sigma, transform(x, plan), plan)
    return float(np.max(np.abs(lhs - rhs)))


def run_theorem(n: int, seed: int = 0, trials: int = 500) -> SuiteReport:
    """Permuting the input equals shifting the spectrum.

    Exhaustive over the group for n <= 5 (fresh random vector per element),
    random (permutation, vector) pairs above that.
    """
    plan = build_plan(n)
    rng = np.random.default_rng(seed)
    dev = 0.0
    if n <= 5:
        name = "equivariance_exhaustive"
        for sigma in enumerate_group(n):
            dev = max(dev, _equivariance_deviation(sigma, rng.uniform(-1.0, 1.0, n), plan))
    else:
        name = "equivariance_random"
        for _ in range(trials):
            sigma = random_permutation(n, rng)
            dev = max(dev, _equivariance_deviation(sigma, rng.uniform(-1.0, 1.0, n), plan))

    composition = 0.0
    for _ in range(20):
        sigma = random_permutation(n, rng)
        delta = random_permutation(n, rng)
        spectrum = transform(rng.uniform(-1.0, 1.0, n), plan)
        twice = spectral_shift(delta, spectral_shift(sigma, spectrum, plan), plan)
        once = spectral_shift(compose(sigma, delta), spectrum, plan)
        composition = max(composition, float(np.max(np.abs(twice - once))))

    return SuiteReport(
        suite="theorem",
        n=n,
        seed=seed,
        checks=(Check(name, dev, 1e-10), Check("shift_composition", composition, 1e-10)),
    )


def run_prop1(n: int, seed: int = 0, trials: int = 50) -> SuiteReport:
    """Band-limitedness of lifted vectors, as ratios against the scaled bound."""
    rng = np.random.default_rng(seed)
    off_band = tail = 0.0
    for _ in range(trials):
        report = verify_bandlimit(rng.uniform(-1.0, 1.0, n))
        off_band = max(off_band, report.off_band_max / report.bound)
        tail = max(tail, report.tail_max / report.bound)
    return SuiteReport(
        suite="prop1",
        n=n,
        seed=seed,
        checks=(
            Check("off_band_ratio", off_band, 1.0),
            Check("standard_tail_ratio", tail, 1.0),
        ),
    )


def run_schur(n: int) -> SuiteReport:
    """Diagonality of the linking matrix and the values of its two scalars."""
    report = derive_schur_constants(n)
    lam1_exact = math.factorial(n - 1) * math.sqrt(n)
    lam2_frozen = math.factorial(n - 1) * math.sqrt(n / (n - 1))
    return SuiteReport(
        suite="schur",
        n=n,
        seed=None,
        checks=(
            Check("linking_diagonality", report.off_structure_max, 1e-9),
            Check("lambda1_relative_error", abs(report.lambda1 - lam1_exact) / lam1_exact, 1e-9),
            Check("lambda2_regression", abs(report.lambda2 - lam2_frozen) / lam2_frozen, 1e-9),
            Check("block_split", 0.0 if report.block_split == (1, n - 1) else 1.0, 0.0),
        ),
    )


def run_suite(suite: str, n: int, seed: int = 0) -> list[SuiteReport]:
    """Run one named suite, or all of them for suite='all'."""
    if suite == "coxeter":
        return [run_coxeter(n)]
    if suite == "orthogonality":
        return [run_orthogonality(n, seed)]
    if suite == "theorem":
        return [run_theorem(n, seed)]
    if suite == "prop1":
        return [run_prop1(n, seed)]
    if suite == "schur":
        return [run_schur(n)]
    if suite == "all":
        return [
            run_coxeter(n),
            run_orthogonality(n, seed),
            run_theorem(n, seed),
            run_prop1(n, seed),
            run_schur(n),
        ]
    raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
