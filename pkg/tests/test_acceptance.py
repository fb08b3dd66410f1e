"""Exit criteria, each run at its stated tolerance and time budget."""
import time

import numpy as np

from depolar import geometry
from depolar.channels import CompressionMap, apply_channel, build_A, build_channel, reshuffle
from depolar.cp_region import Region, classify, is_cp, qutrit_closed_form, qutrit_invariant_polynomials
from depolar.su_basis import (
    GeneratorBasis,
    coherence_from_density,
    default_basis,
    density_from_coherence,
    gell_mann_basis,
    pauli_tensor_basis,
)

QUBIT = gell_mann_basis(2)


def test_c1_tetrahedron_vertices(criterion):
    worst = 0.0
    regions = []
    for v in [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]:
        cmap = CompressionMap(2, v)
        eig = is_cp(cmap, QUBIT).eigenvalues
        worst = max(worst, np.abs(eig - [0, 0, 0, 2]).max())
        regions.append(classify(cmap, QUBIT))
    ok = worst <= 1e-9 and all(r is Region.BOUNDARY for r in regions)
    criterion("C1a vertices boundary with spectrum {2,0,0,0}", ok, f"max dev {worst:.1e}")


def test_c1_partial_transpose_exterior(criterion):
    region = classify(CompressionMap(2, [1, -1, 1]), QUBIT)
    criterion("C1b (1,-1,1) exterior", region is Region.EXTERIOR, region.value)


def test_c1_pancake_exterior(criterion):
    region = classify(CompressionMap(2, [1, 1, 0]), QUBIT)
    criterion("C1c (1,1,0) exterior", region is Region.EXTERIOR, region.value)


def test_c1_pancake_min_eigenvalue(criterion):
    lo = is_cp(CompressionMap(2, [1, 1, 0]), QUBIT).min_eigenvalue
    criterion("C1d (1,1,0) min eigenvalue -0.25 +- 1e-9", abs(lo + 0.25) <= 1e-9, f"got {lo:.17g}")


def test_c2_qutrit_closed_form(criterion):
    t0 = time.perf_counter()
    basis = gell_mann_basis(3)
    rng = np.random.default_rng(2)
    spec_dev = poly_dev = 0.0
    for nu in rng.uniform(-1, 1, (1000, 8)):
        r = is_cp(CompressionMap(3, nu), basis)
        spec_dev = max(spec_dev, np.abs(r.closed_form.spectrum() - r.eigenvalues).max())
        lam = np.linalg.eigvalsh(qutrit_closed_form(nu).H)
        h7, s1, s2 = qutrit_invariant_polynomials(nu)
        sym = [lam.sum(), lam[0] * lam[1] + lam[1] * lam[2] + lam[2] * lam[0], lam.prod()]
        poly_dev = max(poly_dev, np.abs(np.array([h7, s1, s2]) - sym).max())
    dt = time.perf_counter() - t0
    ok = spec_dev <= 1e-9 and poly_dev <= 1e-8 and dt < 5
    criterion("C2 N=3 closed form", ok, f"spectrum {spec_dev:.1e}, h7/s1/s2 {poly_dev:.1e}, {dt:.2f}s")


def test_c3_quart_simplex(criterion):
    t0 = time.perf_counter()
    basis = pauli_tensor_basis(2)
    rng = np.random.default_rng(3)
    verts = geometry.vertices_from_unitaries(basis)
    rank_one = np.zeros(16)
    rank_one[-1] = 4
    vert_dev = 0.0
    for v in verts:
        eig = is_cp(CompressionMap(4, v.nu_pattern), basis).eigenvalues
        vert_dev = max(vert_dev, np.abs(eig - rank_one).max())
    spec_dev, disagree, skipped = 0.0, 0, 0
    for nu in rng.uniform(-1, 1, (1000, 15)):
        r = is_cp(CompressionMap(4, nu), basis)
        spec_dev = max(spec_dev, np.abs(r.closed_form.spectrum() - r.eigenvalues).max())
        if abs(r.min_eigenvalue) <= 1e-7:
            skipped += 1
            continue
        disagree += geometry.convex_decomposition(nu, verts).in_simplex != r.is_cp
    dt = time.perf_counter() - t0
    distinct = len({tuple(v.nu_pattern) for v in verts}) == 16
    ok = spec_dev <= 1e-9 and vert_dev <= 1e-9 and distinct and disagree == 0 and dt < 10
    criterion(
        "C3 N=4 simplex",
        ok,
        f"spectrum {spec_dev:.1e}, vertices {vert_dev:.1e}, disagreements {disagree} "
        f"(skipped {skipped}), {dt:.2f}s",
    )


def test_c4_monte_carlo_volume(criterion):
    t0 = time.perf_counter()
    frac = geometry.sample_region(2, 10**6, seed=2024).cp_fraction
    dt = time.perf_counter() - t0
    criterion("C4 N=2 CP fraction 1/3 +- 0.01", abs(frac - 0.333) <= 0.01 and dt < 30, f"{frac:.5f}, {dt:.2f}s")


def test_c5_simplex_conjecture(criterion):
    reports = {n: geometry.test_simplex_conjecture(n, trials=100, seed=5) for n in (1, 2)}
    ok = all(r.simplex_consistent and r.max_commutator <= 1e-10 for r in reports.values())
    t0 = time.perf_counter()
    r3 = geometry.test_simplex_conjecture(3, trials=100, seed=5)
    dt = time.perf_counter() - t0
    detail = (
        f"n=1,2 commutators {reports[1].max_commutator:.1e}/{reports[2].max_commutator:.1e}; "
        f"n=3 simplex_consistent={r3.simplex_consistent} "
        f"(commutator {r3.max_commutator:.1e}, spectrum {r3.max_spectrum_delta:.1e}) in {dt:.2f}s"
    )
    criterion("C5 simplex conjecture", ok and dt < 60, detail)


def test_c6_pipeline_invariants(criterion):
    worst = {"trace": 0.0, "herm": 0.0, "action": 0.0, "rescale": 0.0}
    involution = True
    for N in (2, 3, 4, 8):
        basis = default_basis(N)
        rng = np.random.default_rng(60 + N)
        d = N * N - 1
        scales = rng.uniform(0.2, 5, d)
        rescaled = GeneratorBasis(N, basis.generators * scales[:, None, None], basis.kind)
        for _ in range(200):
            nu, a = rng.uniform(-1, 1, (2, d))
            cmap = CompressionMap(N, nu)
            ch = build_channel(cmap, basis)
            worst["trace"] = max(worst["trace"], abs(np.trace(ch.B) - N))
            worst["herm"] = max(worst["herm"], np.abs(ch.B - ch.B.conj().T).max())
            involution &= np.array_equal(reshuffle(ch.B), ch.A)
            out = apply_channel(ch, density_from_coherence(a, basis))
            worst["action"] = max(worst["action"], np.abs(coherence_from_density(out, basis) - nu * a).max())
            worst["rescale"] = max(worst["rescale"], np.abs(build_A(cmap, rescaled) - ch.A).max())
    ok = (
        worst["trace"] <= 1e-10
        and worst["herm"] <= 1e-12
        and involution
        and worst["action"] <= 1e-10
        and worst["rescale"] <= 1e-10
    )
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f", involution {involution}"
    criterion("C6 pipeline invariants", ok, detail)


def test_c7_affine_extension(criterion):
    ch = build_channel(CompressionMap(2, [0, 0, 0], translation=[0, 0, 0.5]), QUBIT)
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        a = rng.normal(size=3)
        a *= rng.uniform(0, 1) / np.linalg.norm(a)
        out = apply_channel(ch, density_from_coherence(a, QUBIT))
        worst = max(worst, np.abs(coherence_from_density(out, QUBIT) - [0, 0, 0.5]).max())
    criterion("C7 translated map output (0,0,0.5)", worst <= 1e-10, f"max dev {worst:.1e}")
