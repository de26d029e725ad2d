"""Acceptance criteria, one test each; every test records a PASS/FAIL line
that is printed in the terminal summary."""

import json
import time

import numpy as np
import pytest

from repvar import GroupDescriptor, random_unitary
from repvar.cli import main
from repvar.cohomology import (b1, coboundary, formula_dims, free_cohomology_dims, h1,
                               relator_differential, schottky_tangent, z1)
from repvar.group_core import center_component_count
from repvar.representation import (FreeRep, conjugate, is_good, random_good_schottky,
                                   schottky_candidate, trivial_free_rep)
from repvar.surface_group import evaluate_cocycle, relator
from repvar.symplectic import FormKind, fox_pairing, pairing_matrix, verify_lagrangian
from repvar.topology import (control_rep, lift_independence_check, obstruction_class,
                             random_schottky_psl)

from .conftest import ACCEPTANCE_LINES, GRID

SEEDS = 20


def record(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


@pytest.fixture(scope="module")
def grid_reps():
    start = time.perf_counter()
    reps = {}
    for fam, n, g in GRID:
        desc = GroupDescriptor(fam, n)
        for strict in (True, False):
            reps[(fam, n, g, strict)] = [random_good_schottky(desc, g, strict, s) for s in range(SEEDS)]
    return reps, time.perf_counter() - start


def test_1_dimension_formulas(grid_reps):
    reps, gen_time = grid_reps
    start = time.perf_counter()
    failures = []
    for (fam, n, g, strict), lst in reps.items():
        f = formula_dims(GroupDescriptor(fam, n), g)
        want = (f["Z1"], f["B1"], f["H1"], f["schottky_strict"] if strict else f["schottky"])
        for s, rep in enumerate(lst):
            got = (z1(rep).dim, b1(rep).dim, h1(rep).dim, schottky_tangent(rep, strict).dim)
            if got != want:
                failures.append((fam, n, g, strict, s, got, want))
    elapsed = gen_time + time.perf_counter() - start
    record(1, not failures and elapsed < 120,
           f"{sum(map(len, reps.values()))} reps, mismatches={failures[:3]}, {elapsed:.1f}s (< 120s)")


def test_2_fox_oracle(grid_reps):
    reps, _ = grid_reps
    rng = np.random.default_rng(2)
    worst = 0.0
    for lst in reps.values():
        for rep in lst:
            k, d = rep.num_generators, rep.descriptor.dim_G
            phi = rng.normal(size=(k, d, 100)) + 1j * rng.normal(size=(k, d, 100))
            direct = evaluate_cocycle(rep, phi, relator(rep.genus))
            fox = relator_differential(rep) @ phi.reshape(k * d, 100)
            err = np.linalg.norm(fox - direct, axis=0) / np.maximum(1.0, np.linalg.norm(direct, axis=0))
            worst = max(worst, float(err.max()))
    record(2, worst <= 1e-10, f"max relative error {worst:.2e} (<= 1e-10)")


def test_3_lagrangian(grid_reps):
    reps, _ = grid_reps
    bad = []
    count = 0
    for (fam, n, g, strict), lst in reps.items():
        if not strict:
            continue
        for s, rep in enumerate(lst):
            count += 1
            r = verify_lagrangian(rep, tol=1e-9)
            if not r.lagrangian:
                bad.append((fam, n, g, s, r))
    record(3, not bad, f"{count} strict reps, isotropic and half-dimensional; failures={bad[:2]}")


def test_4_pairing_contracts(grid_reps):
    reps, _ = grid_reps
    rng = np.random.default_rng(4)
    worst_cob = worst_herm = worst_anti = 0.0
    rank_fail, conj_fail = [], []
    for key, lst in reps.items():
        desc = GroupDescriptor(key[0], key[1])
        for s, rep in enumerate(lst):
            hs = h1(rep)
            zs = z1(rep).basis
            mats = {k: pairing_matrix(rep, hs, k) for k in FormKind}
            for k, pm in mats.items():
                if pm.rank != hs.dim:
                    rank_fail.append((key, s, k.value, pm.rank, hs.dim))
            bil, her = mats[FormKind.BILINEAR], mats[FormKind.HERMITIAN]
            worst_anti = max(worst_anti, np.abs(bil.entries + bil.entries.T).max() / bil.scale)
            worst_herm = max(worst_herm, np.abs(her.entries - her.entries.conj().T).max() / her.scale)
            for _ in range(50):
                a = rng.normal(size=desc.dim_G) + 1j * rng.normal(size=desc.dim_G)
                a /= np.linalg.norm(a)
                c = rng.normal(size=zs.shape[1]) + 1j * rng.normal(size=zs.shape[1])
                phi = zs @ (c / np.linalg.norm(c))
                delta = coboundary(rep, a)
                for k, pm in mats.items():
                    v = max(abs(fox_pairing(rep, delta, phi, k)), abs(fox_pairing(rep, phi, delta, k)))
                    worst_cob = max(worst_cob, v / pm.scale)
            if s < 5:
                c = conjugate(rep, random_unitary(desc, 10_000 + s))
                if any(pairing_matrix(c, form_kind=k).rank != mats[k].rank for k in FormKind):
                    conj_fail.append((key, s))
    ok = (worst_cob <= 1e-9 and worst_herm <= 1e-9 and worst_anti <= 1e-9
          and not rank_fail and not conj_fail)
    record(4, ok, f"coboundary {worst_cob:.1e}, hermiticity {worst_herm:.1e}, antisymmetry "
                  f"{worst_anti:.1e} (<= 1e-9); rank failures={rank_fail[:2]}, conjugation failures={conj_fail[:2]}")


def _free_cases():
    cases = []
    for name in ("SL2", "SL3", "GL2"):
        desc = GroupDescriptor.parse(name)
        n = desc.n
        theta = np.arange(1, n + 1) - (n + 1) / 2
        diag = np.diag(np.exp(1j * theta))
        diag2 = np.diag(np.exp(0.7j * theta))
        for rank in (1, 2, 3):
            cases.append(trivial_free_rep(desc, rank))
            cases.append(FreeRep(desc, rank, (diag,) + (diag2,) * (rank - 1)))
            cases.append(FreeRep(desc, rank, tuple(random_unitary(desc, 100 * rank + i).matrix
                                                  for i in range(rank))))
        cases.append(FreeRep(desc, 2, (diag, np.eye(n))))
    return cases


def test_5_free_group_formula():
    cases = _free_cases()
    bad = []
    good_count = 0
    for rep in cases:
        r = free_cohomology_dims(rep)
        d = rep.descriptor
        ok = (r.dim_Z1 == rep.rank * d.dim_G
              and r.dim_H1 == rep.rank * d.dim_G - d.dim_G + r.stabilizer_lie_dim and r.matches)
        good_count += is_good(rep).is_good
        if not ok:
            bad.append((str(d), rep.rank, r))
    record(5, len(cases) == 30 and not bad and 0 < good_count < 30,
           f"{len(cases)} free reps ({good_count} good), failures={bad[:2]}")


def test_6_topological_triviality():
    counter = []
    twists_ok = True
    total = 0
    for n, genera in ((2, (1, 2, 3)), (3, (1, 2))):
        for g in genera:
            for s in range(50):
                rep = random_schottky_psl(n, g, s)
                total += 1
                cls = obstruction_class(rep)
                if not cls.trivial:
                    counter.append((n, g, s, cls.index))
                twists_ok &= lift_independence_check(rep, seed=s, twists=20)
    control = obstruction_class(control_rep())
    control_ok = abs(control.value + 1) <= 1e-12 and lift_independence_check(control_rep(), 0, twists=20)
    record(6, not counter and twists_ok and control_ok,
           f"{total} Schottky PSL reps trivial (counterexamples={counter[:3]}), control zeta="
           f"{control.value.real:+.0f}, lift independence={twists_ok and control_ok}")


def test_7_component_counts():
    checks = [(("SL", 2), 2, 4), (("SL", 3), 3, 27)]
    checks += [((fam, n), g, 1) for fam in ("GL", "PSL", "TORUS") for n in (1, 2, 3, 4) for g in (1, 2, 5)
               if not (fam == "PSL" and n == 1)]
    bad = [(c, g, want) for c, g, want in checks
           if center_component_count(GroupDescriptor(*c), g) != want]
    record(7, not bad, f"{len(checks)} cases, mismatches={bad}")


def test_8_goodness_construction(grid_reps):
    reps, _ = grid_reps
    all_good = all(is_good(rep).is_good for lst in reps.values() for rep in lst)
    hits = sum(is_good(schottky_candidate(GroupDescriptor("SL", 2), 2, True, s)).is_good for s in range(100))
    record(8, all_good and hits >= 90,
           f"all {sum(map(len, reps.values()))} grid reps good within 16 retries; first-attempt rate {hits}/100 (>= 90)")


def test_9_cli_determinism(capsys):
    outs = []
    for _ in range(2):
        assert main(["analyze", "--generate", "SL2 g=2 strict seed=7"]) == 0
        outs.append(capsys.readouterr().out)
    grid = ",".join(f"{fam}{n}:{g}" for fam, n, g in GRID)
    tables = []
    for _ in range(2):
        assert main(["dim-table", "--grid", grid, "--seeds", str(SEEDS)]) == 0
        tables.append(capsys.readouterr().out)
    agree = json.loads(tables[0])["all_agree"]
    record(9, outs[0] == outs[1] and tables[0] == tables[1] and agree,
           f"byte-identical analyze={outs[0] == outs[1]}, dim-table={tables[0] == tables[1]}, all_agree={agree}")
