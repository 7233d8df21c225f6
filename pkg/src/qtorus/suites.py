"""Verification suites assembled from a session configuration."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor

from .algebra import tensor
from .classical import mackey_table
from .cocycles import check_cocycles
from .config import SessionConfig
from .haar import check_coaction, check_haar_invariance
from .induction import classical_count_matches, classify, compare_formulas
from .model import ModelSpace, check_faithfulness, check_homomorphism, verify_model_relations
from .multitorus import (
    QuantumMultitorus,
    antipode_left,
    antipode_right,
    check_monomial_identification,
    check_relations,
    coinverse,
    counit,
    counit_left,
    counit_right,
    delta,
    delta_left_id,
    id_delta_right,
    is_commutative_on,
)
from .report import Report
from .sampling import random_pairs

SUITES = ("relations", "hopf", "haar", "coaction", "cocycles", "induction", "model")
COCYCLE_VECTORS = {
    2: [(1, 1), (2, 1), (1, 0), (0, 0), (1, -1), (2, 2)],
    3: [(1, 1, 0), (2, 1, 0), (1, 1, 1), (2, 2, 1), (1, 0, -1), (0, 0, 0)],
}


def workers() -> int:
    try:
        return max(1, int(os.environ.get("QTORUS_WORKERS", "1")))
    except ValueError:
        return 1


def algebra(cfg: SessionConfig) -> QuantumMultitorus:
    return QuantumMultitorus(cfg.theta, cfg.conductor)


def monomial_keys(A: QuantumMultitorus, bound: int):
    for s in A.perms:
        for r in itertools.product(range(-bound, bound + 1), repeat=A.n):
            yield (s, r)


# ---------------------------------------------------------------------------


def run_relations(cfg: SessionConfig) -> Report:
    A = algebra(cfg)
    rep = check_relations(cfg.theta, N=A.N)
    check_monomial_identification(A, min(cfg.degree_bound, 1), rep)
    sample = [A.monomial(s, r) for s in A.perms for r in itertools.product((-1, 0, 1), repeat=A.n)]
    comm = is_commutative_on(sample)
    rep.notes["commutative"] = comm
    if not any(cfg.theta(i, j) for i in range(1, A.n + 1) for j in range(1, A.n + 1)):
        rep.add("theta = 0 gives a commutative algebra", {}, comm)
    return rep


def kappa_generator_reading(A: QuantumMultitorus, i: int, k: int):
    """kappa(u_ik) under the reading kappa(x_{sigma,i}) = x*_{sigma^-1, sigma(i)}."""
    out = A.zero()
    for s in A.perms:
        if s(k) == i:
            out = out + A.x_gen(s.inverse(), s(i)).star()
    return out


def run_hopf(cfg: SessionConfig) -> Report:
    A = algebra(cfg)
    rep = Report("hopf")
    n = A.n
    rng = range(1, n + 1)
    one = A.one()
    U = A.u_matrix()
    for i in rng:
        for k in rng:
            want = A.tensor_square().zero()
            for j in rng:
                want = want + tensor(U[i - 1][j - 1], U[j - 1][k - 1])
            rep.expect_zero("Delta(u_ik) = sum_j u_ij (x) u_jk", {"i": i, "k": k}, delta(U[i - 1][k - 1]) - want)
            rep.expect_zero("kappa(u_ik) = u_ki^*", {"i": i, "k": k},
                            coinverse(U[i - 1][k - 1]) - U[k - 1][i - 1].star())
            rep.add("counit(u_ik) = delta_ik", {"i": i, "k": k}, counit(U[i - 1][k - 1]) == (1 if i == k else 0))
    for i in rng:
        for j in rng:
            d = one if i == j else A.zero()
            left = sum((U[i - 1][k - 1] * coinverse(U[k - 1][j - 1]) for k in rng), A.zero())
            right = sum((coinverse(U[i - 1][k - 1]) * U[k - 1][j - 1] for k in rng), A.zero())
            rep.expect_zero("sum_k u_ik kappa(u_kj) = delta_ij 1", {"i": i, "j": j}, left - d)
            rep.expect_zero("sum_k kappa(u_ik) u_kj = delta_ij 1", {"i": i, "j": j}, right - d)
            alt = sum((U[i - 1][k - 1] * kappa_generator_reading(A, k, j) for k in rng), A.zero())
            rep.add("antipode identity with kappa(x_{sigma,i}) = x*_{sigma^-1, sigma(i)}", {"i": i, "j": j},
                    alt == d, None if alt == d else alt - d, informational=True)

    for key in monomial_keys(A, cfg.degree_bound):
        params = {"sigma": key[0], "r": key[1]}
        x = A.basis_element(key)
        dx = A.delta_monomial(key)
        rep.expect_zero("(Delta (x) id) Delta = (id (x) Delta) Delta", params, delta_left_id(dx) - id_delta_right(dx))
        rep.expect_zero("(epsilon (x) id) Delta = id", params, counit_left(dx) - x)
        rep.expect_zero("(id (x) epsilon) Delta = id", params, counit_right(dx) - x)
        eps = counit(x)
        rep.expect_zero("m (kappa (x) id) Delta = epsilon 1", params, antipode_left(dx) - one.scale(eps))
        rep.expect_zero("m (id (x) kappa) Delta = epsilon 1", params, antipode_right(dx) - one.scale(eps))
        rep.expect_zero("closed-form Delta equals generator-path Delta", params,
                        dx - A.delta_monomial_generator_path(key))
        rep.expect_zero("Delta(x^*) = Delta(x)^*", params, delta(x.star()) - dx.star())
    for idx, (a, b) in enumerate(random_pairs(A, 20, seed=7, bound=min(cfg.degree_bound, 2))):
        rep.expect_zero("Delta(ab) = Delta(a) Delta(b)", {"sample": idx}, delta(a * b) - delta(a) * delta(b))
        rep.expect_zero("kappa(ab) = kappa(b) kappa(a)", {"sample": idx},
                        coinverse(a * b) - coinverse(b) * coinverse(a))
        rep.expect_zero("kappa(kappa(a)^*)^* = a", {"sample": idx}, coinverse(coinverse(a).star()).star() - a)
    return rep


def run_haar(cfg: SessionConfig, samples: int = 100) -> Report:
    A = algebra(cfg)
    return check_haar_invariance(A, cfg.degree_bound, random_pairs(A, samples, seed=11, bound=2))


def run_coaction(cfg: SessionConfig) -> Report:
    return check_coaction(algebra(cfg), cfg.degree_bound)


def run_cocycles(cfg: SessionConfig) -> Report:
    A = algebra(cfg)
    vecs = COCYCLE_VECTORS.get(A.n) or [tuple(itertools.islice(itertools.cycle((1, 1, 0, -1)), A.n))]
    return check_cocycles(cfg.theta, vecs, A)


def run_induction(cfg: SessionConfig, bound: int | None = None, formulas: bool = True):
    """Classification report plus (notes) the orbit table and the classical comparison."""
    A = algebra(cfg)
    bound = cfg.degree_bound if bound is None else bound
    cl = classify(A, bound, cfg.user_tables())
    rep = cl.report
    rep.notes["table"] = cl.table
    classical = mackey_table(A.n, bound)
    rep.notes["classical_count"] = len(classical)
    rep.notes["count"] = len(cl.table)
    rep.add("irrep count and dimensions match the classical Mackey enumeration", {"bound": bound},
            classical_count_matches(cl.table, classical))
    if formulas:
        rep.extend(compare_formulas(A, min(bound, 1), cfg.user_tables()))
    return rep, cl


def run_model(cfg: SessionConfig, M: int | None = None, pairs: int = 200) -> Report:
    A = algebra(cfg)
    space = ModelSpace(cfg.theta, M or cfg.M, A.N)
    rep = verify_model_relations(space)
    if A.n >= 3:
        alt = verify_model_relations(space, "inverse", Report("model"))
        for c in alt.checks:
            c.informational = True
        rep.extend(alt)
    check_homomorphism(A, space, random_pairs(A, pairs, seed=5, bound=2), rep)
    check_faithfulness(A, space, rep)
    rep.notes["dimension"] = space.dim
    return rep


RUNNERS = {
    "relations": run_relations,
    "hopf": run_hopf,
    "haar": run_haar,
    "coaction": run_coaction,
    "cocycles": run_cocycles,
    "induction": lambda cfg: run_induction(cfg)[0],
    "model": run_model,
}


def run_suite(name: str, cfg: SessionConfig) -> Report:
    if name == "all":
        out = Report("all")
        names = list(SUITES)
        with ThreadPoolExecutor(max_workers=workers()) as pool:
            reports = list(pool.map(lambda s: RUNNERS[s](cfg), names))
        for s, r in zip(names, reports):
            out.extend(r)
            out.notes[f"{s}.passed"] = r.passed
        return out
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return RUNNERS[name](cfg)

