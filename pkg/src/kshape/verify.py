"""Verification sweeps: independent oracles, theorem checks, and the
named check registry behind the command line.

Gating checks re-derive both sides of each identity through unrelated
code paths (classical word charge vs. chain recursions, counting vs.
bijection).  Conjecture checks never gate; they only report findings.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import classical
from .errors import IntegrityError
from .partitions import (
    Partition,
    boundary_size,
    format_partition,
    is_p_core,
    partitions_of,
)
from .poset import (
    build_poset,
    enumerate_paths,
    is_k_shape,
    kshapes_of_size,
    path_classes,
)
from .kshape_tableaux import (
    KShapeTableau,
    chain_characterization,
    charge_cocharge_residual,
    charge_kshape,
    cocharge_kshape,
    enumerate_kshape_tableaux,
    letter_charges,
    letter_cocharges,
)
from .pushout import full_descent, weak_bijection_standard
from .tpoly import TPoly, TruncatedSymPoly
from .weak_tableaux import (
    charge_any_weight,
    charge_dominant_semistandard,
    charge_standard,
    cocharge_standard,
    enumerate_standard_k_tableaux,
    enumerate_weak_tableaux,
    is_standard_step,
    make_weak_tableau,
    sigma_involution,
    standard_shapes,
)

classical_charge = classical.classical_charge


# ---------------------------------------------------------------------------
# symmetric-function layer


def dual_kschur_truncated(
    lam: Partition,
    k: int,
    variables: int,
    grading: str = "charge",
    weights: str = "all",
    max_degree: int | None = None,
) -> TruncatedSymPoly:
    """Generating function of weak tableaux of a shape over x_1..x_v.

    grading "charge" weighs each tableau by t^charge, "none" counts.
    weights "standard" keeps only weight (1,...,1).
    """
    acc: dict[tuple[int, ...], TPoly] = {}
    for t in enumerate_weak_tableaux(lam, k, variables):
        if weights == "standard" and not t.is_standard():
            continue
        if max_degree is not None and sum(t.weight) > max_degree:
            continue
        power = charge_any_weight(t) if grading == "charge" else 0
        expo = t.weight
        acc[expo] = acc.get(expo, TPoly()) + TPoly.monomial(power)
    return TruncatedSymPoly.of(variables, acc)


def branching_poly(lam: Partition, mu: Partition, k: int) -> TPoly:
    """Sum of t^charge over path classes from lam to mu."""
    return TPoly.from_powers(c.charge for c in path_classes(lam, mu, k))


def k_cores_of_boundary(k: int, size: int) -> tuple[Partition, ...]:
    return tuple(v for v in kshapes_of_size(k, size) if is_p_core(v, k))


def k1_cores_of_boundary(k: int, size: int) -> tuple[Partition, ...]:
    return tuple(v for v in kshapes_of_size(k, size) if is_p_core(v, k + 1))


# ---------------------------------------------------------------------------
# report plumbing


@dataclass
class VerificationReport:
    name: str
    params: dict
    instances: int
    passed: bool
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    conjecture: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else ("FINDINGS" if self.conjecture else "FAIL")
        extra = f" ({len(self.failures)} failures)" if self.failures else ""
        return (
            f"{status} {self.name} instances={self.instances}"
            f" elapsed={self.elapsed:.2f}s{extra}"
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "check": self.name,
                "params": self.params,
                "instances": self.instances,
                "passed": self.passed,
                "conjecture": self.conjecture,
                "failures": self.failures,
                "elapsed_s": round(self.elapsed, 3),
            },
            indent=2,
        )


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("KSHAPE_WORKERS", "1")))
    except ValueError:
        return 1


def _map_instances(fn: Callable, items: list) -> list:
    workers = _worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=1))


def _run(name, params, instance_fn, instances, conjecture=False) -> VerificationReport:
    start = time.time()
    items = list(instances)
    failures: list[str] = []
    count = 0
    for sub_count, sub_failures in _map_instances(instance_fn, items):
        count += sub_count
        failures.extend(sub_failures)
    return VerificationReport(
        name=name,
        params=params,
        instances=count,
        passed=not failures,
        failures=failures,
        elapsed=time.time() - start,
        conjecture=conjecture,
    )


# ---------------------------------------------------------------------------
# fixture checks (exact values transcribed from worked examples)


def check_kshape_fixture(**_params) -> VerificationReport:
    def inst(_):
        fails = []
        from .partitions import row_shape, col_shape

        lam = (8, 4, 3, 2, 1, 1, 1)
        if not is_k_shape(lam, 4):
            fails.append("(8,4,3,2,1,1,1) should be a 4-shape")
        if row_shape(lam, 4) != (4, 2, 2, 1, 1, 1, 1):
            fails.append(f"row profile {row_shape(lam, 4)}")
        if col_shape(lam, 4) != (3, 2, 2, 1, 1, 1, 1, 1):
            fails.append(f"col profile {col_shape(lam, 4)}")
        if boundary_size(lam, 4) != 12:
            fails.append(f"boundary {boundary_size(lam, 4)}")
        if is_k_shape((3, 3, 1), 4):
            fails.append("(3,3,1) should not be a 4-shape")
        from .partitions import row_shape as rs

        if rs((3, 3, 1), 4) != (2, 3, 1):
            fails.append(f"row profile of (3,3,1): {rs((3, 3, 1), 4)}")
        return 6, fails

    return _run("kshape-fixture", {}, inst, [0])


POSET_2_4_EDGES = {
    ((2, 2, 1, 1), (3, 2, 1, 1), "row"),
    ((3, 1, 1), (3, 2, 1, 1), "column"),
    ((3, 1, 1), (4, 2, 1), "row"),
    ((4, 2), (4, 2, 1), "column"),
    ((3, 2, 1, 1), (4, 3, 2, 1), "row"),
    ((4, 2, 1), (4, 3, 2, 1), "column"),
}

POSET_3_5_DIAGRAM_EDGES = {
    ((2, 2, 1, 1, 1), (3, 2, 2, 1, 1), "row"),
    ((3, 1, 1, 1), (3, 2, 1, 1), "row"),
    ((3, 2, 1), (3, 2, 1, 1), "column"),
    ((3, 2, 1), (4, 2, 1), "row"),
    ((4, 1, 1), (4, 2, 1), "column"),
    ((5, 2), (5, 3, 1), "column"),
    ((3, 2, 1, 1), (3, 2, 2, 1, 1), "column"),
    ((3, 2, 1, 1), (4, 2, 1, 1), "row"),
    ((4, 2, 1), (4, 2, 1, 1), "column"),
    ((4, 2, 1), (5, 3, 1), "row"),
}

# valid moves the Hasse picture omits because they factor through a vertex
POSET_3_5_COMPOSITE_EDGES = {
    ((3, 1, 1, 1), (4, 2, 1, 1), "row"),
    ((4, 1, 1), (4, 2, 1, 1), "column"),
}


def check_poset_fixture(**_params) -> VerificationReport:
    def inst(_):
        fails = []
        p = build_poset(2, 4)
        edges = {
            (v, m.target, m.orientation) for v in p.vertices for m in p.edges[v]
        }
        if set(p.vertices) != {e[0] for e in POSET_2_4_EDGES} | {(4, 3, 2, 1)}:
            fails.append(f"poset(2,4) vertices: {p.vertices}")
        if edges != POSET_2_4_EDGES:
            fails.append(f"poset(2,4) edges: {sorted(edges)}")
        if len(p.vertices) != 6 or p.edge_count != 6:
            fails.append(f"poset(2,4) counts {len(p.vertices)}/{p.edge_count}")

        p3 = build_poset(3, 5)
        want_vertices = {
            (2, 2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 1), (4, 1, 1), (5, 2),
            (3, 2, 1, 1), (4, 2, 1),
            (3, 2, 2, 1, 1), (4, 2, 1, 1), (5, 3, 1),
        }
        edges3 = {
            (v, m.target, m.orientation) for v in p3.vertices for m in p3.edges[v]
        }
        if set(p3.vertices) != want_vertices:
            fails.append(f"poset(3,5) vertices: {p3.vertices}")
        if edges3 != POSET_3_5_DIAGRAM_EDGES | POSET_3_5_COMPOSITE_EDGES:
            fails.append(f"poset(3,5) edges: {sorted(edges3)}")

        for p_, kk in ((p, 2), (p3, 3)):
            if set(p_.maximal_vertices()) != {
                v for v in p_.vertices if is_p_core(v, kk + 1)
            }:
                fails.append(f"maximal vertices of ({kk}) poset")
            if set(p_.minimal_vertices()) != {
                v for v in p_.vertices if is_p_core(v, kk)
            }:
                fails.append(f"minimal vertices of ({kk}) poset")
        p0 = build_poset(2, 0)
        if p0.vertices != ((),) or p0.edge_count != 0:
            fails.append("poset(2,0) is not the single empty vertex")
        return 3, fails

    return _run("poset-fixture", {}, inst, [0])


def check_paths_fixture(**_params) -> VerificationReport:
    def inst(_):
        fails = []
        paths = enumerate_paths((3, 1, 1), (4, 3, 2, 1), 2)
        if sorted(p.charge() for p in paths) != [2, 3]:
            fails.append(f"charges {sorted(p.charge() for p in paths)}")
        cls = path_classes((3, 1, 1), (4, 3, 2, 1), 2)
        if len(cls) != 2:
            fails.append(f"{len(cls)} classes for the 2-shape pair")
        paths3 = enumerate_paths((3, 2, 1), (4, 2, 1, 1), 3)
        if sorted(p.charge() for p in paths3) != [1, 1]:
            fails.append(f"charges {sorted(p.charge() for p in paths3)}")
        cls3 = path_classes((3, 2, 1), (4, 2, 1, 1), 3)
        if len(cls3) != 1:
            fails.append(f"{len(cls3)} classes for the 3-shape pair")
        self_paths = enumerate_paths((3, 1, 1), (3, 1, 1), 2)
        if len(self_paths) != 1 or self_paths[0].moves:
            fails.append("self paths are not exactly the empty path")
        return 3, fails

    return _run("paths-fixture", {}, inst, [0])


def check_charge_fixture(**_params) -> VerificationReport:
    def inst(_):
        from .weak_tableaux import parse_tableau_text
        from .kshape_tableaux import kshape_tableau_from_filling

        fails = []
        t = parse_tableau_text(4, "1 2 3 5 7 9 10 / 4 6 10 / 5 7 / 8 / 10")
        if charge_standard(t) != 25:
            fails.append(f"charge {charge_standard(t)} != 25")
        if cocharge_standard(t) != 16:
            fails.append(f"cocharge {cocharge_standard(t)} != 16")
        u = kshape_tableau_from_filling(
            4, [[1, 2, 4, 6, 8, 9], [3, 5, 7], [4, 6, 9], [7], [9]]
        )
        if charge_kshape(u) != 16:
            fails.append(f"k-shape charge {charge_kshape(u)} != 16")
        if cocharge_kshape(u) != 15:
            fails.append(f"k-shape cocharge {cocharge_kshape(u)} != 15")
        n = u.letters
        from .partitions import k_interior

        if charge_kshape(u) != n * (n - 1) // 2 - cocharge_kshape(u) - sum(
            k_interior(u.shape, 4)
        ):
            fails.append("duality instance 16 = 36 - 15 - 5")
        single = parse_tableau_text(3, "1")
        if charge_standard(single) != 0 or cocharge_standard(single) != 0:
            fails.append("single-cell charges")
        return 4, fails

    return _run("charge-fixture", {}, inst, [0])


def check_word_charge_fixture(**_params) -> VerificationReport:
    def inst(_):
        from .weak_tableaux import parse_tableau_text, word_charges

        fails = []
        t = parse_tableau_text(
            4, "1 1 2 3 4 4 5 5 6 / 2 3 5 5 6 / 3 4 7 / 5 6 / 6 / 7"
        )
        if t.weight != (2, 2, 2, 2, 2, 2, 1):
            fails.append(f"weight {t.weight}")
        if word_charges(t) != (5, 7):
            fails.append(f"word charges {word_charges(t)}")
        if charge_dominant_semistandard(t) != 12:
            fails.append(f"charge {charge_dominant_semistandard(t)}")
        return 1, fails

    return _run("word-charge-fixture", {}, inst, [0])


# ---------------------------------------------------------------------------
# gating sweeps


def _additivity_instance(args):
    k, lam = args
    fails = []
    count = 0
    for t in enumerate_standard_k_tableaux(lam, k):
        res = weak_bijection_standard(t)
        target = make_weak_tableau(k - 1, res.target_chain)
        if charge_standard(t) != charge_standard(target) + res.path.charge():
            fails.append(f"charge additivity: k={k} {t.text()}")
        if cocharge_standard(t) != cocharge_standard(target) + res.path.cocharge():
            fails.append(f"cocharge additivity: k={k} {t.text()}")
        count += 1
    return count, fails


def check_theorem_additivity(n_max: int = 7, **_params) -> VerificationReport:
    items = [
        (k, lam)
        for n in range(1, n_max + 1)
        for k in range(2, n + 1)
        for lam in standard_shapes(k, n)
    ]
    return _run(
        "theorem-additivity", {"n_max": n_max}, _additivity_instance, items
    )


def _descent_instance(lam):
    fails = []
    count = 0
    n = sum(lam)
    for ch in classical.standard_young_tableaux(lam):
        rec = full_descent(ch)
        want = classical.classical_charge(ch)
        if rec.total_charge != want:
            fails.append(f"descent charge {rec.total_charge} != {want}: {ch}")
        if rec.total_cocharge != n * (n - 1) // 2 - want:
            fails.append(f"descent cocharge: {ch}")
        if len(rec.levels) != max(n - 1, 0):
            fails.append(f"descent level count: {ch}")
        count += 1
    return count, fails


def check_descent_classical(n_max: int = 6, **_params) -> VerificationReport:
    items = [lam for n in range(1, n_max + 1) for lam in partitions_of(n)]
    return _run("descent-classical", {"n_max": n_max}, _descent_instance, items)


def _duality_instance(args):
    k, n = args
    fails = []
    count = 0
    for t in enumerate_kshape_tableaux(n, k):
        if charge_cocharge_residual(t) != 0:
            fails.append(f"duality: k={k} {t.text()}")
        chs, cos = letter_charges(t), letter_cocharges(t)
        for m in range(1, t.letters + 1):
            if chs[m - 1] != m - cos[m - 1] - len(t.cells_of_letter(m)):
                fails.append(f"letter identity at {m}: k={k} {t.text()}")
        count += 1
    return count, fails


def check_charge_cocharge_duality(
    n_max: int = 6, k_max: int = 3, **_params
) -> VerificationReport:
    items = [(k, n) for k in range(2, k_max + 1) for n in range(1, n_max + 1)]
    return _run(
        "charge-cocharge-duality",
        {"n_max": n_max, "k_max": k_max},
        _duality_instance,
        items,
    )


def _stability_instance(args):
    k, lam = args
    fails = []
    count = 0
    for t in enumerate_standard_k_tableaux(lam, k):
        as_k = KShapeTableau(k=k, chain=t.chain)
        as_k1 = KShapeTableau(k=k + 1, chain=t.chain)
        if not charge_kshape(as_k) == charge_kshape(as_k1) == charge_standard(t):
            fails.append(f"charge stability: k={k} {t.text()}")
        if not cocharge_kshape(as_k) == cocharge_kshape(as_k1) == cocharge_standard(t):
            fails.append(f"cocharge stability: k={k} {t.text()}")
        count += 1
    return count, fails


def check_charge_k_stability(
    n_max: int = 7, k_max: int = 4, **_params
) -> VerificationReport:
    items = [
        (k, lam)
        for k in range(2, k_max + 1)
        for n in range(1, n_max + 1)
        for lam in standard_shapes(k, n)
    ]
    return _run(
        "charge-k-stability", {"n_max": n_max, "k_max": k_max}, _stability_instance, items
    )


def _is_standard_chain(chain, k: int) -> bool:
    if k < 1:
        return False
    return all(
        is_standard_step(inner, outer, k) for inner, outer in zip(chain, chain[1:])
    )


def _characterization_instance(args):
    k, n = args
    fails = []
    count = 0
    direct_k = {
        t.chain for lam in standard_shapes(k, n) for t in enumerate_standard_k_tableaux(lam, k)
    }
    seen_k = set()
    for t in enumerate_kshape_tableaux(n, k):
        is_k, is_km1 = chain_characterization(t.chain, k)
        if is_k != (t.chain in direct_k):
            fails.append(f"k-tableau flag: k={k} {t.text()}")
        if is_k:
            seen_k.add(t.chain)
        if is_km1 != _is_standard_chain(t.chain, k - 1):
            fails.append(f"(k-1)-tableau flag: k={k} {t.text()}")
        count += 1
    if seen_k != direct_k:
        fails.append(f"cover chains missed {len(direct_k - seen_k)} k-tableaux at k={k} n={n}")
    return count, fails


def check_cover_characterization(
    n_max: int = 6, k_max: int = 3, **_params
) -> VerificationReport:
    items = [(k, n) for k in range(2, k_max + 1) for n in range(0, n_max + 1)]
    return _run(
        "cover-characterization",
        {"n_max": n_max, "k_max": k_max},
        _characterization_instance,
        items,
    )


def _classical_agreement_instance(lam):
    fails = []
    count = 0
    n = sum(lam)
    k = max(n, 1)
    for ch in classical.standard_young_tableaux(lam):
        t = make_weak_tableau(k, ch)
        if charge_standard(t) != classical.classical_charge(ch):
            fails.append(f"standard large-k: {ch}")
        if cocharge_standard(t) != classical.classical_cocharge(ch):
            fails.append(f"standard large-k cocharge: {ch}")
        count += 1
    for wt in partitions_of(n):
        for ch in classical.semistandard_tableaux(lam, wt):
            t = make_weak_tableau(k, ch)
            if charge_dominant_semistandard(t) != classical.classical_charge(ch):
                fails.append(f"dominant large-k: {ch} weight {wt}")
            count += 1
    return count, fails


def check_classical_agreement(size_max: int = 6, **_params) -> VerificationReport:
    items = [lam for n in range(1, size_max + 1) for lam in partitions_of(n)]
    return _run(
        "classical-agreement", {"size_max": size_max}, _classical_agreement_instance, items
    )


def _bijection_count_instance(args):
    k, lam = args
    n = boundary_size(lam, k)
    left = len(enumerate_standard_k_tableaux(lam, k))
    right = 0
    for mu in k_cores_of_boundary(k, n):
        classes = path_classes(lam, mu, k)
        if classes:
            right += len(enumerate_standard_k_tableaux(mu, k - 1)) * len(classes)
    fails = []
    if left != right:
        fails.append(
            f"count mismatch at k={k} shape {format_partition(lam)}: {left} vs {right}"
        )
    return 1, fails


def check_bijection_counting(
    n_max: int = 7, k_max: int = 4, **_params
) -> VerificationReport:
    items = [
        (k, lam)
        for k in range(2, k_max + 1)
        for n in range(1, n_max + 1)
        for lam in standard_shapes(k, n)
    ]
    return _run(
        "bijection-counting", {"n_max": n_max, "k_max": k_max}, _bijection_count_instance, items
    )


def _t1_branching_instance(args):
    k, lam, variables = args
    n = boundary_size(lam, k)
    fails = []
    lhs = dual_kschur_truncated(lam, k, variables, grading="none").reduce_mod(k - 1)
    rhs = TruncatedSymPoly.of(variables, {})
    for mu in k_cores_of_boundary(k, n):
        classes = path_classes(lam, mu, k)
        if not classes:
            continue
        s_mu = dual_kschur_truncated(mu, k - 1, variables, grading="none")
        rhs = rhs + s_mu.scale(TPoly.of([len(classes)]))
    rhs = rhs.reduce_mod(k - 1)
    if lhs.terms != rhs.terms:
        fails.append(
            f"t=1 branching at k={k} shape {format_partition(lam)}:"
            f" lhs {lhs.at_t(1)} rhs {rhs.at_t(1)}"
        )
    return 1, fails


def check_t1_branching(
    n_max: int = 6, k_max: int = 3, variables: int = 4, **_params
) -> VerificationReport:
    items = [
        (k, lam, variables)
        for k in range(2, k_max + 1)
        for n in range(0, n_max + 1)
        for lam in k1_cores_of_boundary(k, n)
    ]
    return _run(
        "t1-branching",
        {"n_max": n_max, "k_max": k_max, "variables": variables},
        _t1_branching_instance,
        items,
    )


# ---------------------------------------------------------------------------
# conjecture-mode sweeps (never gate)


def _sigma_conjecture_instance(args):
    k, lam, letters = args
    fails = []
    count = 0
    for t in enumerate_weak_tableaux(lam, k, letters):
        if any(a > k for a in t.weight):
            continue
        for i in range(1, t.letters):
            count += 1
            try:
                u = sigma_involution(t, i)
            except (IntegrityError, ValueError) as exc:
                fails.append(f"sigma failed: k={k} {t.text()} i={i}: {exc}")
                continue
            if sigma_involution(u, i).chain != t.chain:
                fails.append(f"sigma not involutive: k={k} {t.text()} i={i}")
        for i in range(1, t.letters - 1):
            count += 1
            try:
                lhs = sigma_involution(
                    sigma_involution(sigma_involution(t, i), i + 1), i
                )
                rhs = sigma_involution(
                    sigma_involution(sigma_involution(t, i + 1), i), i + 1
                )
                if lhs.chain != rhs.chain:
                    fails.append(f"braid relation: k={k} {t.text()} i={i}")
            except (IntegrityError, ValueError) as exc:
                fails.append(f"braid evaluation failed: k={k} {t.text()} i={i}: {exc}")
    return count, fails


def check_sigma_involution(
    n_max: int = 5, k_max: int = 3, **_params
) -> VerificationReport:
    items = [
        (k, lam, letters)
        for k in range(2, k_max + 1)
        for n in range(1, n_max + 1)
        for lam in standard_shapes(k, n)
        for letters in range(1, n + 1)
    ]
    return _run(
        "sigma-involution",
        {"n_max": n_max, "k_max": k_max},
        _sigma_conjecture_instance,
        items,
        conjecture=True,
    )


def _generic_t_instance(args):
    k, lam, variables = args
    n = boundary_size(lam, k)
    fails = []
    lhs = dual_kschur_truncated(lam, k, variables, grading="charge").reduce_mod(k - 1)
    rhs = TruncatedSymPoly.of(variables, {})
    for mu in k_cores_of_boundary(k, n):
        b = branching_poly(lam, mu, k)
        if not b:
            continue
        s_mu = dual_kschur_truncated(mu, k - 1, variables, grading="charge")
        rhs = rhs + s_mu.scale(b)
    rhs = rhs.reduce_mod(k - 1)
    if lhs.terms != rhs.terms:
        fails.append(
            f"generic-t branching differs at k={k} shape {format_partition(lam)}"
        )
    return 1, fails


def check_generic_t_branching(
    n_max: int = 5, k_max: int = 3, variables: int = 3, **_params
) -> VerificationReport:
    items = [
        (k, lam, variables)
        for k in range(2, k_max + 1)
        for n in range(0, n_max + 1)
        for lam in k1_cores_of_boundary(k, n)
    ]
    return _run(
        "generic-t-branching",
        {"n_max": n_max, "k_max": k_max, "variables": variables},
        _generic_t_instance,
        items,
        conjecture=True,
    )


def _sigma_commutation_instance(args):
    k, lam = args
    fails = []
    count = 0
    for t in enumerate_standard_k_tableaux(lam, k):
        res = weak_bijection_standard(t)
        cls = res.path_class()
        for i in range(1, t.letters):
            count += 1
            u = sigma_involution(t, i)
            res_u = weak_bijection_standard(u)
            target_sigma = sigma_involution(
                make_weak_tableau(k - 1, res.target_chain), i
            )
            if res_u.target_chain != target_sigma.chain:
                fails.append(f"target differs: k={k} {t.text()} i={i}")
            if res_u.path not in cls.members:
                fails.append(f"path class differs: k={k} {t.text()} i={i}")
    return count, fails


def check_sigma_bijection_commutation(
    n_max: int = 4, k_max: int = 3, **_params
) -> VerificationReport:
    items = [
        (k, lam)
        for k in range(2, k_max + 1)
        for n in range(1, n_max + 1)
        for lam in standard_shapes(k, n)
    ]
    return _run(
        "sigma-bijection-commutation",
        {"n_max": n_max, "k_max": k_max},
        _sigma_commutation_instance,
        items,
        conjecture=True,
    )


CHECKS = {
    "kshape-fixture": check_kshape_fixture,
    "poset-fixture": check_poset_fixture,
    "paths-fixture": check_paths_fixture,
    "charge-fixture": check_charge_fixture,
    "word-charge-fixture": check_word_charge_fixture,
    "theorem-additivity": check_theorem_additivity,
    "descent-classical": check_descent_classical,
    "charge-cocharge-duality": check_charge_cocharge_duality,
    "charge-k-stability": check_charge_k_stability,
    "cover-characterization": check_cover_characterization,
    "classical-agreement": check_classical_agreement,
    "bijection-counting": check_bijection_counting,
    "t1-branching": check_t1_branching,
    "sigma-involution": check_sigma_involution,
    "generic-t-branching": check_generic_t_branching,
    "sigma-bijection-commutation": check_sigma_bijection_commutation,
}

GATING_CHECKS = (
    "kshape-fixture",
    "poset-fixture",
    "paths-fixture",
    "charge-fixture",
    "word-charge-fixture",
    "theorem-additivity",
    "descent-classical",
    "charge-cocharge-duality",
    "charge-k-stability",
    "cover-characterization",
    "classical-agreement",
    "bijection-counting",
    "t1-branching",
)


def run_check(name: str, **params) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    return CHECKS[name](**params)
