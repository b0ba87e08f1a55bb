"""
Named invariant suites and the harness that runs them.

Every suite draws its inputs from a Sampler seeded by derive_seed(master seed, suite,
trial), so a trial can be reproduced on its own and the pass/fail counts do not depend
on how trials are sharded across workers.
"""
from __future__ import annotations

import configparser
import logging
import multiprocessing as mp
import sys
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any

from tqdm import tqdm

from gcrystal.crystal_basic import (
    Axis,
    decoration_matrix,
    e_col,
    e_op,
    e_row,
    product_e,
    product_maps,
    r_i,
    structure_maps,
    structure_maps_matrix,
    weyl_s,
)
from gcrystal.crystal_gt import (
    gt_decoration,
    gt_decoration_minors,
    gt_e,
    gt_e_explicit,
    gt_maps,
    gt_maps_explicit,
    phi_param,
    psi_param,
    scale_pattern,
)
from gcrystal.datatypes import CrystalData, EMonomial, MatrixGrid, MinorIndex, PQPair, RunConfig, gt_indices
from gcrystal.errors import GcrystalError, InputError
from gcrystal.grsk import (
    central_charge,
    central_charge_from_q,
    decoration_split,
    glue,
    grsk_insert,
    grsk_insert_by_columns,
    grsk_inverse,
    grsk_local,
    local_move,
    noumi_yamada_grsk,
    noumi_yamada_pattern,
    split,
)
from gcrystal.loopsym import (
    box,
    e_p,
    expand_e_monomial,
    loop_schur_jt,
    loop_schur_tableaux,
    lsym_reduce,
    shape_invariant,
    skew_shapes_in_box,
)
from gcrystal.matrices import (
    chevalley,
    dagger,
    det_laplace,
    flag_minor,
    h_matrix,
    interval,
    lgv_flag_minor,
    m_of,
    minor,
    periodic_window,
    whirl,
)
from gcrystal.polynomials import LoopPoly, lex_key
from gcrystal.sampling import Sampler
from gcrystal.semifield import GEOMETRIC, TROPICAL, TropInt, gmax
from gcrystal.serialize import matrix_to_json, pattern_to_json, poly_to_json
from gcrystal.trop_comb import (
    Direction,
    comb_crystal_oracle,
    gt_to_tableau,
    pattern_charge,
    recording_charges_from_matrices,
    recording_patterns,
    schensted_rsk,
    tableau_crystal_e,
    tableau_to_gt,
    trop_crystal_e,
    trop_grid,
    trop_grsk,
    trop_grsk_oracle,
    trop_gt_e,
)
from gcrystal.utils import batcher, derive_seed

# Load configuration
config = configparser.ConfigParser()
config.read("setup.cfg")
CONF_SECTION = "gcrystal-test" if "pytest" in sys.modules else "gcrystal"

logger = logging.getLogger(__name__)

JSON = Any


@dataclass(frozen=True, slots=True)
class Trial:
    passed: bool
    inputs: JSON


Check = Callable[[Sampler, RunConfig], Trial]


@dataclass(frozen=True, slots=True)
class Suite:
    name: str
    module: str
    description: str
    check: Check


SUITES: dict[str, Suite] = {}


def suite(name: str, module: str, description: str) -> Callable[[Check], Check]:
    """Register a check under {name}."""

    def register(check: Check) -> Check:
        if name in SUITES:
            raise ValueError(f"duplicate suite {name}")
        SUITES[name] = Suite(name, module, description, check)
        return check

    return register


@dataclass(frozen=True, slots=True)
class TrialOutcome:
    trial: int
    seed: int
    passed: bool
    inputs: JSON


@dataclass(frozen=True, slots=True)
class SuiteReport:
    name: str
    trials: int
    failures: int
    first_failure: TrialOutcome | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> JSON:
        out: dict[str, Any] = {
            "suite": self.name,
            "trials": self.trials,
            "passed": self.trials - self.failures,
            "failed": self.failures,
        }
        if self.first_failure is not None:
            f = self.first_failure
            out["first_failure"] = {"trial": f.trial, "seed": f.seed, "input": f.inputs}
        return out


###########
# Configuration and selection
###########


def load_run_config(**overrides: Any) -> RunConfig:
    """RunConfig from setup.cfg, with every non-None keyword in {overrides} taking precedence."""
    section = config[CONF_SECTION] if config.has_section(CONF_SECTION) else {}
    defaults = RunConfig()
    values: dict[str, Any] = {}
    for key in ("seed", "trials", "m_max", "n_max", "workers", "batch_size", "sample_max", "int_max"):
        raw = section.get(key)
        values[key] = int(raw) if raw is not None else getattr(defaults, key)
    values.update({k: v for k, v in overrides.items() if v is not None})
    if values["workers"] == 0:
        values["workers"] = max(1, mp.cpu_count() - 1)
    return RunConfig(**values)


def resolve_suites(selector: str) -> list[str]:
    """
    Expand a comma-separated selector. Each item is a suite name, a module name (every
    suite of that module), or "all".
    """
    names: list[str] = []
    for item in (s.strip() for s in selector.split(",")):
        if item == "all":
            matched = list(SUITES)
        elif item in SUITES:
            matched = [item]
        else:
            matched = [name for name, s in SUITES.items() if s.module == item]
        if not matched:
            raise InputError(f"unknown suite {item!r}; try `verify --list`")
        names.extend(n for n in matched if n not in names)
    return names


###########
# Harness
###########


def run_trial(name: str, cfg: RunConfig, trial: int) -> TrialOutcome:
    seed = derive_seed(cfg.seed, name, trial)
    sampler = Sampler(seed, cfg.sample_max, cfg.int_max)
    try:
        result = SUITES[name].check(sampler, cfg)
    except (GcrystalError, ZeroDivisionError) as err:
        logger.debug("suite %s trial %s raised %r", name, trial, err)
        return TrialOutcome(trial, seed, False, {"error": f"{type(err).__name__}: {err}"})
    if not result.passed:
        logger.debug("suite %s trial %s failed on %s", name, trial, result.inputs)
    return TrialOutcome(trial, seed, result.passed, result.inputs)


def _run_batch(task: tuple[str, RunConfig, tuple[int, ...]]) -> list[TrialOutcome]:
    name, cfg, trials = task
    return [run_trial(name, cfg, t) for t in trials]


def run_suite(name: str, cfg: RunConfig, progress: bool = False) -> SuiteReport:
    """Run {cfg.trials} trials of suite {name}, sharded over {cfg.workers} processes."""
    tasks = [(name, cfg, batch) for batch in batcher(iter(range(cfg.trials)), cfg.batch_size)]
    outcomes: list[TrialOutcome] = []
    with tqdm(total=len(tasks), desc=name, disable=not progress) as pbar:
        if cfg.workers == 1:
            for result in map(_run_batch, tasks):
                outcomes.extend(result)
                pbar.update(1)
        else:
            with mp.Pool(cfg.workers) as pool:
                for result in pool.imap_unordered(_run_batch, tasks):
                    outcomes.extend(result)
                    pbar.update(1)
    failed = sorted((o for o in outcomes if not o.passed), key=lambda o: o.trial)
    if failed:
        logger.warning("suite %s: %s of %s trials failed", name, len(failed), cfg.trials)
    return SuiteReport(name, cfg.trials, len(failed), failed[0] if failed else None)


def run_suites(selector: str, cfg: RunConfig, progress: bool = False) -> list[SuiteReport]:
    return [run_suite(name, replace(cfg, suite=name), progress) for name in resolve_suites(selector)]


###########
# Helpers for checks
###########


def _dims(s: Sampler, cfg: RunConfig, lo: int = 1, cap: int = 6) -> tuple[int, int]:
    return s.dims(lo, min(cfg.m_max, cap), min(cfg.n_max, cap))


def _rats(values: Iterable[Any]) -> list[str]:
    return [str(v) for v in values]


def _axis(s: Sampler) -> Axis:
    return "rows" if s.rng.random() < 0.5 else "columns"


def _direction(s: Sampler) -> Direction:
    return "raise" if s.rng.random() < 0.5 else "lower"


def _axis_size(x: MatrixGrid, axis: Axis) -> int:
    return x.m if axis == "rows" else x.n


def _other_index(s: Sampler, size: int, i: int) -> int | None:
    others = [k for k in range(1, size) if k != i]
    return s.rng.choice(others) if others else None


def _axioms_hold(
    before: CrystalData, after: CrystalData, i: int, c: Any
) -> bool:
    """phi/eps = alpha_i(gamma), and e^c scales gamma_i by c, gamma_{i+1} by 1/c, eps by 1/c and phi by c."""
    gamma = list(before.gamma)
    gamma[i - 1] = gamma[i - 1] * c
    gamma[i] = gamma[i] / c
    return (
        before.phi / before.eps == before.gamma[i - 1] / before.gamma[i]
        and after.gamma == tuple(gamma)
        and after.eps == before.eps / c
        and after.phi == before.phi * c
    )


def _verma_holds(op: Callable[[Any, int, Any], Any], z: Any, i: int, j: int, c: Any, c2: Any) -> bool:
    """Commutation when |i - j| > 1 and e_i^c e_j^{cc'} e_i^{c'} = e_j^{c'} e_i^{cc'} e_j^c when |i - j| = 1."""
    if abs(i - j) > 1:
        return bool(op(op(z, j, c2), i, c) == op(op(z, i, c), j, c2))
    left = op(op(op(z, i, c2), j, c * c2), i, c)
    right = op(op(op(z, j, c), i, c * c2), j, c2)
    return bool(left == right)


###########
# exact-arith
###########


@suite("semifield-axioms", "exact-arith", "associativity, commutativity, distributivity and inv(inv(a)) = a")
def check_semifield_axioms(s: Sampler, cfg: RunConfig) -> Trial:
    rats = [s.rational() for _ in range(3)]
    trops = [TropInt(s.rng.randint(-cfg.int_max, cfg.int_max)) for _ in range(3)]
    ok = True
    for (a, b, c), sf in ((rats, GEOMETRIC), (trops, TROPICAL)):
        ok = ok and (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        ok = ok and a + b == b + a and a * b == b * a and a * (b + c) == a * b + a * c
        ok = ok and sf.inv(sf.inv(a)) == a and a * sf.one == a
    return Trial(ok, {"rationals": _rats(rats), "tropical": [int(t) for t in trops]})


@suite("gmax-repeat", "exact-arith", "gmax of k copies of a is a/k, and a tropically")
def check_gmax_repeat(s: Sampler, cfg: RunConfig) -> Trial:
    a, k = s.rational(), s.rng.randint(1, 5)
    t = TropInt(s.rng.randint(-cfg.int_max, cfg.int_max))
    ok = gmax([a] * k) == a / k and gmax([t] * k, TROPICAL) == t
    return Trial(ok, {"a": str(a), "k": k, "t": int(t)})


###########
# matrix-core
###########


@suite("lgv-minors", "matrix-core", "flag minors of M(x) equal the path sums of its pattern")
def check_lgv_minors(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    a = m_of(x)
    z = psi_param(a, m)
    ok = all(flag_minor(a, interval(i, j)) == lgv_flag_minor(z, interval(i, j)) for i, j in gt_indices(m, n))
    return Trial(ok, {"x": matrix_to_json(x)})


@suite("phi-psi", "matrix-core", "Psi(Phi(z)) = z and Phi(Psi(M(x))) = M(x)")
def check_phi_psi(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    z, x = s.pattern(m, n), s.grid(m, n)
    ok = psi_param(phi_param(z), m) == z and phi_param(psi_param(m_of(x), m)) == m_of(x)
    return Trial(ok, {"z": pattern_to_json(z), "x": matrix_to_json(x)})


@suite("m-band", "matrix-core", "M(x) is lower triangular with band width m and ones on the m-th subdiagonal")
def check_m_band(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    a = m_of(x)
    ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = a.entry(i, j)
            if j > i or i - j > m:
                ok = ok and v == 0
            elif i - j == m:
                ok = ok and v == 1
    return Trial(ok, {"x": matrix_to_json(x)})


@suite("dagger-involution", "matrix-core", "dagger(dagger(A)) = A on invertible 4x4 matrices")
def check_dagger_involution(s: Sampler, cfg: RunConfig) -> Trial:
    a = s.invertible(4)
    return Trial(dagger(dagger(a)) == a, {"A": matrix_to_json(a)})


@suite("jacobi-minors", "matrix-core", "Delta_{I,J}(A^dagger) det A = Delta_{I^c,J^c}(A) for |I| <= 2")
def check_jacobi_minors(s: Sampler, cfg: RunConfig) -> Trial:
    a = s.invertible(4)
    k = s.rng.randint(1, 2)
    rows = tuple(sorted(s.rng.sample(range(1, 5), k)))
    cols = tuple(sorted(s.rng.sample(range(1, 5), k)))
    comp_rows = tuple(v for v in range(1, 5) if v not in rows)
    comp_cols = tuple(v for v in range(1, 5) if v not in cols)
    lhs = minor(dagger(a), MinorIndex(rows, cols)) * det_laplace(a)
    ok = lhs == minor(a, MinorIndex(comp_rows, comp_cols))
    return Trial(ok, {"A": matrix_to_json(a), "I": list(rows), "J": list(cols)})


@suite("h-dagger-whirl", "matrix-core", "H(1/a) = dagger(W(a))")
def check_h_dagger_whirl(s: Sampler, cfg: RunConfig) -> Trial:
    a = [s.rational() for _ in range(s.rng.randint(1, 5))]
    ok = h_matrix([1 / v for v in a], GEOMETRIC) == dagger(whirl(a, GEOMETRIC))
    return Trial(ok, {"a": _rats(a)})


###########
# crystal-basic
###########


@suite("crystal-axioms-matrix", "crystal-basic", "geometric crystal axioms and Verma relations on matrices")
def check_crystal_axioms_matrix(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x, axis = s.grid(m, n), _axis(s)
    size = _axis_size(x, axis)
    i, c, c2 = s.index(size), s.rational(), s.rational()

    def op(y: MatrixGrid, k: int, t: Any) -> MatrixGrid:
        return e_op(y, k, t, axis)

    ok = _axioms_hold(structure_maps(x, i, axis), structure_maps(op(x, i, c), i, axis), i, c)
    ok = ok and op(op(x, i, c2), i, c) == op(x, i, c * c2)
    j = _other_index(s, size, i)
    if j is not None:
        ok = ok and _verma_holds(op, x, i, j, c, c2)
    return Trial(ok, {"x": matrix_to_json(x), "axis": axis, "i": i, "j": j, "c": str(c), "c2": str(c2)})


@suite("matrix-sandwich", "crystal-basic", "the whirl product of the other axis transforms by x_i(.) M x_i(.)")
def check_matrix_sandwich(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x, axis = s.grid(m, n), _axis(s)
    size = _axis_size(x, axis)
    i, c = s.index(size), s.rational()
    data = structure_maps(x, i, axis)

    def whirls(y: MatrixGrid) -> Any:
        return m_of(y.transpose()) if axis == "rows" else m_of(y)

    left = chevalley(size, i, (c - 1) * data.phi, GEOMETRIC)
    right = chevalley(size, i, (1 / c - 1) * data.eps, GEOMETRIC)
    ok = whirls(e_op(x, i, c, axis)) == left @ whirls(x) @ right
    return Trial(ok, {"x": matrix_to_json(x), "axis": axis, "i": i, "c": str(c)})


@suite("m-invariance", "crystal-basic", "every entry of M(x) is fixed by the row operators")
def check_m_invariance(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x = s.grid(m, n)
    i = s.index(m)
    cs = [s.rational() for _ in range(3)]
    ok = all(m_of(e_row(x, i, c)) == m_of(x) for c in cs)
    return Trial(ok, {"x": matrix_to_json(x), "i": i, "c": _rats(cs)})


@suite("r-window", "crystal-basic", "the periodic whirl product window is fixed by R_i")
def check_r_window(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x = s.grid(m, n)
    i = s.index(m)
    span = range(1, m + n + 1)
    ok = periodic_window(x, span, span) == periodic_window(r_i(x, i), span, span)
    return Trial(ok, {"x": matrix_to_json(x), "i": i})


@suite("row-col-commute", "crystal-basic", "row and column operators commute")
def check_row_col_commute(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x = s.grid(m, n)
    i, j, c, c2 = s.index(m), s.index(n), s.rational(), s.rational()
    ok = e_row(e_col(x, j, c2), i, c) == e_col(e_row(x, i, c), j, c2)
    return Trial(ok, {"x": matrix_to_json(x), "i": i, "j": j, "c": str(c), "c2": str(c2)})


@suite("decoration-law-matrix", "crystal-basic", "F(e^c x) = F(x) + (c - 1) phi + (1/c - 1) eps")
def check_decoration_law_matrix(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x, axis = s.grid(m, n), _axis(s)
    i, c = s.index(_axis_size(x, axis)), s.rational()
    data = structure_maps(x, i, axis)
    expected = decoration_matrix(x) + (c - 1) * data.phi + (1 / c - 1) * data.eps
    ok = decoration_matrix(e_op(x, i, c, axis)) == expected
    return Trial(ok, {"x": matrix_to_json(x), "axis": axis, "i": i, "c": str(c)})


@suite("r-weyl", "crystal-basic", "R_i = s_i, R_i is an involution, and the braid relation on three rows")
def check_r_weyl(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x = s.grid(m, n)
    i = s.index(m)
    ok = r_i(x, i) == weyl_s(x, i) and r_i(r_i(x, i), i) == x
    if m >= 3:
        k = s.rng.randint(1, m - 2)
        ok = ok and r_i(r_i(r_i(x, k), k + 1), k) == r_i(r_i(r_i(x, k + 1), k), k + 1)
    return Trial(ok, {"x": matrix_to_json(x), "i": i})


@suite("product-crystal", "crystal-basic", "the row crystal is the product of its one-column crystals")
def check_product_crystal(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x = s.grid(m, n)
    i, c = s.index(m), s.rational()
    factors = [x.col(b) for b in range(1, n + 1)]
    moved = e_row(x, i, c)
    ok = structure_maps(x, i) == product_maps(factors, i)
    ok = ok and [moved.col(b) for b in range(1, n + 1)] == product_e(factors, i, c)
    return Trial(ok, {"x": matrix_to_json(x), "i": i, "c": str(c)})


@suite("structure-maps-routes", "crystal-basic", "closed-form structure maps agree with the whirl-product route")
def check_structure_maps_routes(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2)
    x, axis = s.grid(m, n), _axis(s)
    i = s.index(_axis_size(x, axis))
    ok = structure_maps(x, i, axis) == structure_maps_matrix(x, i, axis)
    return Trial(ok, {"x": matrix_to_json(x), "axis": axis, "i": i})


###########
# crystal-gt
###########


def _gt_dims(s: Sampler, cfg: RunConfig, full: bool = False) -> tuple[int, int]:
    n = s.rng.randint(2, max(2, min(cfg.n_max, 4)))
    m = s.rng.randint(n if full else 1, max(n, min(cfg.m_max, 4)))
    return m, n


@suite("gt-crystal-axioms", "crystal-gt", "geometric crystal axioms, Verma relations and shape for the GT crystal")
def check_gt_crystal_axioms(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _gt_dims(s, cfg)
    z = s.pattern(m, n)
    j, c, c2 = s.index(n), s.rational(), s.rational()
    moved = gt_e(z, j, c)
    ok = _axioms_hold(gt_maps(z, j), gt_maps(moved, j), j, c) and moved.shape() == z.shape()
    ok = ok and gt_e(gt_e(z, j, c2), j, c) == gt_e(z, j, c * c2)
    k = _other_index(s, n, j)
    if k is not None:
        ok = ok and _verma_holds(gt_e, z, j, k, c, c2)
    return Trial(ok, {"z": pattern_to_json(z), "j": j, "k": k, "c": str(c), "c2": str(c2)})


@suite("gt-decoration-law", "crystal-gt", "F(e^c z) = F(z) + (c - 1) phibar + (1/c - 1) epsbar")
def check_gt_decoration_law(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _gt_dims(s, cfg)
    z = s.pattern(m, n)
    j, c = s.index(n), s.rational()
    data = gt_maps(z, j)
    ok = gt_decoration(gt_e(z, j, c)) == gt_decoration(z) + (c - 1) * data.phi + (1 / c - 1) * data.eps
    return Trial(ok, {"z": pattern_to_json(z), "j": j, "c": str(c)})


@suite("gt-scaling", "crystal-gt", "e^c commutes with scaling the diagonals of a pattern")
def check_gt_scaling(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _gt_dims(s, cfg)
    z = s.pattern(m, n)
    j, c = s.index(n), s.rational()
    omega = [s.rational() for _ in range(z.p)]
    ok = gt_e(scale_pattern(z, omega), j, c) == scale_pattern(gt_e(z, j, c), omega)
    return Trial(ok, {"z": pattern_to_json(z), "j": j, "c": str(c), "omega": _rats(omega)})


@suite("gt-explicit", "crystal-gt", "explicit GT formulas agree with the matrix route when m >= n")
def check_gt_explicit(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _gt_dims(s, cfg, full=True)
    z = s.pattern(m, n)
    j, c = s.index(n), s.rational()
    ok = gt_maps_explicit(z, j) == gt_maps(z, j) and gt_e_explicit(z, j, c) == gt_e(z, j, c)
    return Trial(ok, {"z": pattern_to_json(z), "j": j, "c": str(c)})


@suite("gt-decoration-minors", "crystal-gt", "the GT decoration equals its minor form")
def check_gt_decoration_minors(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=4)
    z = s.pattern(m, n)
    return Trial(gt_decoration(z) == gt_decoration_minors(z), {"z": pattern_to_json(z)})


###########
# grsk
###########


@suite("grsk-local", "grsk", "the local moves compute glue(grsk_insert(x))")
def check_grsk_local(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    return Trial(grsk_local(x) == glue(grsk_insert(x)), {"x": matrix_to_json(x)})


@suite("grsk-transpose", "grsk", "transpose symmetry, the column formulas and the column linear extension")
def check_grsk_transpose(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    pq = grsk_insert(x)
    ok = grsk_insert(x.transpose()) == PQPair(pq.Q, pq.P) and grsk_insert_by_columns(x) == pq
    ok = ok and grsk_local(x, "columns") == grsk_local(x)
    return Trial(ok, {"x": matrix_to_json(x)})


@suite("grsk-inverse", "grsk", "grsk_inverse undoes grsk_local and every T is an involution")
def check_grsk_inverse(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    ok = grsk_inverse(grsk_local(x)) == x
    cells = [(a, b) for a in range(1, m + 1) for b in range(1, n + 1) if (a, b) != (m, n)]
    if cells:
        a, b = s.rng.choice(cells)
        ok = ok and local_move(local_move(x, "T", a, b), "T", a, b) == x
    return Trial(ok, {"x": matrix_to_json(x)})


@suite("decoration-split", "grsk", "F(x) = F(P) + F(Q) + the corner z_{n,n} when m = n")
def check_decoration_split(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    f_x, f_p, f_q, corner = decoration_split(x)
    return Trial(f_x == f_p + f_q + corner, {"x": matrix_to_json(x)})


@suite("grsk-equivariance", "grsk", "gRSK intertwines row and column operators with the GT crystals on Q and P")
def check_grsk_equivariance(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2, cap=4)
    x = s.grid(m, n)
    i, j, c = s.index(m), s.index(n), s.rational()
    pq = grsk_insert(x)
    ok = grsk_insert(e_col(x, j, c)) == PQPair(gt_e(pq.P, j, c), pq.Q)
    ok = ok and grsk_insert(e_row(x, i, c)) == PQPair(pq.P, gt_e(pq.Q, i, c))
    ok = ok and structure_maps(x, j, "columns") == gt_maps(pq.P, j)
    ok = ok and structure_maps(x, i, "rows") == gt_maps(pq.Q, i)
    return Trial(ok, {"x": matrix_to_json(x), "i": i, "j": j, "c": str(c)})


@suite("grsk-positivity", "grsk", "grsk_local maps positive grids to positive grids")
def check_grsk_positivity(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    return Trial(all(v > 0 for v in grsk_local(x).values()), {"x": matrix_to_json(x)})


@suite("central-charge", "grsk", "F(x) - F(P) = F(Q) + corner, invariant under column operators")
def check_central_charge(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg)
    x = s.grid(m, n)
    delta = central_charge(x)
    ok = delta == central_charge_from_q(grsk_insert(x))
    if n >= 2:
        ok = ok and central_charge(e_col(x, s.index(n), s.rational())) == delta
    return Trial(ok, {"x": matrix_to_json(x)})


@suite("noumi-yamada", "grsk", "the P part of the conjugated correspondence is read from H-minors")
def check_noumi_yamada(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=3)
    x = s.grid(m, n)
    return Trial(split(noumi_yamada_grsk(x)).P == noumi_yamada_pattern(x), {"x": matrix_to_json(x)})


@suite("p-loop-formula", "grsk", "z_{i,j} = box(i, j) / box(i + 1, j) at x")
def check_p_loop_formula(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2, cap=3)
    x = s.grid(m, n)
    p = grsk_insert(x).P
    ok = all(p[(i, j)] == box(i, j, m, n).evaluate(x) / box(i + 1, j, m, n).evaluate(x) for i, j in gt_indices(m, n))
    return Trial(ok, {"x": matrix_to_json(x)})


###########
# loopsym
###########


def _p_monomial(entries: tuple[tuple[int, ...], ...]) -> tuple[tuple[tuple[int, int], int], ...]:
    return tuple(
        ((a, b), e) for a, row in enumerate(entries, start=1) for b, e in enumerate(row, start=1) if e
    )


@suite("leading-term", "loopsym", "the lex-leading monomial of E_p is x^p with coefficient 1")
def check_leading_term(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=3)
    p = s.dominant(m, n)
    f = expand_e_monomial(e_p(p), m, n)
    mono = _p_monomial(p.entries)
    lead = f.leading_monomial()
    ok = lead == mono and f.coefficient(mono) == 1
    return Trial(ok, {"p": [list(r) for r in p.entries]})


def _random_e_monomial(s: Sampler, m: int, n: int, degree: int) -> EMonomial:
    pairs = []
    while degree > 0:
        k = s.rng.randint(1, min(m, degree))
        pairs.append((k, s.rng.randint(1, n)))
        degree -= k
    return EMonomial.from_factors(pairs)


@suite("lsym-reduce", "loopsym", "reduction recovers random combinations of loop elementary monomials")
def check_lsym_reduce(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=3)
    combo = [
        (Fraction(s.rng.randint(-5, 5) or 1), _random_e_monomial(s, m, n, s.rng.randint(1, 8)))
        for _ in range(s.rng.randint(1, 3))
    ]
    f = LoopPoly.zero()
    for c, em in combo:
        f = f + expand_e_monomial(em, m, n) * c
    result = lsym_reduce(f, m, n)
    rebuilt = LoopPoly.zero()
    for c, em in result.terms:
        rebuilt = rebuilt + expand_e_monomial(em, m, n) * c
    leads = [lex_key(expand_e_monomial(em, m, n).leading_monomial() or ()) for _, em in result.terms]
    ok = result.succeeded and rebuilt == f and all(u > v for u, v in zip(leads, leads[1:]))
    return Trial(ok, {"m": m, "n": n, "f": poly_to_json(f)})


BOX_SHAPES = list(skew_shapes_in_box(4, 4))


@suite("jacobi-trudi", "loopsym", "loop skew Schur functions: tableau sum = Jacobi-Trudi determinant")
def check_jacobi_trudi(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = s.rng.randint(1, 3), s.rng.randint(1, 4)
    lam, mu = s.rng.choice(BOX_SHAPES)
    r = s.rng.randint(1, n)
    ok = loop_schur_tableaux(lam, mu, r, m, n) == loop_schur_jt(lam, mu, r, m, n)
    return Trial(ok, {"lambda": list(lam), "mu": list(mu), "r": r, "m": m, "n": n})


@suite("schur-r-invariance", "loopsym", "loop Schur functions take equal values at x and R_i(x)")
def check_schur_r_invariance(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, lo=2, cap=3)
    x = s.grid(m, n)
    lam, i, r = s.partition(3, 3), s.index(m), s.rng.randint(1, n)
    f = loop_schur_jt(lam, (), r, m, n)
    ok = f.evaluate(x) == f.evaluate(r_i(x, i))
    return Trial(ok, {"x": matrix_to_json(x), "lambda": list(lam), "i": i, "r": r})


@suite("e-injective", "loopsym", "distinct dominant p give distinct leading monomials of E_p")
def check_e_injective(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=3)
    ps = {s.dominant(m, n, largest=2) for _ in range(5)}
    leads = {expand_e_monomial(e_p(p), m, n).leading_monomial() for p in ps}
    return Trial(len(leads) == len(ps), {"p": [[list(r) for r in p.entries] for p in ps]})


@suite("shape-box", "loopsym", "the shape invariant S_k is the rectangle box(k, n)")
def check_shape_box(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _dims(s, cfg, cap=3)
    k = s.rng.randint(1, min(m, n))
    return Trial(shape_invariant(k, m, n) == box(k, n, m, n), {"k": k, "m": m, "n": n})


###########
# trop-comb
###########


def _int_dims(s: Sampler, cfg: RunConfig, lo: int = 1) -> tuple[int, int]:
    return s.dims(lo, min(cfg.m_max, 5), min(cfg.n_max, 5))


@suite("trop-oracle", "trop-comb", "tropical gRSK equals the glued Schensted pair")
def check_trop_oracle(s: Sampler, cfg: RunConfig) -> Trial:
    a = s.int_grid(*_int_dims(s, cfg))
    return Trial(trop_grsk(a) == trop_grsk_oracle(a), {"a": a})


@suite("trop-transpose", "trop-comb", "tropical gRSK of the transpose swaps P and Q")
def check_trop_transpose(s: Sampler, cfg: RunConfig) -> Trial:
    a = s.int_grid(*_int_dims(s, cfg))
    pq = split(trop_grsk(a))
    a_t = [list(col) for col in zip(*a)]
    return Trial(trop_grsk(a_t) == glue(PQPair(pq.Q, pq.P)), {"a": a})


@suite("trop-commute", "trop-comb", "combinatorial row and column operators commute where both are defined")
def check_trop_commute(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _int_dims(s, cfg, lo=2)
    a = s.int_grid(m, n)
    i, j, d1, d2 = s.index(m), s.index(n), _direction(s), _direction(s)
    first = comb_crystal_oracle(a, i, d1, "rows")
    second = comb_crystal_oracle(a, j, d2, "columns")
    one = comb_crystal_oracle(first, j, d2, "columns") if first is not None else None
    other = comb_crystal_oracle(second, i, d1, "rows") if second is not None else None
    ok = one is None or other is None or one == other
    return Trial(ok, {"a": a, "i": i, "j": j, "row": d1, "column": d2})


@suite("trop-cut", "trop-comb", "the tropical operators, cut to nonnegative matrices, are the combinatorial ones")
def check_trop_cut(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _int_dims(s, cfg, lo=2)
    a, axis, d = s.int_grid(m, n), _axis(s), _direction(s)
    i = s.index(m if axis == "rows" else n)
    ok = trop_crystal_e(a, i, d, axis) == comb_crystal_oracle(a, i, d, axis)
    return Trial(ok, {"a": a, "i": i, "direction": d, "axis": axis})


@suite("trop-decoration", "trop-comb", "min-plus decoration additivity on integer matrices")
def check_trop_decoration(s: Sampler, cfg: RunConfig) -> Trial:
    a = s.int_grid(*_int_dims(s, cfg))
    f_a, f_p, f_q, corner = decoration_split(trop_grid(a))
    return Trial(f_a == f_p + f_q + corner, {"a": a})


@suite("trop-equivariance", "trop-comb", "column operators on a act on the insertion tableau and fix the recording one")
def check_trop_equivariance(s: Sampler, cfg: RunConfig) -> Trial:
    m, n = _int_dims(s, cfg, lo=2)
    a, j, d = s.int_grid(m, n), s.index(n), _direction(s)
    p, q = schensted_rsk(a)
    b = comb_crystal_oracle(a, j, d, "columns")
    t = tableau_crystal_e(p, j, d, n)
    ok = (b is None) == (t is None) and (b is None or schensted_rsk(b) == (t, q))
    return Trial(ok, {"a": a, "j": j, "direction": d})


@suite("trop-gt-crystal", "trop-comb", "the tropical explicit GT operators are the tableau crystal")
def check_trop_gt_crystal(s: Sampler, cfg: RunConfig) -> Trial:
    n = s.rng.randint(2, min(cfg.n_max, 4))
    m = s.rng.randint(n, max(n, min(cfg.m_max, 5)))
    a, j, d = s.int_grid(m, n), s.index(n), _direction(s)
    t, _ = schensted_rsk(a)
    moved = trop_gt_e(tableau_to_gt(t, n, m), j, d)
    expected = tableau_crystal_e(t, j, d, n)
    ok = (moved is None) == (expected is None) and (moved is None or gt_to_tableau(moved) == expected)
    return Trial(ok, {"a": a, "j": j, "direction": d})


@suite("q-analogue", "trop-comb", "recording patterns and their charges match tropical gRSK over all matrices")
def check_q_analogue(s: Sampler, cfg: RunConfig) -> Trial:
    content = [s.rng.randint(0, 3) for _ in range(s.rng.randint(1, 3))]
    n = s.rng.randint(1, 3)
    from_matrices = recording_charges_from_matrices(content, n)
    from_patterns = {
        tuple(int(q[k]) for k in gt_indices(q.m, q.n)): pattern_charge(q) for q in recording_patterns(content, n)
    }
    return Trial(from_matrices == from_patterns, {"content": content, "n": n})


def suite_listing() -> list[dict[str, str]]:
    return [{"suite": s.name, "module": s.module, "description": s.description} for s in SUITES.values()]
