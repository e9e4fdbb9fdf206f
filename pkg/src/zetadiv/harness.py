"""Experiment orchestration: strict spec parsing, the bounds -> counts ->
identities -> zeta -> verdicts pipeline, deterministic JSON reports, report
re-checking from witnesses, and the randomized theorem-fuzzing campaign.

Reports are deterministic byte-for-byte across runs of the same spec, except
for the segregated "telemetry" object (timings). Counts and polynomial
coefficients are serialized as decimal strings so arbitrary precision
survives any JSON reader.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__
from .counting import (
    Budget,
    CountTable,
    cone_identity_check,
    count_one,
    count_table,
    divisibility_check,
    excision_identity_check,
    inclusion_exclusion_check,
    projective_space_size,
)
from .errors import (
    DimensionMismatchError,
    InvalidDegreeError,
    SpecParseError,
    ZetadivError,
)
from .exponents import BoundsReport, bounds_report, mu
from .field import is_prime, make_field
from .poly import MultiPoly, PolySystem
from .zeta import (
    IntPoly,
    ReconstructionOutcome,
    TheoremVerdict,
    ZetaFunction,
    reconstruct_zeta,
    verify_theorem,
)

KNOWN_CHECKS = ("divisibility", "zeta", "cone", "excision", "inclusion_exclusion")
DEFAULT_CHECKS = ("divisibility", "zeta")
DEFAULT_NU_MAX = 4
DEFAULT_GUARD = 2
DEFAULT_BUDGET = 10**8

SCOPE_NOTE = (
    "Divisibility is verified on the zeta function in lowest terms, which is "
    "equivalent to divisibility of every point count; per-cohomology-degree "
    "statements are not observable from counts and are not claimed."
)


@dataclass(frozen=True)
class ExperimentSpec:
    """Parsed, validated experiment description."""

    p: int
    k: int
    n_vars: int
    # per polynomial: tuple of (exponent vector, coefficient vector) pairs
    polys: tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...], ...]
    exponent_matrix: tuple[tuple[int, ...], ...]  # r rows, R columns
    mode: str
    nu_max: int = DEFAULT_NU_MAX
    guard: int = DEFAULT_GUARD
    budget: int = DEFAULT_BUDGET
    checks: tuple[str, ...] = DEFAULT_CHECKS

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.p, "k": self.k},
            "n_vars": self.n_vars,
            "polys": [
                [{"exps": list(exps), "coeff": list(coeff)} for exps, coeff in poly]
                for poly in self.polys
            ],
            "exponent_matrix": [list(row) for row in self.exponent_matrix],
            "mode": self.mode,
            "nu_max": self.nu_max,
            "guard": self.guard,
            "budget": self.budget,
            "checks": list(self.checks),
        }


def _require_int(value, what: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecParseError(f"{what} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SpecParseError(f"{what} must be >= {minimum}, got {value}")
    return value


def parse_spec(text: str | bytes) -> ExperimentSpec:
    """Strict parse of the JSON experiment format; unknown keys are errors."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(
            f"JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return spec_from_dict(raw)


def spec_from_dict(raw: dict) -> ExperimentSpec:
    if not isinstance(raw, dict):
        raise SpecParseError("spec must be a JSON object")
    allowed = {
        "field", "n_vars", "polys", "exponent_matrix", "mode",
        "nu_max", "guard", "budget", "checks",
    }
    unknown = set(raw) - allowed
    if unknown:
        raise SpecParseError(f"unknown spec keys: {sorted(unknown)}")
    for key in ("field", "n_vars", "polys", "exponent_matrix", "mode"):
        if key not in raw:
            raise SpecParseError(f"missing required spec key {key!r}")

    fdesc = raw["field"]
    if not isinstance(fdesc, dict) or set(fdesc) != {"p", "k"}:
        raise SpecParseError('"field" must be an object with exactly the keys "p" and "k"')
    p = _require_int(fdesc["p"], "field.p", 2)
    k = _require_int(fdesc["k"], "field.k", 1)
    if not is_prime(p):
        raise SpecParseError(f"field.p must be prime, got {p}")
    n_vars = _require_int(raw["n_vars"], "n_vars", 1)

    polys_raw = raw["polys"]
    if not isinstance(polys_raw, list) or not polys_raw:
        raise SpecParseError('"polys" must be a non-empty list of term lists')
    polys = []
    for pi, terms_raw in enumerate(polys_raw):
        if not isinstance(terms_raw, list) or not terms_raw:
            raise InvalidDegreeError(f"polys[{pi}] must be a non-empty term list")
        seen = set()
        terms = []
        for ti, term in enumerate(terms_raw):
            if not isinstance(term, dict) or set(term) != {"exps", "coeff"}:
                raise SpecParseError(
                    f'polys[{pi}][{ti}] must be an object with exactly "exps" and "coeff"'
                )
            exps = term["exps"]
            coeff = term["coeff"]
            if not isinstance(exps, list) or len(exps) != n_vars:
                raise DimensionMismatchError(
                    f"polys[{pi}][{ti}].exps must be a list of length n_vars = {n_vars}"
                )
            exps = tuple(_require_int(e, f"polys[{pi}][{ti}].exps entry", 0) for e in exps)
            if exps in seen:
                raise SpecParseError(f"polys[{pi}] repeats the exponent vector {list(exps)}")
            seen.add(exps)
            if not isinstance(coeff, list) or len(coeff) != k:
                raise DimensionMismatchError(
                    f"polys[{pi}][{ti}].coeff must be a list of length k = {k}"
                )
            coeff = tuple(
                _require_int(c, f"polys[{pi}][{ti}].coeff entry") % p for c in coeff
            )
            terms.append((exps, coeff))
        nonzero = [(e, c) for e, c in terms if any(c)]
        if not nonzero:
            raise InvalidDegreeError(f"polys[{pi}] is the zero polynomial")
        if max(sum(e) for e, _ in nonzero) < 1:
            raise InvalidDegreeError(f"polys[{pi}] is constant; every degree must be >= 1")
        polys.append(tuple(terms))

    matrix_raw = raw["exponent_matrix"]
    if not isinstance(matrix_raw, list) or len(matrix_raw) != len(polys):
        raise DimensionMismatchError(
            f"exponent_matrix must have one row per polynomial ({len(polys)})"
        )
    widths = set()
    matrix = []
    for ri, row in enumerate(matrix_raw):
        if not isinstance(row, list) or not row:
            raise DimensionMismatchError(f"exponent_matrix[{ri}] must be a non-empty list")
        widths.add(len(row))
        for a in row:
            if not isinstance(a, int) or isinstance(a, bool) or a < 0:
                raise DimensionMismatchError(
                    f"exponent_matrix[{ri}] entries must be non-negative integers, got {a!r}"
                )
        matrix.append(tuple(row))
    if len(widths) != 1:
        raise DimensionMismatchError("exponent_matrix rows have inconsistent lengths")

    mode = raw["mode"]
    if mode not in ("affine", "projective"):
        raise SpecParseError(f'mode must be "affine" or "projective", got {mode!r}')

    nu_max = _require_int(raw.get("nu_max", DEFAULT_NU_MAX), "nu_max", 1)
    guard = _require_int(raw.get("guard", DEFAULT_GUARD), "guard", 1)
    budget = _require_int(raw.get("budget", DEFAULT_BUDGET), "budget", 1)
    checks_raw = raw.get("checks", list(DEFAULT_CHECKS))
    if not isinstance(checks_raw, list):
        raise SpecParseError('"checks" must be a list')
    for c in checks_raw:
        if c not in KNOWN_CHECKS:
            raise SpecParseError(f"unknown check {c!r}; known: {list(KNOWN_CHECKS)}")
    checks = tuple(dict.fromkeys(checks_raw))  # dedupe, preserve order

    return ExperimentSpec(
        p=p, k=k, n_vars=n_vars, polys=tuple(polys),
        exponent_matrix=tuple(matrix), mode=mode,
        nu_max=nu_max, guard=guard, budget=budget, checks=checks,
    )


def build_system(spec: ExperimentSpec) -> PolySystem:
    field = make_field(spec.p, spec.k)
    polys = [
        MultiPoly.from_terms(field, spec.n_vars, [(e, list(c)) for e, c in poly])
        for poly in spec.polys
    ]
    return PolySystem(polys, spec.exponent_matrix, mode=spec.mode)


# -- report ------------------------------------------------------------------


def _num(x: int) -> str:
    return str(x)


def _order_json(order: int | None):
    return "inf" if order is None else order


@dataclass
class Report:
    """Everything a run produced, with enough witnesses to re-check every
    verdict without re-counting."""

    spec: ExperimentSpec
    bounds: BoundsReport | None = None
    counts: list[CountTable] = dc_field(default_factory=list)
    zeta_outcome: ReconstructionOutcome | None = None
    zeta_source: str | None = None
    verdicts: list[dict] = dc_field(default_factory=list)
    stage_errors: dict = dc_field(default_factory=dict)
    telemetry: dict = dc_field(default_factory=dict)

    @property
    def overall(self) -> str:
        return "fail" if any(v.get("verdict") == "fail" for v in self.verdicts) else "pass"

    def to_dict(self) -> dict:
        bounds = None
        if self.bounds is not None:
            bounds = {
                "n": self.bounds.n,
                "degrees": list(self.bounds.degrees),
                "mu": self.bounds.mu,
                "lambda": self.bounds.lambda_,
                "mu_j": list(self.bounds.mu_j),
                "kappa": self.bounds.kappa,
            }
        zeta = None
        if self.zeta_outcome is not None:
            z = self.zeta_outcome
            zeta = {
                "status": z.status,
                "recurrence_order": z.recurrence_order,
                "guard_terms_checked": z.guard_terms_checked,
                "source_table": self.zeta_source,
                "numerator": [_num(c) for c in z.zeta.numerator.coeffs] if z.zeta else None,
                "denominator": [_num(c) for c in z.zeta.denominator.coeffs] if z.zeta else None,
                "scope_note": SCOPE_NOTE,
            }
        return {
            "version": __version__,
            "kind": "experiment_report",
            "spec": self.spec.to_dict(),
            "bounds": bounds,
            "counts": [
                {
                    "what": t.what,
                    "base_q": t.base_q,
                    "counts": {str(nu): _num(n) for nu, n in sorted(t.counts.items())},
                }
                for t in self.counts
            ],
            "zeta": zeta,
            "verdicts": self.verdicts,
            "stage_errors": self.stage_errors,
            "overall": self.overall,
            "seed": None,
            "telemetry": self.telemetry,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# -- pipeline ----------------------------------------------------------------


def run_experiment(spec: ExperimentSpec, workers: int = 1, impl: str | None = None) -> Report:
    """Execute the requested checks in order bounds -> counts -> identities ->
    zeta -> verdicts. Stage errors are captured in the report, never thrown
    past it; partial results persist."""
    report = Report(spec=spec)
    start = time.perf_counter()
    evaluations = 0
    budget = Budget(spec.budget)

    try:
        system = build_system(spec)
    except ZetadivError as exc:
        report.stage_errors["build"] = f"{type(exc).__name__}: {exc}"
        report.telemetry = _telemetry(start, evaluations)
        return report

    report.bounds = bounds_report(system.n_vars, system.degrees)
    exponent = report.bounds.mu
    q = system.field.order

    wants_counts = bool({"divisibility", "zeta"} & set(spec.checks))
    if spec.mode == "affine":
        table_kinds = ["affine_X", "affine_complement"]
        zeta_source = "affine_complement"
        divisibility_tables = ["affine_X", "affine_complement"]
    else:
        table_kinds = ["projective_X", "projective_complement"]
        zeta_source = "projective_complement"
        divisibility_tables = ["projective_complement"]

    tables: dict[str, CountTable] = {}
    if wants_counts:
        base_kind, complement_kind = table_kinds
        partial = CountTable(base_q=q, what=base_kind, counts={})
        for nu in range(1, spec.nu_max + 1):
            try:
                partial.counts[nu] = count_one(system, base_kind, nu, budget, workers, impl)
            except ZetadivError as exc:
                # partial results persist; later nus only grow, so stop here
                report.stage_errors[f"counts:{base_kind}"] = f"{type(exc).__name__}: {exc}"
                break
        evaluations += _table_evaluations(system, partial)
        # the complement needs no second enumeration: it is space size minus N
        complement = CountTable(base_q=q, what=complement_kind, counts={})
        for nu, n_nu in partial.counts.items():
            space = (
                (q**nu) ** system.n_vars
                if spec.mode == "affine"
                else ((q**nu) ** system.n_vars - 1) // (q**nu - 1)
            )
            complement.counts[nu] = space - n_nu
        tables[base_kind] = partial
        tables[complement_kind] = complement
        report.counts.append(partial)
        report.counts.append(complement)

    if "divisibility" in spec.checks:
        for kind in divisibility_tables:
            table = tables.get(kind)
            if table is None or not table.counts:
                report.verdicts.append(
                    {"check": "divisibility", "table": kind, "verdict": "skipped",
                     "reason": "no counts available"}
                )
                continue
            records = divisibility_check(table, exponent)
            report.verdicts.append(
                {
                    "check": "divisibility",
                    "table": kind,
                    "exponent": exponent,
                    "records": [
                        {
                            "nu": r.nu,
                            "count": _num(r.count),
                            "divisible": r.divisible,
                            "order": _order_json(r.order),
                        }
                        for r in records
                    ],
                    "verdict": "pass" if all(r.divisible for r in records) else "fail",
                }
            )

    for check in ("cone", "excision", "inclusion_exclusion"):
        if check in spec.checks:
            verdict, spent = _identity_verdict(check, system, spec, budget, workers, impl, report)
            evaluations += spent
            report.verdicts.append(verdict)

    if "zeta" in spec.checks:
        table = tables.get(zeta_source)
        if table is None or not table.counts:
            report.verdicts.append(
                {"check": "zeta_divisibility", "table": zeta_source, "verdict": "skipped",
                 "reason": "no counts available"}
            )
        else:
            try:
                seq = table.sequence()
                outcome = reconstruct_zeta(seq, spec.guard)
                report.zeta_outcome = outcome
                report.zeta_source = zeta_source
                if outcome.status == "stabilized":
                    verdict = verify_theorem(outcome.zeta, q, exponent)
                    report.verdicts.append(
                        {
                            "check": "zeta_divisibility",
                            "table": zeta_source,
                            "exponent": exponent,
                            "numerator_order": _order_json(verdict.numerator_order),
                            "denominator_order": _order_json(verdict.denominator_order),
                            "verdict": "pass" if verdict.passed else "fail",
                        }
                    )
                else:
                    report.verdicts.append(
                        {"check": "zeta_divisibility", "table": zeta_source,
                         "verdict": "inconclusive",
                         "reason": "recurrence did not stabilize; supply more counts"}
                    )
            except ZetadivError as exc:
                report.stage_errors["zeta"] = f"{type(exc).__name__}: {exc}"

    report.telemetry = _telemetry(start, evaluations)
    return report


def _telemetry(start: float, evaluations: int) -> dict:
    return {
        "elapsed_seconds": round(time.perf_counter() - start, 6),
        "evaluations": evaluations,
    }


def _table_evaluations(system: PolySystem, table: CountTable) -> int:
    total = 0
    q = system.field.order
    for nu in table.counts:
        if table.what.startswith("affine"):
            total += (q**nu) ** system.n_vars
        else:
            total += ((q**nu) ** system.n_vars - 1) // (q**nu - 1)
    return total


def _identity_check_evaluations(check, system, nu) -> int:
    q_nu = system.field.order**nu
    affine = q_nu**system.n_vars
    if check == "cone":
        return affine + projective_space_size(q_nu, system.n_vars)
    if check == "excision":
        return (
            affine
            + projective_space_size(q_nu, system.n_vars + 1)
            + projective_space_size(q_nu, system.n_vars)
        )
    return affine * (2**system.n_equations)


def _identity_verdict(check, system, spec, budget, workers, impl, report) -> tuple[dict, int]:
    checker = {
        "cone": cone_identity_check,
        "excision": excision_identity_check,
        "inclusion_exclusion": inclusion_exclusion_check,
    }[check]
    # structural applicability
    if check == "cone" and (not system.is_homogeneous() or system.has_constant_equation()):
        return ({"check": check, "verdict": "skipped",
                 "reason": "needs homogeneous polynomials and no all-zero column"}, 0)
    if check == "excision" and system.n_equations != 1:
        return ({"check": check, "verdict": "skipped", "reason": "needs exactly one equation"}, 0)
    if check == "inclusion_exclusion" and system.n_equations < 2:
        return ({"check": check, "verdict": "skipped", "reason": "needs at least two equations"}, 0)

    records = []
    evaluations = 0
    for nu in range(1, spec.nu_max + 1):
        try:
            result = checker(system, nu, budget, workers, impl)
            evaluations += _identity_check_evaluations(check, system, nu)
        except ZetadivError as exc:
            report.stage_errors[f"check:{check}:nu={nu}"] = f"{type(exc).__name__}: {exc}"
            break
        if check == "cone":
            records.append(
                {"nu": nu, "affine_count": _num(result.affine_count),
                 "projective_count": _num(result.projective_count), "ok": result.ok}
            )
        elif check == "excision":
            records.append(
                {"nu": nu, "affine_complement": _num(result.affine_complement),
                 "projective_complement": _num(result.projective_complement),
                 "leading_complement": _num(result.leading_complement), "ok": result.ok}
            )
        else:
            records.append(
                {"nu": nu, "lhs": _num(result.lhs),
                 "subset_terms": [
                     {"columns": list(cols), "count": _num(cnt)}
                     for cols, cnt in result.subset_terms
                 ],
                 "ok": result.ok}
            )
    if not records:
        return ({"check": check, "verdict": "skipped", "reason": "no extension fit the budget"}, 0)
    return (
        {
            "check": check,
            "records": records,
            "verdict": "pass" if all(r["ok"] for r in records) else "fail",
        },
        evaluations,
    )


# -- recheck -----------------------------------------------------------------


def recheck(report_dict: dict) -> tuple[bool, list[str]]:
    """Recompute every verdict from the witnesses stored in a report, without
    re-counting. Returns (ok, list of discrepancies)."""
    problems: list[str] = []
    spec = spec_from_dict(report_dict["spec"])
    q = spec.p**spec.k

    stored_bounds = report_dict.get("bounds")
    if stored_bounds is not None:
        system = build_system(spec)
        fresh = bounds_report(system.n_vars, system.degrees)
        expect = {
            "n": fresh.n, "degrees": list(fresh.degrees), "mu": fresh.mu,
            "lambda": fresh.lambda_, "mu_j": list(fresh.mu_j), "kappa": fresh.kappa,
        }
        if stored_bounds != expect:
            problems.append(f"bounds mismatch: stored {stored_bounds}, recomputed {expect}")

    counts = {t["what"]: t for t in report_dict.get("counts", [])}
    for verdict in report_dict.get("verdicts", []):
        check = verdict.get("check")
        stated = verdict.get("verdict")
        if stated == "skipped":
            continue
        if check == "divisibility":
            exponent = verdict["exponent"]
            ok_all = True
            for rec in verdict["records"]:
                n_nu = int(rec["count"])
                nu = rec["nu"]
                divisible = n_nu % q ** (nu * exponent) == 0
                if divisible != rec["divisible"]:
                    problems.append(f"divisibility record nu={nu} flag mismatch")
                ok_all = ok_all and divisible
            if ("pass" if ok_all else "fail") != stated:
                problems.append(f"divisibility verdict mismatch on {verdict.get('table')}")
        elif check == "zeta_divisibility":
            if stated == "inconclusive":
                continue
            zeta_info = report_dict.get("zeta")
            if not zeta_info or zeta_info.get("numerator") is None:
                problems.append("zeta verdict present without zeta polynomials")
                continue
            znum = IntPoly([int(c) for c in zeta_info["numerator"]])
            zden = IntPoly([int(c) for c in zeta_info["denominator"]])
            zfun = ZetaFunction(znum, zden)
            src = counts.get(zeta_info.get("source_table"))
            if src is None:
                problems.append("zeta source table missing from report")
            else:
                stored_seq = [int(src["counts"][key]) for key in sorted(src["counts"], key=int)]
                if zfun.expand_counts(len(stored_seq)) != stored_seq:
                    problems.append("zeta function does not reproduce the stored counts")
            fresh_verdict: TheoremVerdict = verify_theorem(zfun, q, verdict["exponent"])
            if ("pass" if fresh_verdict.passed else "fail") != stated:
                problems.append("zeta divisibility verdict mismatch")
            if _order_json(fresh_verdict.numerator_order) != verdict["numerator_order"]:
                problems.append("zeta numerator order mismatch")
            if _order_json(fresh_verdict.denominator_order) != verdict["denominator_order"]:
                problems.append("zeta denominator order mismatch")
        elif check == "cone":
            for rec in verdict["records"]:
                lhs = int(rec["affine_count"])
                rhs = 1 + (q ** rec["nu"] - 1) * int(rec["projective_count"])
                if (lhs == rhs) != rec["ok"]:
                    problems.append(f"cone record nu={rec['nu']} mismatch")
        elif check == "excision":
            for rec in verdict["records"]:
                ident = int(rec["affine_complement"]) == int(rec["projective_complement"]) - int(
                    rec["leading_complement"]
                )
                if ident != rec["ok"]:
                    problems.append(f"excision record nu={rec['nu']} mismatch")
        elif check == "inclusion_exclusion":
            for rec in verdict["records"]:
                rhs = 0
                for term in rec["subset_terms"]:
                    sign = 1 if len(term["columns"]) % 2 == 1 else -1
                    rhs += sign * int(term["count"])
                if (int(rec["lhs"]) == rhs) != rec["ok"]:
                    problems.append(f"inclusion-exclusion record nu={rec['nu']} mismatch")
        for key in ("records",):
            recs = verdict.get(key)
            if recs is not None and check in ("cone", "excision", "inclusion_exclusion"):
                expected = "pass" if all(r["ok"] for r in recs) else "fail"
                if expected != stated:
                    problems.append(f"{check} verdict flag mismatch")
    return (not problems, problems)


# -- fuzzing -----------------------------------------------------------------

FUZZ_FIELDS = ((2, 1), (3, 1), (2, 2), (5, 1))  # q = 2, 3, 4, 5


def _random_poly_terms(rng: random.Random, n: int, k: int, p: int, degree: int,
                       homogeneous: bool):
    """Sparse random polynomial of exact total degree `degree`."""

    def random_exps(total: int) -> tuple[int, ...]:
        exps = [0] * n
        for _ in range(total):
            exps[rng.randrange(n)] += 1
        return tuple(exps)

    def random_coeff(nonzero: bool) -> tuple[int, ...]:
        while True:
            c = tuple(rng.randrange(p) for _ in range(k))
            if any(c) or not nonzero:
                return c

    terms = {random_exps(degree): random_coeff(nonzero=True)}
    for _ in range(rng.randint(0, 2)):
        total = degree if homogeneous else rng.randint(0, degree)
        exps = random_exps(total)
        if exps not in terms:
            terms[exps] = random_coeff(nonzero=False)
    return tuple(sorted((e, c) for e, c in terms.items() if any(c)))


def random_instance(rng: random.Random, homogeneous: bool = False,
                    budget: int = 10**7) -> ExperimentSpec:
    """One random system from the fuzz grid: q <= 5, n <= 4, r <= 2, R <= 2,
    d_i <= 3, a_ij <= 2, zero columns and repeated factors included."""
    p, k = FUZZ_FIELDS[rng.randrange(len(FUZZ_FIELDS))]
    n = rng.randint(1, 4)
    r = rng.randint(1, 2)
    R = rng.randint(1, 2)
    polys = []
    for i in range(r):
        if i > 0 and rng.random() < 0.2:
            polys.append(polys[0])  # repeated factor
            continue
        degree = rng.randint(1, 3)
        polys.append(_random_poly_terms(rng, n, k, p, degree, homogeneous))
    while True:
        matrix = tuple(tuple(rng.randint(0, 2) for _ in range(R)) for _ in range(r))
        if any(any(row[j] for row in matrix) for j in range(R)):
            break  # at least one genuine equation; all-zero columns may remain
    mode = "projective" if homogeneous else "affine"
    return ExperimentSpec(
        p=p, k=k, n_vars=n, polys=tuple(polys), exponent_matrix=matrix,
        mode=mode, nu_max=2, guard=DEFAULT_GUARD, budget=budget,
        checks=("divisibility",),
    )


@dataclass
class FuzzSummary:
    seed: int
    instances: int
    mutate: bool
    homogeneous: bool
    failures: int
    checks_run: dict
    first_failure: dict | None
    reproducer_path: str | None

    def to_dict(self) -> dict:
        return {
            "kind": "fuzz_summary",
            "version": __version__,
            "seed": self.seed,
            "instances": self.instances,
            "mutate": self.mutate,
            "homogeneous": self.homogeneous,
            "failures": self.failures,
            "checks_run": self.checks_run,
            "first_failure": self.first_failure,
            "reproducer_path": self.reproducer_path,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def fuzz_campaign(
    seed: int,
    instances: int,
    mutate: bool = False,
    homogeneous: bool = False,
    budget: int = 10**7,
    workers: int = 1,
    reproducer_dir: str | Path = ".",
    identity_checks: bool = True,
    halt_on_failure: bool | None = None,
) -> FuzzSummary:
    """Seeded random systems from the grid; divisibility of counts for
    nu = 1, 2 at exponent mu (or mu + 1 when mutating, which must fail
    somewhere: that is the checker's non-vacuity test). Identity checks run
    where they apply. A failing verdict in normal mode halts the campaign and
    serializes the offending spec for replay; in mutation mode failures are
    the point, so the campaign keeps going unless halting is forced."""
    if halt_on_failure is None:
        halt_on_failure = not mutate
    rng = random.Random(seed)
    bud = Budget(budget)
    checks_run: dict[str, int] = {}
    failures = 0
    first_failure = None
    reproducer_path = None

    for index in range(instances):
        spec = random_instance(rng, homogeneous=homogeneous, budget=budget)
        system = build_system(spec)
        exponent = mu(system.n_vars, system.degrees) + (1 if mutate else 0)
        instance_failures: list[dict] = []

        def run_div(kind: str):
            table = count_table(system, kind, 2, bud, workers)
            for rec in divisibility_check(table, exponent):
                checks_run[kind] = checks_run.get(kind, 0) + 1
                if not rec.divisible:
                    instance_failures.append(
                        {"check": f"divisibility:{kind}", "nu": rec.nu,
                         "count": str(rec.count), "exponent": exponent}
                    )

        run_div("affine_X")
        if homogeneous:
            run_div("projective_complement")

        if identity_checks and not mutate:
            if homogeneous and not system.has_constant_equation():
                for nu in (1, 2):
                    res = cone_identity_check(system, nu, bud, workers)
                    checks_run["cone"] = checks_run.get("cone", 0) + 1
                    if not res.ok:
                        instance_failures.append({"check": "cone", "nu": nu})
            if system.n_equations == 1:
                for nu in (1, 2):
                    res = excision_identity_check(system, nu, bud, workers)
                    checks_run["excision"] = checks_run.get("excision", 0) + 1
                    if not res.ok:
                        instance_failures.append({"check": "excision", "nu": nu})
            else:
                for nu in (1, 2):
                    res = inclusion_exclusion_check(system, nu, bud, workers)
                    checks_run["inclusion_exclusion"] = (
                        checks_run.get("inclusion_exclusion", 0) + 1
                    )
                    if not res.ok:
                        instance_failures.append({"check": "inclusion_exclusion", "nu": nu})

        if instance_failures:
            failures += len(instance_failures)
            if first_failure is None:
                first_failure = {"instance": index, "details": instance_failures}
            if halt_on_failure:
                path = Path(reproducer_dir) / f"fuzz-reproducer-seed{seed}-i{index}.json"
                path.write_text(
                    json.dumps(spec.to_dict(), indent=2, sort_keys=True) + "\n"
                )
                reproducer_path = str(path)
                break

    return FuzzSummary(
        seed=seed,
        instances=instances,
        mutate=mutate,
        homogeneous=homogeneous,
        failures=failures,
        checks_run=dict(sorted(checks_run.items())),
        first_failure=first_failure,
        reproducer_path=reproducer_path,
    )
