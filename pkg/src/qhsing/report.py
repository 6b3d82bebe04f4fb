"""Job documents, orchestration and report serialization.

A job document is a JSON object::

    {"weights": [15, 10, 6], "relations": [30], "divisor_degree": 0,
     "hypotheses": {"vstar_smooth": true, "isolated_singularity": true},
     "max_m": 25, "truncation": "auto"}

or, for a Pfaffian quotient, ``"pfaffian": {"base_weights": [...],
"base_relations": [...], "N": 5, "degrees": [...], "N_R": -6}`` in place of
``weights``/``relations`` (``N_R`` is optional and defaults to
``sum(base_relations) - sum(base_weights)``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any, Iterable

from .classify import (
    Answer,
    BruteForceWitness,
    Verdict,
    classify_l2lt,
    classify_lc,
    classify_lt,
    classify_rational,
    kempf_rational_bruteforce,
    l2lt_bruteforce,
    l2lt_scan_bound,
    l2lt_scan_depth,
    lc_bruteforce,
    lc_scan_bound,
)
from .errors import InputError
from .graded import GradedRing, Hypotheses, PfaffianInput, PfaffianRing, WeightedCI
from .kodaira import GrowthEstimate, Kbar, KodairaReport, growth_exponent_estimate, kodaira_bound, kodaira_dimension
from .plurigenera import PlurigeneraRow, plurigenera_bound, plurigenera_table
from .series import FactoredHilbert, negativity_scan

__all__ = [
    "ANALYSES",
    "JobSpec",
    "SingularityReport",
    "parse_job",
    "dump_job",
    "run_job",
    "render_report",
    "auto_truncation",
]

ANALYSES = ("classify", "plurigenera", "kodaira", "hilbert")
DEFAULT_MAX_M = 25

_TOP_KEYS = {"weights", "relations", "divisor_degree", "hypotheses", "max_m", "truncation", "pfaffian"}
_PF_KEYS = {"base_weights", "base_relations", "N", "degrees", "N_R"}
_HYP_KEYS = tuple(f.name for f in fields(Hypotheses))


@dataclass(frozen=True)
class JobSpec:
    ring: GradedRing
    max_m: int = DEFAULT_MAX_M
    truncation: int | None = None  # None means AUTO

    @property
    def divisor_degree(self) -> int:
        return self.ring.divisor_degree

    @property
    def hypotheses(self) -> Hypotheses:
        return self.ring.hypotheses


# ---------------------------------------------------------------- parsing


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int(doc: dict, key: str, *, minimum: int | None = None, default: Any = ..., where: str = "") -> int:
    name = f"{where}{key}"
    if key not in doc:
        if default is ...:
            raise InputError(f"missing required field '{name}'")
        return default
    v = doc[key]
    if not _is_int(v):
        raise InputError(f"field '{name}' must be an integer, got {v!r}")
    if minimum is not None and v < minimum:
        raise InputError(f"field '{name}' must be >= {minimum}, got {v}")
    return v


def _int_list(doc: dict, key: str, *, minimum: int, required: bool, where: str = "") -> tuple[int, ...]:
    name = f"{where}{key}"
    if key not in doc:
        if required:
            raise InputError(f"missing required field '{name}'")
        return ()
    v = doc[key]
    if not isinstance(v, list) or not all(_is_int(x) for x in v):
        raise InputError(f"field '{name}' must be a list of integers, got {v!r}")
    bad = [x for x in v if x < minimum]
    if bad:
        kind = "negative" if minimum == 0 else f"< {minimum}"
        raise InputError(f"field '{name}' has {kind} entries: {bad}")
    return tuple(v)


def _hypotheses(doc: dict) -> Hypotheses:
    raw = doc.get("hypotheses", {})
    if not isinstance(raw, dict):
        raise InputError("field 'hypotheses' must be an object of booleans")
    if "a0_is_base_field" in raw:
        raise InputError("hypotheses.a0_is_base_field is derived from the weights and cannot be set")
    unknown = sorted(set(raw) - set(_HYP_KEYS))
    if unknown:
        raise InputError(f"unknown hypotheses {unknown}; expected a subset of {list(_HYP_KEYS)}")
    for k, v in raw.items():
        if not isinstance(v, bool):
            raise InputError(f"hypotheses.{k} must be true or false, got {v!r}")
    return Hypotheses(**raw)


def _pfaffian(doc: dict, divisor_degree: int, hyp: Hypotheses) -> PfaffianRing:
    pf = doc["pfaffian"]
    if not isinstance(pf, dict):
        raise InputError("field 'pfaffian' must be an object")
    unknown = sorted(set(pf) - _PF_KEYS)
    if unknown:
        raise InputError(f"unknown fields in 'pfaffian': {unknown}")
    w = "pfaffian."
    base_weights = _int_list(pf, "base_weights", minimum=1, required=True, where=w)
    if not base_weights:
        raise InputError("field 'pfaffian.base_weights' must be non-empty")
    base_relations = _int_list(pf, "base_relations", minimum=1, required=False, where=w)
    if len(base_relations) >= len(base_weights):
        raise InputError("pfaffian: need more base weights than base relations")
    N = _int(pf, "N", minimum=1, where=w)
    degrees = _int_list(pf, "degrees", minimum=1, required=True, where=w)
    N_R = _int(pf, "N_R", default=sum(base_relations) - sum(base_weights), where=w)
    p = PfaffianInput(FactoredHilbert(base_relations, base_weights), N_R, N, degrees)
    return PfaffianRing(p, divisor_degree, hyp)


def parse_job_dict(doc: Any) -> JobSpec:
    if not isinstance(doc, dict):
        raise InputError("job document must be a JSON object")
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        raise InputError(f"unknown fields {unknown}")
    d = _int(doc, "divisor_degree", minimum=0, default=0)
    hyp = _hypotheses(doc)
    if "pfaffian" in doc:
        if "weights" in doc or "relations" in doc:
            raise InputError("give either 'weights'/'relations' or 'pfaffian', not both")
        ring: GradedRing = _pfaffian(doc, d, hyp)
    else:
        weights = _int_list(doc, "weights", minimum=0, required=True)
        if not weights:
            raise InputError("field 'weights' must be non-empty")
        relations = _int_list(doc, "relations", minimum=1, required=False)
        if len(relations) >= len(weights):
            raise InputError(
                f"number of relations s = {len(relations)} must be smaller than "
                f"the number of weights ({len(weights)})"
            )
        ring = WeightedCI(weights, relations, d, hyp)
    max_m = _int(doc, "max_m", minimum=1, default=DEFAULT_MAX_M)
    trunc = doc.get("truncation", "auto")
    if trunc == "auto":
        truncation = None
    else:
        truncation = _int(doc, "truncation", minimum=0)
    return JobSpec(ring, max_m, truncation)


def parse_job(text: str) -> JobSpec:
    """Parse and validate a JSON job document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed job document: {e}") from None
    return parse_job_dict(doc)


def job_to_dict(job: JobSpec) -> dict:
    ring = job.ring
    hyp = {k: getattr(ring.hypotheses, k) for k in _HYP_KEYS if getattr(ring.hypotheses, k)}
    doc: dict[str, Any] = {}
    if isinstance(ring, WeightedCI):
        doc["weights"] = list(ring.weights)
        doc["relations"] = list(ring.relation_degrees)
    else:
        p = ring.pfaffian
        if p.base_hilbert.extra_numerator != (1,):
            raise InputError("only Pfaffian jobs over a complete-intersection base can be serialized")
        doc["pfaffian"] = {
            "base_weights": list(p.base_hilbert.denominator_weights),
            "base_relations": list(p.base_hilbert.numerator_relation_degrees),
            "N": p.N,
            "degrees": list(p.pf_degrees),
            "N_R": p.N_R,
        }
    doc["divisor_degree"] = ring.divisor_degree
    doc["hypotheses"] = hyp
    doc["max_m"] = job.max_m
    doc["truncation"] = "auto" if job.truncation is None else job.truncation
    return doc


def dump_job(job: JobSpec) -> str:
    return json.dumps(job_to_dict(job), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- running


@dataclass
class SingularityReport:
    n_a: int
    m0: int
    ring: dict
    dimension: int
    divisor_degree: int
    truncation: int
    analyses: tuple[str, ...]
    verdicts: dict[str, Verdict] | None = None
    crosschecks: dict[str, BruteForceWitness] | None = None
    plurigenera: list[PlurigeneraRow] | None = None
    kodaira: KodairaReport | None = None
    growth: GrowthEstimate | None = None
    hilbert: list[int] | None = None
    skipped: dict[str, str] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    def unknowns(self) -> list[str]:
        out = [k for k, v in (self.verdicts or {}).items() if v.value is Answer.UNKNOWN]
        if self.kodaira is not None and self.kodaira.kbar is Kbar.UNKNOWN:
            out.append("kbar")
        return out


def _ring_summary(ring: GradedRing) -> dict:
    if isinstance(ring, WeightedCI):
        return {
            "type": "complete_intersection",
            "weights": list(ring.weights),
            "relations": list(ring.relation_degrees),
        }
    p = ring.pfaffian
    return {
        "type": "pfaffian",
        "base_weights": list(p.base_hilbert.denominator_weights),
        "base_relations": list(p.base_hilbert.numerator_relation_degrees),
        "N": p.N,
        "N_R": p.N_R,
        "degrees": list(p.pf_degrees),
    }


def _dims_usable(ring: GradedRing) -> bool:
    return ring.a0_is_base_field


def _plurigenera_runnable(ring: GradedRing) -> str | None:
    """Reason the plurigenera table cannot run, or ``None``."""
    if not ring.hypotheses.isolated_singularity:
        if not ring.a0_is_base_field:
            return "weight 0 present (A_0 != C) and isolated_singularity not asserted"
        return "isolated_singularity not asserted"
    if ring.dimension < 2:
        return f"plurigenera need dim V >= 2 (dim V = {ring.dimension})"
    return None


def auto_truncation(job: JobSpec, analyses: Iterable[str] = ANALYSES) -> int:
    """Largest coefficient index any enabled analysis reads, plus one."""
    ring = job.ring
    shift = ring.dualizing_shift()
    M = job.max_m
    needed = [0]
    analyses = set(analyses)
    if _dims_usable(ring):
        if "classify" in analyses:
            needed += [
                lc_scan_bound(ring, shift, M),
                l2lt_scan_bound(ring, shift, l2lt_scan_depth(ring, shift, M)),
            ]
            if shift.m0 == 1:
                needed.append(shift.N)
        if "plurigenera" in analyses and _plurigenera_runnable(ring) is None:
            needed.append(plurigenera_bound(shift, M))
        if "kodaira" in analyses and ring.hypotheses.pair_lc(ring.divisor_degree):
            needed.append(kodaira_bound(ring, shift, M))
    if "hilbert" in analyses:
        needed.append(M)
    return max(needed) + 1


def _verdict_diag(name: str, v: Verdict, out: list[str]) -> None:
    if v.value is Answer.UNKNOWN:
        out.append(f"{name}: UNKNOWN ({v.reason})")
    if v.note:
        out.append(f"{name}: {v.note}")


def run_job(job: JobSpec, analyses: Iterable[str] = ANALYSES) -> SingularityReport:
    """Run the enabled analyses and assemble a report.

    Analyses that need unavailable graded dimensions are listed in
    ``skipped`` with a reason instead of being reported as zero.
    """
    analyses = tuple(a for a in ANALYSES if a in set(analyses))
    ring = job.ring
    shift = ring.dualizing_shift()
    M = job.max_m
    auto = job.truncation is None
    T = auto_truncation(job, analyses) if auto else job.truncation
    rep = SingularityReport(
        n_a=shift.N,
        m0=shift.m0,
        ring=_ring_summary(ring),
        dimension=ring.dimension,
        divisor_degree=ring.divisor_degree,
        truncation=T,
        analyses=analyses,
    )
    diag = rep.diagnostics
    diag.append(f"truncation T = {T} ({'auto' if auto else 'explicit'})")

    series = ring.hilbert(T)
    neg = negativity_scan(series)
    dims_ok = _dims_usable(ring) and neg is None
    if neg is not None:
        diag.append(
            f"negative Hilbert coefficient at k = {neg}: the relations cannot form a regular "
            f"sequence; dimension-based outputs are suppressed"
        )
    if not ring.a0_is_base_field:
        diag.append("weight-0 variables present: A_0 != C, graded pieces are infinite-dimensional")

    if "classify" in analyses:
        rep.verdicts = {
            "lc": classify_lc(ring, shift),
            "l2lt": classify_l2lt(ring, shift),
            "lt": classify_lt(ring, shift),
            "rational": classify_rational(ring, shift),
        }
        for name, v in rep.verdicts.items():
            _verdict_diag(name, v, diag)
        if dims_ok:
            checks = {
                "lc": lc_bruteforce(ring, shift, M, T),
                "l2lt": l2lt_bruteforce(ring, shift, l2lt_scan_depth(ring, shift, M), T),
            }
            if shift.m0 == 1:
                checks["rational"] = kempf_rational_bruteforce(ring, shift, T)
            rep.crosschecks = checks
            _crosscheck_diag(ring, shift, checks, diag)
        else:
            rep.skipped["crosschecks"] = (
                "weight 0 present (A_0 != C)" if not ring.a0_is_base_field
                else "negative Hilbert coefficients"
            )

    if "plurigenera" in analyses:
        why = _plurigenera_runnable(ring)
        if why is None and neg is not None:
            why = "negative Hilbert coefficients"
        if why is None:
            rep.plurigenera = plurigenera_table(ring, shift, M, T)
            if not ring.a0_is_base_field:
                diag.append("plurigenera vanish identically since A_0 != C")
        else:
            rep.skipped["plurigenera"] = why
            diag.append(f"plurigenera skipped: {why}")

    if "kodaira" in analyses:
        rep.kodaira = kodaira_dimension(ring, shift, M, T, with_pbar=dims_ok)
        if rep.kodaira.kbar is Kbar.UNKNOWN:
            diag.append(f"kbar: UNKNOWN ({rep.kodaira.reason})")
        if not rep.kodaira.pbar and rep.kodaira.kbar is not Kbar.UNKNOWN:
            rep.skipped["pbar"] = (
                "weight 0 present (A_0 != C)" if not ring.a0_is_base_field
                else "negative Hilbert coefficients"
            )
        if len(rep.kodaira.pbar) >= 8:
            rep.growth = growth_exponent_estimate(rep.kodaira.pbar)

    if "hilbert" in analyses:
        rep.hilbert = list(series.coeffs)
    return rep


def _crosscheck_diag(ring, shift, checks: dict[str, BruteForceWitness], diag: list[str]) -> None:
    d = ring.divisor_degree
    N = shift.N
    expected = {"lc": N + shift.m0 * d <= 0}
    if shift.m0 == 1:
        expected["l2lt"] = (N + d <= 0) if d > 0 else (N < 0)
        expected["rational"] = N < 0
    for name, ok in expected.items():
        if name in checks and checks[name].failed == ok:
            diag.append(f"crosscheck mismatch for {name}: sign test and graded-piece scan disagree")


# ---------------------------------------------------------------- rendering


def _verdict_dict(v: Verdict) -> dict:
    out: dict[str, Any] = {"value": v.value.value}
    if v.reason:
        out["reason"] = v.reason
    if v.note:
        out["note"] = v.note
    return out


def _witness_dict(w: BruteForceWitness) -> dict:
    f = w.first_failure
    return {
        "m_checked": list(w.m_checked),
        "first_failure": None if f is None else {"m": f[0], "g": f[1], "dim": f[2]},
    }


def report_to_dict(r: SingularityReport) -> dict:
    out: dict[str, Any] = {
        "n_a": r.n_a,
        "m0": r.m0,
        "ring": r.ring,
        "dimension": r.dimension,
        "divisor_degree": r.divisor_degree,
        "truncation": r.truncation,
        "skipped": dict(r.skipped),
        "diagnostics": list(r.diagnostics),
    }
    if "classify" in r.analyses:
        out["verdicts"] = {k: _verdict_dict(v) for k, v in (r.verdicts or {}).items()}
        out["crosschecks"] = (
            None if r.crosschecks is None
            else {k: _witness_dict(w) for k, w in r.crosschecks.items()}
        )
    if "plurigenera" in r.analyses:
        out["plurigenera"] = (
            None if r.plurigenera is None
            else [{"m": row.m, "delta": row.delta, "lambda": row.lambda_} for row in r.plurigenera]
        )
    if "kodaira" in r.analyses and r.kodaira is not None:
        k = r.kodaira
        kd: dict[str, Any] = {
            "kbar": k.kbar.value,
            "kbar_value": k.kbar_value,
            "m0_used": k.m0_used,
            "pbar": list(k.pbar) if k.pbar else None,
            "infinity_sections": list(k.infinity_sections) if k.infinity_sections else None,
            "growth_estimate": (
                None if r.growth is None
                else {"estimate": r.growth.estimate, "slope": round(r.growth.slope, 12)}
            ),
        }
        if k.reason:
            kd["reason"] = k.reason
        out["kodaira"] = kd
    if "hilbert" in r.analyses:
        out["hilbert"] = r.hilbert
    return out


def _render_human(r: SingularityReport) -> str:
    lines = []
    ring = r.ring
    if ring["type"] == "complete_intersection":
        lines.append(f"ring            complete intersection, weights {ring['weights']}, relations {ring['relations']}")
    else:
        lines.append(
            f"ring            Pfaffian quotient, base weights {ring['base_weights']}, "
            f"base relations {ring['base_relations']}, N = {ring['N']}, degrees {ring['degrees']}"
        )
    lines.append(f"dimension       {r.dimension}")
    lines.append(f"divisor degree  {r.divisor_degree}")
    lines.append(f"N_A             {r.n_a} (m0 = {r.m0})")
    lines.append(f"truncation      {r.truncation}")

    if "classify" in r.analyses and r.verdicts is not None:
        lines += ["", f"{'verdict':<10}{'value':<9}detail"]
        for name, v in r.verdicts.items():
            lines.append(f"{name:<10}{v.value.value:<9}{v.reason or v.note}".rstrip())
        if r.crosschecks:
            lines += ["", f"{'scan':<10}{'m range':<10}first failure (m, g, dim)"]
            for name, w in r.crosschecks.items():
                f = "none" if w.first_failure is None else str(w.first_failure)
                lines.append(f"{name:<10}{f'{w.m_checked[0]}..{w.m_checked[1]}':<10}{f}")

    if "plurigenera" in r.analyses:
        lines.append("")
        if r.plurigenera is None:
            lines.append(f"plurigenera     skipped: {r.skipped.get('plurigenera', '')}")
        else:
            lines.append(f"{'m':>4}  {'delta':>10}  {'lambda':>10}")
            for row in r.plurigenera:
                lines.append(f"{row.m:>4}  {row.delta:>10}  {row.lambda_:>10}")

    if "kodaira" in r.analyses and r.kodaira is not None:
        k = r.kodaira
        lines.append("")
        kb = k.kbar.value if k.kbar_value is None or k.kbar is Kbar.ZERO else f"{k.kbar.value} ({k.kbar_value})"
        lines.append(f"kbar            {kb}{'  ' + k.reason if k.reason else ''}")
        if r.growth is not None:
            lines.append(f"growth          estimate {r.growth.estimate} (slope {r.growth.slope:.4f})")
        if k.pbar:
            lines.append(f"{'m':>4}  {'pbar':>10}  {'at infinity':>12}")
            for m, (p, s) in enumerate(zip(k.pbar, k.infinity_sections), start=1):
                if p is not None:
                    lines.append(f"{m:>4}  {p:>10}  {s:>12}")

    if "hilbert" in r.analyses and r.hilbert is not None:
        lines += ["", f"{'k':>4}  {'dim A_k':>12}"]
        for k_, c in enumerate(r.hilbert):
            lines.append(f"{k_:>4}  {c:>12}")

    if r.diagnostics:
        lines += ["", "diagnostics"]
        lines += [f"  - {d}" for d in r.diagnostics]
    return "\n".join(lines) + "\n"


def render_report(r: SingularityReport, format: str = "human") -> str:
    if format == "machine":
        return json.dumps(report_to_dict(r), indent=2, sort_keys=True) + "\n"
    if format == "human":
        return _render_human(r)
    raise InputError(f"unknown format {format!r}; expected 'human' or 'machine'")
