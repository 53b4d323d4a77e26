"""Seeded campaigns: one independent RNG stream per run, fanned out to a process pool.

Run i of a campaign with seed s draws from random.Random(s * 1000003 + i), so
a run's certificate depends only on (config, i) and never on scheduling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from ..algebra.represent import Degenerate
from ..fields.ratfunc import RationalFunctionField
from ..oracle.invariants import invariant_vector
from . import counts, exponent3, mt12
from .specialize import random_specialization

STAGES = ("counts", "mt1", "mt2", "mt3", "tignol")


@dataclass(frozen=True)
class RunConfig:
    q: int = 19
    seed: int = 0
    specializations: int = 1
    degree_bound: int = 1
    chain_budget: int = 0
    stages: tuple = ("counts",)
    retries: int = 25
    workers: int = 1

    def validate(self) -> None:
        if self.q % 9 != 1:
            raise ValueError(f"q = {self.q} must be 1 mod 9 (rho_9 in the constants)")
        if not _is_prime(self.q):
            raise ValueError(f"q = {self.q}: only prime constant fields are supported")
        if self.specializations < 1 or self.degree_bound < 1:
            raise ValueError("counts must be >= 1")
        if self.chain_budget < 0:
            raise ValueError("chain budget must be >= 0")
        unknown = set(self.stages) - set(STAGES)
        if unknown:
            raise ValueError(f"unknown stages {sorted(unknown)}")

    def meta(self, kind: str, index: int) -> dict:
        return {"kind": kind, "index": index, "q": self.q, "seed": self.seed, "degree_bound": self.degree_bound}


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def run_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1000003 + index)


@dataclass
class RunOutcome:
    kind: str
    index: int
    status: str  # "pass", "fail" or "degenerate-exhausted"
    resampled: list
    doc: dict | None

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("doc")
        d["verdicts"] = None if self.doc is None else self.doc["verdicts"]
        return d


# -- single runs (top-level so they pickle) --------------------------------------


def mt12_run(cfg: RunConfig, index: int) -> RunOutcome:
    F = RationalFunctionField(cfg.q, "t")
    rng = run_rng(cfg.seed, index)
    resampled = []
    for _ in range(cfg.retries):
        sample = random_specialization(rng, F, cfg.degree_bound)
        if invariant_vector(sample.known_class()).exponent() != 9:
            resampled.append("input exponent < 9")
            continue
        try:
            res = mt12.run_mt12(sample)
        except Degenerate as exc:
            resampled.append(str(exc))
            continue
        meta = cfg.meta("mt1-mt2", index) | {"resampled": resampled}
        doc = mt12.to_certificate(res, meta)
        return RunOutcome("mt1-mt2", index, "pass" if mt12.passed(doc["verdicts"]) else "fail", resampled, doc)
    return RunOutcome("mt1-mt2", index, "degenerate-exhausted", resampled, None)


def mt3_run(cfg: RunConfig, index: int) -> RunOutcome:
    F = RationalFunctionField(cfg.q, "t")
    inst = exponent3.random_instance(run_rng(cfg.seed, index), F, cfg.degree_bound)
    res = exponent3.exponent3_branch(inst, chain_budget=cfg.chain_budget)
    doc = exponent3.to_certificate(res, cfg.meta("mt3", index))
    return RunOutcome("mt3", index, "pass" if exponent3.passed(doc["verdicts"]) else "fail", [], doc)


def tignol_run(cfg: RunConfig, index: int) -> RunOutcome:
    F = RationalFunctionField(cfg.q, "t")
    w = exponent3.reverse_tignol_case(run_rng(cfg.seed, index), F, cfg.degree_bound)
    doc = exponent3.tignol_certificate(w, cfg.meta("tignol", index))
    return RunOutcome("tignol", index, "pass" if exponent3.tignol_passed(doc["verdicts"]) else "fail", [], doc)


def counts_run(cfg: RunConfig, index: int = 0) -> RunOutcome:
    doc = counts.to_certificate(cfg.meta("counts", index))
    return RunOutcome("counts", index, "pass" if all(doc["verdicts"].values()) else "fail", [], doc)


def _dispatch(args):
    fn, cfg, index = args
    return fn(cfg, index)


def plan(cfg: RunConfig) -> list:
    jobs = []
    if "counts" in cfg.stages:
        jobs.append((counts_run, cfg, 0))
    if "mt1" in cfg.stages or "mt2" in cfg.stages:
        jobs += [(mt12_run, cfg, i) for i in range(cfg.specializations)]
    if "mt3" in cfg.stages:
        jobs += [(mt3_run, cfg, i) for i in range(cfg.specializations)]
    if "tignol" in cfg.stages:
        jobs += [(tignol_run, cfg, i) for i in range(cfg.specializations)]
    return jobs


def run_campaign(cfg: RunConfig) -> list[RunOutcome]:
    """All selected runs, in plan order regardless of completion order."""
    cfg.validate()
    jobs = plan(cfg)
    if cfg.workers <= 1 or len(jobs) <= 1:
        return [_dispatch(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(_dispatch, jobs))
