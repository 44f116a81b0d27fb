"""Run the law registry against generated multirelations."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from . import counterexamples
from .core import Multirelation, Universe
from .laws import EXHAUSTIVE_LIMIT, VALID, Law, exhaustive_envs, list_laws, random_env, space_size
from .report import FailureWitness, LawRecord, SuiteReport

ELEMENT_NAMES = "abcdefghijklmnop"


@dataclass(frozen=True)
class SuiteConfig:
    size: int = 2
    mode: str = "exhaustive"
    seed: int = 0
    samples: int = 500
    filter: str = ""

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', not {self.mode!r}")
        if not 1 <= self.size <= 4:
            raise ValueError("universe size must be between 1 and 4")
        if self.samples < 1:
            raise ValueError("samples must be positive")


def universe(size: int) -> Universe:
    return Universe(ELEMENT_NAMES[:size])


def select(prefix: str = "") -> list[Law]:
    return [law for law in list_laws() if law.id.startswith(prefix)]


def law_rng(seed: int, law: Law) -> random.Random:
    # one stream per law, so filtering the registry does not shift samples
    return random.Random(f"{seed}:{law.id}")


def check_valid(law: Law, config: SuiteConfig) -> LawRecord:
    n = config.size
    if config.mode == "exhaustive" and space_size(law, n) <= EXHAUSTIVE_LIMIT:
        mode, envs = "exhaustive", exhaustive_envs(law, n)
    else:
        rng = law_rng(config.seed, law)
        mode = "random"
        envs = (random_env(law, n, rng) for _ in range(config.samples))
    evaluate = law.evaluator(n)
    implication = False
    samples = failures = nonvacuous = 0
    witness = None
    for env in envs:
        samples += 1
        holds, lhs, rhs, premise = evaluate(env)
        if premise is not None:
            implication = True
            nonvacuous += premise
        if not holds:
            failures += 1
            if witness is None:
                u = universe(n)
                witness = FailureWitness(
                    bindings={k: str(Multirelation(u, v)) for k, v in sorted(env.items())},
                    lhs=str(Multirelation(u, lhs)), rhs=str(Multirelation(u, rhs)),
                    universe=list(u.elements),
                )
    return LawRecord(
        id=law.id, anchor=law.anchor, polarity=law.polarity, mode=mode,
        samples=samples, failures=failures,
        nonvacuous=nonvacuous if implication else None,
        witness=witness, paper_discrepancy=law.paper_discrepancy,
    )


def check_refutable(law: Law) -> LawRecord:
    """Replay the stored witnesses of a law expected to fail."""
    records = [counterexamples.replay(w)[0] for w in counterexamples.witnesses_for(law.id)]
    refuting = [r for r in records if r is not None and r.failures]
    return LawRecord(
        id=law.id, anchor=law.anchor, polarity=law.polarity, mode="witness",
        samples=len(records), failures=len(refuting),
        witness=refuting[0].witness if refuting else None,
        paper_discrepancy=law.paper_discrepancy,
    )


def run_suite(config: SuiteConfig | None = None) -> SuiteReport:
    config = config or SuiteConfig()
    report = SuiteReport(config=asdict(config))
    for law in select(config.filter):
        if law.polarity == VALID:
            report.records.append(check_valid(law, config))
        else:
            report.records.append(check_refutable(law))
    return report
