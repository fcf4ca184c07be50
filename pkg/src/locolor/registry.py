"""Claim registry: executable checks bound to source citations, with verdicts.

A claim is code, not configuration: each check builds its own evidence
(witness colourings, maps, exact rationals, counterexamples) because the
checks differ in shape.  Results aggregate into a report with a stable
JSON encoding; a failing claim always carries a concrete counterexample
or mismatch description in its evidence.
"""

from __future__ import annotations

import fnmatch
import json
import random
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable

from .sampling import subseed

PASS = "Pass"
FAIL = "Fail"
NOT_APPLICABLE = "NotApplicable"

RUNTIME_CLASSES = ("instant", "seconds", "minutes")


@dataclass(frozen=True)
class Claim:
    id: str
    citation: str
    runtime_class: str
    check: Callable[["ClaimContext"], tuple[str, dict]]


class ClaimContext:
    """Per-claim execution context with deterministic sub-seeded randomness."""

    def __init__(self, claim_id: str, seed: int):
        self.claim_id = claim_id
        self.seed = seed

    def rng(self, label: str = "") -> random.Random:
        return random.Random(subseed(self.seed, f"{self.claim_id}:{label}"))

    def subseed(self, label: str = "") -> int:
        return subseed(self.seed, f"{self.claim_id}:{label}")


@dataclass
class ClaimResult:
    id: str
    citation: str
    verdict: str
    evidence: dict
    millis: int


@dataclass
class Report:
    seed: int
    pattern: str
    runtime_limit: str
    results: list[ClaimResult] = field(default_factory=list)
    timestamp: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat()
    )

    @property
    def ok(self) -> bool:
        return all(r.verdict in (PASS, NOT_APPLICABLE) for r in self.results)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    def to_payload(self, include_timing: bool = True) -> dict:
        payload = {
            "seed": self.seed,
            "pattern": self.pattern,
            "runtime_limit": self.runtime_limit,
            "ok": self.ok,
            "counts": self.counts(),
            "claims": [
                {
                    "id": r.id,
                    "citation": r.citation,
                    "verdict": r.verdict,
                    "evidence": r.evidence,
                    **({"millis": r.millis} if include_timing else {}),
                }
                for r in self.results
            ],
        }
        if include_timing:
            payload["timestamp"] = self.timestamp
        return payload

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_payload(include_timing), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(f"[{r.verdict:>13}] {r.id}  ({r.millis} ms)")
            if r.verdict == FAIL:
                lines.append(f"    citation: {r.citation}")
                lines.append(f"    evidence: {json.dumps(r.evidence, sort_keys=True)}")
        counts = self.counts()
        lines.append(
            f"{counts[PASS]} passed, {counts[FAIL]} failed, "
            f"{counts[NOT_APPLICABLE]} not applicable (seed {self.seed})"
        )
        return "\n".join(lines)


class Registry:
    def __init__(self):
        self._claims: dict[str, Claim] = {}

    def add(self, claim: Claim) -> None:
        if claim.id in self._claims:
            raise ValueError(f"duplicate claim id {claim.id!r}")
        if claim.runtime_class not in RUNTIME_CLASSES:
            raise ValueError(f"unknown runtime class {claim.runtime_class!r}")
        self._claims[claim.id] = claim

    def claim(self, id: str, citation: str, runtime: str = "instant"):
        def register(fn: Callable[[ClaimContext], tuple[str, dict]]):
            self.add(Claim(id, citation, runtime, fn))
            return fn

        return register

    def ids(self) -> list[str]:
        return sorted(self._claims)

    def get(self, id: str) -> Claim:
        return self._claims[id]

    def select(self, pattern: str, runtime_limit: str = "minutes") -> list[Claim]:
        cutoff = RUNTIME_CLASSES.index(runtime_limit)
        matched = [
            self._claims[cid]
            for cid in sorted(self._claims)
            if fnmatch.fnmatchcase(cid, pattern)
        ]
        if not matched:
            raise ValueError(f"no claims match pattern {pattern!r}")
        return [c for c in matched if RUNTIME_CLASSES.index(c.runtime_class) <= cutoff]

    def run(
        self, pattern: str = "*", seed: int = 0, runtime_limit: str = "minutes"
    ) -> Report:
        report = Report(seed=seed, pattern=pattern, runtime_limit=runtime_limit)
        for claim in self.select(pattern, runtime_limit):
            start = time.monotonic()
            try:
                verdict, evidence = claim.check(ClaimContext(claim.id, seed))
            except Exception as exc:  # a crashing check is a failing check
                verdict, evidence = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
            millis = int((time.monotonic() - start) * 1000)
            report.results.append(
                ClaimResult(claim.id, claim.citation, verdict, evidence, millis)
            )
        return report


def frac(value: Fraction) -> str:
    """Exact rational rendered for JSON evidence."""
    return f"{value.numerator}/{value.denominator}"
