"""Exhaustive desk-scale verification over enumerated chord diagrams.

Every connected ribbon graph has a one-vertex partial dual, and the genus
polynomial is constant on partial-dual classes, so scanning all chord
diagrams with up to a handful of chords checks the monomiality
classification extensionally on one-vertex representatives.  Reports are
deterministic: diagrams are processed in canonical word order and the
reduction is order-fixed, so the canonical JSON rendering is byte-identical
across runs and across worker counts (wall time is reported separately and
never enters the canonical form).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .chord import (
    ChordDiagram,
    canonical_form,
    components_all_odd_complete,
    enumerate_diagrams,
    is_join_prime,
    to_ribbon_graph,
    word_to_text,
)
from .core import bouquet_bn
from .gpoly import GenusPolynomial, gamma, is_log_concave, is_monomial

SCOPE_NOTE = "one-vertex representatives"


def _dedup_name(use_reflection: bool) -> str:
    return "rotation+reflection" if use_reflection else "rotation"


def report_json(data) -> str:
    """The canonical JSON rendering used for report stability guarantees."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class DiagramRecord:
    """Per-diagram facts gathered in one scan pass."""

    word: str
    monomial: bool
    classifier: bool
    log_concave: bool
    join_prime: bool


def _scan_words(words: list[tuple[int, ...]]) -> list[DiagramRecord]:
    out = []
    for w in words:
        d = ChordDiagram(w)
        p = gamma(to_ribbon_graph(d))
        out.append(
            DiagramRecord(
                word=word_to_text(w),
                monomial=is_monomial(p),
                classifier=components_all_odd_complete(d),
                log_concave=is_log_concave(p),
                join_prime=is_join_prime(d),
            )
        )
    return out


def _scan(n: int, use_reflection: bool, workers: int) -> list[DiagramRecord]:
    words = [d.word for d in enumerate_diagrams(n, use_reflection)]
    if workers <= 1 or len(words) < 2 * workers:
        return _scan_words(words)
    step = -(-len(words) // workers)
    chunks = [words[lo : lo + step] for lo in range(0, len(words), step)]
    records: list[DiagramRecord] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan_words, chunks):
            records.extend(part)
    return records


@dataclass(frozen=True)
class VerificationReport:
    """Scan results for one chord count."""

    n: int
    dedup: str
    diagrams_scanned: int
    monomial_words: tuple[str, ...]
    classifier_words: tuple[str, ...]
    mismatches: tuple[str, ...]
    logconcavity_violations: tuple[str, ...]
    wall_time: float

    def to_json_dict(self, include_timing: bool = False) -> dict:
        data = {
            "n": self.n,
            "dedup": self.dedup,
            "scope": SCOPE_NOTE,
            "diagrams_scanned": self.diagrams_scanned,
            "monomial_words": list(self.monomial_words),
            "classifier_words": list(self.classifier_words),
            "mismatches": list(self.mismatches),
            "logconcavity_violations": list(self.logconcavity_violations),
        }
        if include_timing:
            data["wall_time"] = self.wall_time
        return data

    def to_text(self) -> str:
        lines = [
            f"n={self.n} [{self.dedup} dedup, {SCOPE_NOTE}]",
            f"  diagrams scanned: {self.diagrams_scanned}",
            f"  monomial: {len(self.monomial_words)}",
            f"  classifier: {len(self.classifier_words)}",
            f"  mismatches: {len(self.mismatches)}",
            f"  log-concavity violations: {len(self.logconcavity_violations)}",
            f"  wall time: {self.wall_time:.2f}s",
        ]
        for w in self.mismatches:
            lines.append(f"  MISMATCH {w}")
        for w in self.logconcavity_violations:
            lines.append(f"  NOT LOG-CONCAVE {w}")
        return "\n".join(lines)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.logconcavity_violations


def gmt_report(n: int, use_reflection: bool = False, workers: int = 1) -> VerificationReport:
    """Check monomiality against the odd-complete-components classifier for one n."""
    start = time.perf_counter()
    records = _scan(n, use_reflection, workers)
    monomial = tuple(r.word for r in records if r.monomial)
    classifier = tuple(r.word for r in records if r.classifier)
    mismatches = tuple(sorted(set(monomial) ^ set(classifier)))
    return VerificationReport(
        n=n,
        dedup=_dedup_name(use_reflection),
        diagrams_scanned=len(records),
        monomial_words=monomial,
        classifier_words=classifier,
        mismatches=mismatches,
        logconcavity_violations=(),
        wall_time=time.perf_counter() - start,
    )


def verify_gmt(
    max_n: int, use_reflection: bool = False, workers: int = 1
) -> list[VerificationReport]:
    """Extensional monomiality check for every chord count up to ``max_n``."""
    return [gmt_report(n, use_reflection, workers) for n in range(1, max_n + 1)]


def logconcavity_report(
    n: int, use_reflection: bool = False, workers: int = 1
) -> VerificationReport:
    """Log-concavity scan for one chord count (report-only; a conjecture)."""
    start = time.perf_counter()
    records = _scan(n, use_reflection, workers)
    violations = tuple(r.word for r in records if not r.log_concave)
    return VerificationReport(
        n=n,
        dedup=_dedup_name(use_reflection),
        diagrams_scanned=len(records),
        monomial_words=(),
        classifier_words=(),
        mismatches=(),
        logconcavity_violations=violations,
        wall_time=time.perf_counter() - start,
    )


def scan_log_concavity(
    max_n: int, use_reflection: bool = False, workers: int = 1
) -> list[VerificationReport]:
    """Log-concavity scan of every enumerated diagram up to ``max_n`` chords."""
    return [logconcavity_report(n, use_reflection, workers) for n in range(1, max_n + 1)]


@dataclass(frozen=True)
class BnCheck:
    """One bouquet's polynomial against the closed-form monomial."""

    n: int
    computed: tuple[int, ...]
    expected: tuple[int, ...]
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": list(self.computed),
            "expected": list(self.expected),
            "ok": self.ok,
        }

    def to_text(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return (
            f"n={self.n}: gamma={GenusPolynomial(self.computed)} "
            f"expected={GenusPolynomial(self.expected)}  {mark}"
        )


def verify_bn(max_n: int, workers: int = 1) -> list[BnCheck]:
    """Check gamma(B_n) = 2^n * z^((n-1)/2) for every odd n up to ``max_n``."""
    out = []
    for n in range(1, max_n + 1, 2):
        p = gamma(bouquet_bn(n), workers=workers)
        expected = GenusPolynomial.monomial(2**n, (n - 1) // 2)
        out.append(
            BnCheck(n=n, computed=p.coeffs, expected=expected.coeffs, ok=p.coeffs == expected.coeffs)
        )
    return out


@dataclass(frozen=True)
class DichotomyCheck:
    """Monomial join-prime diagrams for one n against the expected set."""

    n: int
    expected: tuple[str, ...]
    found: tuple[str, ...]
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "expected": list(self.expected),
            "found": list(self.found),
            "ok": self.ok,
        }

    def to_text(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return f"n={self.n}: monomial join-prime = {list(self.found)}  {mark}"


def verify_join_prime_dichotomy(
    max_n: int, use_reflection: bool = False, workers: int = 1
) -> list[DichotomyCheck]:
    """Among join-prime diagrams the monomial ones are exactly the odd bouquets.

    For each n up to ``max_n``: odd n must yield exactly the fully
    interlaced word, even n must yield nothing.
    """
    out = []
    for n in range(1, max_n + 1):
        records = _scan(n, use_reflection, workers)
        found = tuple(r.word for r in records if r.join_prime and r.monomial)
        if n % 2:
            bn_word = canonical_form(
                ChordDiagram(tuple(range(n)) + tuple(range(n))), use_reflection
            )
            expected = (bn_word.text,)
        else:
            expected = ()
        out.append(DichotomyCheck(n=n, expected=expected, found=found, ok=found == expected))
    return out
