"""Exhaustive desk-scale verification of the orientation-class claims.

Each suite enumerates a finite universe (all n^n self-maps, all product
pairs, all short oriented sequences), checks one family of claims, and
returns a :class:`SuiteReport`.  Genuine failures land in ``violations``;
the known rank <= 2 exceptions to the literal triple statement are listed
separately as ``sanctioned_exceptions`` so they stay visible without
failing the run.

Reports are deterministic: enumeration is lexicographic, sampling is seeded
by (n, map index), and per-claim results keep the lexicographically
smallest witness.  The map enumeration may be split into contiguous index
ranges and run on several workers; merging partial tallies is associative
and commutative, so multi-worker runs reproduce the single-worker report
byte for byte (timings excluded — ``elapsed`` never enters the machine
format).
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .chords import has_chord_property
from .mappings import Mapping, enumerate_all, mapping_count
from .membership import classify, quad_test, triple_test
from .sequences import Orientation, Seq, orientation
from .witnesses import witness_quad, witness_triple

SUITES = ("equivalence", "identity", "lemma")

IDENTITY_MAX_N = 5
LEMMA_MAX_N = 6


@dataclass(frozen=True)
class Violation:
    """A violated claim, carrying its lexicographically first witness."""

    claim: str
    witness: str
    detail: str
    count: int


@dataclass(frozen=True)
class SanctionedException:
    """A map exempted from the literal triple statement (rank <= 2 regime)."""

    claim: str
    witness: str


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    checks: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n: int
    checks_run: int
    claims: tuple[ClaimResult, ...]
    violations: tuple[Violation, ...]
    sanctioned_exceptions: tuple[SanctionedException, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class ClassCounts:
    """Exact sizes of the orientation classes inside the n^n self-maps."""

    n: int
    total: int
    op: int
    or_: int
    p: int
    op_and_or: int
    low_rank_in_p: int

    def invariant_failures(self) -> tuple[str, ...]:
        problems = []
        if self.p != self.op + self.or_ - self.op_and_or:
            problems.append(
                f"p={self.p} != op+or-op_and_or={self.op + self.or_ - self.op_and_or}"
            )
        if self.op_and_or != self.low_rank_in_p:
            problems.append(
                f"op_and_or={self.op_and_or} != low_rank_in_p={self.low_rank_in_p}"
            )
        return tuple(problems)


# ----------------------------------------------------------------------
# Tally plumbing: plain dicts so partial results cross process boundaries.
# ----------------------------------------------------------------------


def _new_tally() -> dict:
    return {"checks": Counter(), "violations": {}, "sanctioned": []}


def _record(
    tally: dict,
    claim: str,
    ok: bool,
    index: int,
    witness: str,
    detail: str,
    weight: int = 1,
) -> None:
    tally["checks"][claim] += weight
    if not ok:
        cur = tally["violations"].get(claim)
        if cur is None:
            tally["violations"][claim] = [index, witness, detail, 1]
        else:
            cur[3] += 1
            if index < cur[0]:
                cur[0], cur[1], cur[2] = index, witness, detail


def _merge_tallies(parts: list[dict]) -> dict:
    total = _new_tally()
    for part in parts:
        total["checks"].update(part["checks"])
        for claim, (idx, wit, det, cnt) in part["violations"].items():
            cur = total["violations"].get(claim)
            if cur is None:
                total["violations"][claim] = [idx, wit, det, cnt]
            else:
                cur[3] += cnt
                if idx < cur[0]:
                    cur[0], cur[1], cur[2] = idx, wit, det
        total["sanctioned"].extend(part["sanctioned"])
    return total


def _finish(suite: str, n: int, tally: dict, started: float) -> SuiteReport:
    claims = tuple(
        ClaimResult(
            claim,
            tally["checks"][claim],
            tally["violations"][claim][3] if claim in tally["violations"] else 0,
        )
        for claim in sorted(tally["checks"])
    )
    violations = tuple(
        Violation(claim, wit, det, cnt)
        for claim, (idx, wit, det, cnt) in sorted(tally["violations"].items())
    )
    sanctioned = tuple(
        SanctionedException(claim, wit)
        for claim, idx, wit in sorted(tally["sanctioned"])
    )
    return SuiteReport(
        suite=suite,
        n=n,
        checks_run=sum(tally["checks"].values()),
        claims=claims,
        violations=violations,
        sanctioned_exceptions=sanctioned,
        elapsed=time.perf_counter() - started,
    )


# ----------------------------------------------------------------------
# Equivalence suite: the four membership routes agree, witnesses total.
# ----------------------------------------------------------------------


def _checked_triple(m: Mapping, mode: str) -> tuple[bool, str]:
    """Extract a triple witness and re-validate it from scratch."""
    expected = (
        Orientation.ANTI_CYCLIC_ONLY if mode == "preserve" else Orientation.CYCLIC_ONLY
    )
    try:
        w = witness_triple(m, mode)
    except (ValueError, RuntimeError) as exc:
        return False, f"extraction failed: {exc}"
    if len(set(w.points)) != 3:
        return False, f"repeated points in {w.points}"
    if orientation(Seq(m.n, w.points)) is not Orientation.CYCLIC_ONLY:
        return False, f"source {w.points} not cyclic-only"
    image = Seq(m.n, tuple(m.images[p] for p in w.points))
    if orientation(image) is not expected:
        return False, f"image {image.items} not {expected.value}"
    return True, ""


def _checked_quad(m: Mapping) -> tuple[bool, str]:
    """Extract a quadruple witness and re-validate it from scratch."""
    try:
        w = witness_quad(m)
    except (ValueError, RuntimeError) as exc:
        return False, f"extraction failed: {exc}"
    if len(set(w.points)) != 4:
        return False, f"repeated points in {w.points}"
    if orientation(Seq(m.n, w.points)) is not Orientation.CYCLIC_ONLY:
        return False, f"source {w.points} not cyclic-only"
    image = Seq(m.n, tuple(m.images[p] for p in w.points))
    if orientation(image) is not Orientation.NEITHER:
        return False, f"image {image.items} not neither-oriented"
    return True, ""


def _equivalence_range(args: tuple[int, int, int, bool]) -> dict:
    n, start, stop, geometric = args
    tally = _new_tally()
    index = start
    for m in enumerate_all(n, start, stop):
        witness = str(m)
        report = classify(m)
        low_rank = report.image_size <= 2

        tp = triple_test(m, "preserve")
        _record(
            tally,
            "triple-preserve-refined",
            tp == (report.in_op or low_rank),
            index,
            witness,
            f"triple test (preserve) = {tp}, in_op = {report.in_op},"
            f" image size = {report.image_size}",
        )
        if tp and not report.in_op:
            tally["sanctioned"].append(("triple-preserve-literal", index, witness))

        tr = triple_test(m, "reverse")
        _record(
            tally,
            "triple-reverse-refined",
            tr == (report.in_or or low_rank),
            index,
            witness,
            f"triple test (reverse) = {tr}, in_or = {report.in_or},"
            f" image size = {report.image_size}",
        )
        if tr and not report.in_or:
            tally["sanctioned"].append(("triple-reverse-literal", index, witness))

        _record(
            tally,
            "quad-vs-definitional",
            quad_test(m) == report.in_p,
            index,
            witness,
            "quad test disagrees with definitional membership",
        )
        _record(
            tally,
            "chord-vs-definitional",
            has_chord_property(m).holds == report.in_p,
            index,
            witness,
            "chord property disagrees with definitional membership",
        )
        if geometric:
            _record(
                tally,
                "chord-geometric-vs-definitional",
                has_chord_property(m, "geometric").holds == report.in_p,
                index,
                witness,
                "geometric chord property disagrees with definitional membership",
            )

        if not report.in_op and report.image_size >= 3:
            ok, detail = _checked_triple(m, "preserve")
            _record(tally, "witness-triple-preserve", ok, index, witness, detail)
        if not report.in_or and report.image_size >= 3:
            ok, detail = _checked_triple(m, "reverse")
            _record(tally, "witness-triple-reverse", ok, index, witness, detail)
        if not report.in_p:
            ok, detail = _checked_quad(m)
            _record(tally, "witness-quad", ok, index, witness, detail)
        index += 1
    return tally


def equivalence_suite(
    n: int, workers: int = 1, geometric: bool | None = None
) -> SuiteReport:
    """Check, for every self-map of [n], that all membership routes agree
    and that witness extraction succeeds wherever a witness must exist.

    ``geometric`` additionally runs the exact-geometry chord oracle per map
    (defaults to on for n <= 5, where it stays cheap).
    """
    if n < 1:
        raise ValueError(f"cycle size must be positive, got n={n}")
    if geometric is None:
        geometric = n <= 5
    started = time.perf_counter()
    total = mapping_count(n)
    if workers <= 1 or total < 4096:
        parts = [_equivalence_range((n, 0, total, geometric))]
    else:
        chunks = workers * 4
        bounds = [total * i // chunks for i in range(chunks + 1)]
        jobs = [
            (n, bounds[i], bounds[i + 1], geometric)
            for i in range(chunks)
            if bounds[i] < bounds[i + 1]
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_equivalence_range, jobs))
    return _finish("equivalence", n, _merge_tallies(parts), started)


# ----------------------------------------------------------------------
# Identity suite: closure identities of the classes as product sets.
# ----------------------------------------------------------------------


def _product_set(left: frozenset, right: frozenset) -> set:
    out = set()
    for a in left:
        for b in right:
            out.add(tuple(map(b.__getitem__, a)))
    return out


def _set_claim(
    tally: dict, claim: str, got: set, want: frozenset, equal: bool, weight: int
) -> None:
    if equal:
        ok = got == want
        offenders = got.symmetric_difference(want)
    else:
        ok = got <= want
        offenders = got - want
    witness = ",".join(map(str, min(offenders))) if offenders else ""
    detail = "" if ok else f"{len(offenders)} offending map(s)"
    _record(tally, claim, ok, 0, witness, detail, weight=weight)


def identity_suite(n: int) -> SuiteReport:
    """Verify the closure identities of the orientation classes by brute
    force: compose every relevant pair of maps and compare the resulting
    product sets.  Practical for n <= 5 only.
    """
    if not 1 <= n <= IDENTITY_MAX_N:
        raise ValueError(f"identity suite supports 1 <= n <= {IDENTITY_MAX_N}, got {n}")
    started = time.perf_counter()
    tally = _new_tally()

    op_list: list[tuple[int, ...]] = []
    or_list: list[tuple[int, ...]] = []
    for m in enumerate_all(n):
        report = classify(m)
        if report.in_op:
            op_list.append(m.images)
        if report.in_or:
            or_list.append(m.images)
    op_set = frozenset(op_list)
    or_set = frozenset(or_list)
    p_set = op_set | or_set
    low_rank_p = frozenset(t for t in p_set if len(set(t)) <= 2)

    op_op = _product_set(op_set, op_set)
    or_or = _product_set(or_set, or_set)
    or_op = _product_set(or_set, op_set)
    op_or = _product_set(op_set, or_set)

    n_op, n_or = len(op_set), len(or_set)
    _set_claim(tally, "or-or-equals-op", or_or, op_set, True, n_or * n_or)
    _set_claim(tally, "or-op-equals-or", or_op, or_set, True, n_or * n_op)
    _set_claim(tally, "op-or-equals-or", op_or, or_set, True, n_op * n_or)
    _set_claim(tally, "op-closed", op_op, op_set, False, n_op * n_op)
    # P = OP u OR, so the product P.P is the union of the four products.
    p_p = op_op | or_or | or_op | op_or
    _set_claim(tally, "p-closed", p_p, p_set, False, len(p_p))
    _set_claim(
        tally,
        "op-and-or-is-low-rank-p",
        set(op_set & or_set),
        low_rank_p,
        True,
        len(p_set),
    )
    return _finish("identity", n, tally, started)


# ----------------------------------------------------------------------
# Class counts.
# ----------------------------------------------------------------------


def count_classes(n: int) -> ClassCounts:
    """Exact class cardinalities by enumerating all n^n maps.

    The scan inlines the circular descent/ascent counts; agreement with the
    per-map classifier is covered by the test suite.  Intended for n <= 8.
    """
    if n < 1:
        raise ValueError(f"cycle size must be positive, got n={n}")
    op = or_ = p = both = low = 0
    for images in itertools.product(range(n), repeat=n):
        descents = ascents = 0
        prev = images[-1]
        for cur in images:
            if prev > cur:
                descents += 1
            elif prev < cur:
                ascents += 1
            prev = cur
        cyclic = descents <= 1
        anti = ascents <= 1
        if cyclic:
            op += 1
        if anti:
            or_ += 1
        if cyclic or anti:
            p += 1
            if len(set(images)) <= 2:
                low += 1
        if cyclic and anti:
            both += 1
    return ClassCounts(
        n=n, total=n**n, op=op, or_=or_, p=p, op_and_or=both, low_rank_in_p=low
    )


# ----------------------------------------------------------------------
# Lemma suite: oriented sequences keep (or flip) orientation under members.
# ----------------------------------------------------------------------


def _oriented_pool(n: int, max_len: int) -> list[tuple[tuple[int, ...], Orientation]]:
    pool = []
    for length in range(3, max_len + 1):
        for items in itertools.product(range(n), repeat=length):
            tag = orientation(Seq(n, items))
            if tag.oriented:
                pool.append((items, tag))
    return pool


def lemma_suite(
    n: int, max_len: int = 4, sample_budget: int | None = None
) -> SuiteReport:
    """Check that members map oriented sequences to sequences of the same
    (preserving case) or opposite (reversing case) orientation whenever the
    image keeps at least three distinct values, plus subsequence
    inheritance of orientation on a sample of oriented sequences.

    All oriented sequences of length 3..max_len over [n] are candidates.
    Each member checks all of them when there are at most ``sample_budget``
    (or the budget is None); otherwise it checks a pseudorandom sample
    seeded by (n, map index), so reports are reproducible.
    """
    if not 1 <= n <= LEMMA_MAX_N:
        raise ValueError(f"lemma suite supports 1 <= n <= {LEMMA_MAX_N}, got {n}")
    if not 1 <= max_len <= 6:
        raise ValueError(f"max_len must be within 1..6, got {max_len}")
    started = time.perf_counter()
    tally = _new_tally()
    pool = _oriented_pool(n, max_len)

    for index, m in enumerate(enumerate_all(n)):
        report = classify(m)
        # Rank <= 2 members never produce three distinct image values, so
        # every check on them is vacuous; skip them outright.
        if not report.in_p or report.image_size < 3:
            continue
        if sample_budget is None or len(pool) <= sample_budget:
            chosen = pool
        else:
            rng = random.Random(1_000_003 * n + index)
            chosen = [
                pool[t] for t in sorted(rng.sample(range(len(pool)), sample_budget))
            ]
        imgs = m.images
        claim = (
            "image-orientation-preserved" if report.in_op else "image-orientation-reversed"
        )
        expect_swap = not report.in_op
        for items, tag in chosen:
            image = tuple(map(imgs.__getitem__, items))
            if len(set(image)) >= 3:
                image_tag = orientation(Seq(n, image))
                want = tag.swapped() if expect_swap else tag
                ok = image_tag is want
            else:
                ok = True  # too few distinct image values: nothing is claimed
            _record(
                tally,
                claim,
                ok,
                index,
                f"map={m};seq={','.join(map(str, items))}",
                "image orientation does not match the source",
            )

    # Subsequence inheritance on a deterministic sample of the pool.
    rng = random.Random(1_000_003 * n)
    if len(pool) > 200:
        sample = [pool[t] for t in sorted(rng.sample(range(len(pool)), 200))]
    else:
        sample = pool
    for items, tag in sample:
        t = len(items)
        for mask in range(1, 1 << t):
            sub = tuple(items[b] for b in range(t) if mask >> b & 1)
            sub_tag = orientation(Seq(n, sub))
            ok = True
            if tag.admits_cyclic and not sub_tag.admits_cyclic:
                ok = False
            if tag.admits_anti_cyclic and not sub_tag.admits_anti_cyclic:
                ok = False
            _record(
                tally,
                "subsequence-inheritance",
                ok,
                0,
                f"seq={','.join(map(str, items))};mask={mask}",
                "subsequence lost an orientation admitted by the full sequence",
            )
    return _finish("lemma", n, tally, started)


# ----------------------------------------------------------------------
# Orchestration and report serialization.
# ----------------------------------------------------------------------


def run_verify(
    n_max: int,
    suites: tuple[str, ...] = SUITES,
    workers: int = 1,
    lemma_max_len: int = 4,
    lemma_budget: int | None = 200,
) -> list[SuiteReport]:
    """Run the selected suites for n = 1..n_max and return their reports.

    The identity suite is capped at n = 5 and the lemma suite at n = 6
    (their brute-force preconditions); larger n_max only extends the
    equivalence suite.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {SUITES}")
    reports = []
    if "equivalence" in suites:
        for n in range(1, n_max + 1):
            reports.append(equivalence_suite(n, workers=workers))
    if "identity" in suites:
        for n in range(1, min(n_max, IDENTITY_MAX_N) + 1):
            reports.append(identity_suite(n))
    if "lemma" in suites:
        for n in range(1, min(n_max, LEMMA_MAX_N) + 1):
            reports.append(lemma_suite(n, max_len=lemma_max_len, sample_budget=lemma_budget))
    return reports


def _token(text: str) -> str:
    """Collapse free text to a single machine-format token."""
    return "-".join(text.split()) if text else "-"


def format_machine(reports: list[SuiteReport]) -> str:
    """Line-oriented key=value serialization; stable across runs and worker
    counts (timings are deliberately excluded)."""
    lines = []
    for r in reports:
        total = sum(v.count for v in r.violations)
        lines.append(
            f"report suite={r.suite} n={r.n} checks={r.checks_run}"
            f" violations={total} sanctioned={len(r.sanctioned_exceptions)}"
        )
        for c in r.claims:
            status = "pass" if c.passed else "fail"
            lines.append(
                f"claim suite={r.suite} n={r.n} claim={c.claim}"
                f" checks={c.checks} violations={c.violations} status={status}"
            )
        for s in r.sanctioned_exceptions:
            lines.append(
                f"sanctioned suite={r.suite} n={r.n} claim={s.claim} witness={s.witness}"
            )
        for v in r.violations:
            lines.append(
                f"violation suite={r.suite} n={r.n} claim={v.claim}"
                f" witness={v.witness} count={v.count} detail={_token(v.detail)}"
            )
    return "\n".join(lines) + "\n"


def format_text(report: SuiteReport) -> str:
    """Human-readable report block."""
    verdict = "PASS" if report.passed else "FAIL"
    lines = [
        f"suite {report.suite}, n={report.n}: {verdict}"
        f" (checks={report.checks_run}, sanctioned={len(report.sanctioned_exceptions)},"
        f" {report.elapsed:.2f}s)"
    ]
    for c in report.claims:
        status = "pass" if c.passed else f"FAIL ({c.violations} violations)"
        lines.append(f"  {c.claim}: {status} [checks={c.checks}]")
    if report.sanctioned_exceptions:
        by_claim = Counter(s.claim for s in report.sanctioned_exceptions)
        summary = ", ".join(f"{claim}: {cnt}" for claim, cnt in sorted(by_claim.items()))
        first = report.sanctioned_exceptions[0]
        lines.append(f"  sanctioned exceptions ({summary}), e.g. {first.witness}")
    for v in report.violations:
        lines.append(
            f"  VIOLATION {v.claim}: witness={v.witness} count={v.count} ({v.detail})"
        )
    return "\n".join(lines)
