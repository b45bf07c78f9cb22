"""Cross-checks tying the formulas, enumerations and bijections together.

Each check compares two independently computed values and yields a
structured report. Failures accumulate instead of aborting, so a single
run surfaces every downstream breakage; a full run over the default
limits is expected to produce zero failures.

Report lists are canonically ordered (check name, then parameters) and
serialize deterministically, byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .arrangements import SignClass
from .bijections import _conjugate_enc, _epsilon_enc
from .enumeration import ClassFilter, _b_layouts, count
from .errors import InternalInvariantViolation, RangeError
from .formulas import (
    binom,
    companion_identity,
    eval_S,
    eval_T,
    eval_U,
    eval_V,
    eval_W,
    gf_coefficients,
    moriarty,
    oddness_and_divisibility,
    recurrence_residual,
)

Value = Union[int, list, None]


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


# Fixed reference table: every report cites the claim it checks.
CLAIM_REFS = {
    "theorem.formulas": "agreement of the five sum evaluations",
    "theorem.enumeration": "plus-class tiling counts match the sums",
    "lemma.cardinality": "odd-weight plus census vs even-weight minus census",
    "lemma.involution": "conjugation is a parity- and sign-flipping involution",
    "lemma.exception": "unique exceptional arrangement of the expected shape",
    "strata.non_white": "plus-class census by non-white cell count",
    "strata.last_decorated": "plus-class census by last decorated cell",
    "strata.last_black": "plus-class census by last black cell",
    "strata.weight_even": "whole-family census by even weight",
    "strata.even_count": "plus-class count vs even-weight census",
    "auxiliary.moriarty": "even-index binomial sum with its closed form",
    "auxiliary.companion": "double binomial sum with its closed form",
    "auxiliary.recurrence": "three-term recurrence of the central values",
    "auxiliary.generating_function": "series coefficients vs direct evaluation",
    "auxiliary.parity_divisibility": "odd values and the two-power divisibility",
}


@dataclass(frozen=True)
class VerificationReport:
    """One executed check with the two compared values.

    Failed reports always carry a counterexample in detail.
    """

    check_name: str
    params: dict
    status: Status
    lhs: Value
    rhs: Value
    paper_ref: str
    detail: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status is Status.FAIL and not self.detail:
            raise InternalInvariantViolation(
                f"failed report {self.check_name} {self.params} lacks a detail"
            )


def _report(
    name: str,
    params: dict,
    status: Status,
    lhs: Value,
    rhs: Value,
    detail: Optional[str] = None,
) -> VerificationReport:
    return VerificationReport(name, params, status, lhs, rhs, CLAIM_REFS[name], detail)


def _compare(name: str, params: dict, lhs: Value, rhs: Value) -> VerificationReport:
    if lhs == rhs:
        return _report(name, params, Status.PASS, lhs, rhs)
    return _report(
        name, params, Status.FAIL, lhs, rhs, detail=f"mismatch: {lhs} != {rhs}"
    )


def _canonical(reports: list[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: (r.check_name, sorted(r.params.items())))


def summarize(reports: list[VerificationReport]) -> tuple[int, int, int]:
    """(passed, failed, skipped) counts."""
    passed = sum(1 for r in reports if r.status is Status.PASS)
    failed = sum(1 for r in reports if r.status is Status.FAIL)
    skipped = sum(1 for r in reports if r.status is Status.SKIPPED)
    return passed, failed, skipped


def report_to_json(report: VerificationReport) -> str:
    """One-line JSON record; key order and spacing are fixed."""
    payload = {
        "check_name": report.check_name,
        "params": report.params,
        "status": report.status.value,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "paper_ref": report.paper_ref,
        "detail": report.detail,
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def report_to_plain(report: VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    line = (
        f"{report.status.value.upper():<7} {report.check_name}"
        f" {params} lhs={report.lhs} rhs={report.rhs}"
    )
    if report.detail:
        line += f" detail: {report.detail}"
    return line


# ---------------------------------------------------------------------------
# theorem suite: the five sums agree, and at desk scale they equal the
# brute-force plus-class counts of both families.
# ---------------------------------------------------------------------------


def verify_theorem(
    m_max: int, enum_limit: int = 0, enum_limit_b: Optional[int] = None
) -> list[VerificationReport]:
    """Check the value chain S(m, r) = T = U = V = W at n = m - 1 - r.

    Runs over 2 <= m <= m_max and 0 <= r <= m/2 - 1. For m up to
    enum_limit the family-D plus-class count is compared too, and the
    family-B count whenever n = m - 1 - r stays within enum_limit_b
    (defaulting to enum_limit - 2 so that both boards stay comparable
    in size).
    """
    if m_max < 2:
        raise RangeError(f"need m_max >= 2, got {m_max}")
    if enum_limit_b is None:
        enum_limit_b = max(enum_limit - 2, 0)
    plus = ClassFilter(sign=SignClass.PLUS)
    reports = []
    for m in range(2, m_max + 1):
        for r in range(0, (m - 2) // 2 + 1):
            n = m - 1 - r
            s = eval_S(m, r)
            others = [eval_T(n, r), eval_U(n, r), eval_V(n, r), eval_W(n, r)]
            if all(o == s for o in others):
                reports.append(
                    _report("theorem.formulas", {"m": m, "r": r}, Status.PASS, s, others)
                )
            else:
                reports.append(
                    _report(
                        "theorem.formulas",
                        {"m": m, "r": r},
                        Status.FAIL,
                        s,
                        others,
                        detail=f"five-way agreement broken: {s} vs {others}",
                    )
                )
            if m <= enum_limit:
                counts = [count("D", m, r, plus, max_cells=enum_limit)]
                if n <= enum_limit_b:
                    counts.append(count("B", n, r, plus, max_cells=enum_limit_b))
                if all(c == s for c in counts):
                    reports.append(
                        _report(
                            "theorem.enumeration",
                            {"m": m, "r": r},
                            Status.PASS,
                            counts,
                            s,
                        )
                    )
                else:
                    reports.append(
                        _report(
                            "theorem.enumeration",
                            {"m": m, "r": r},
                            Status.FAIL,
                            counts,
                            s,
                            detail=f"enumeration disagrees with the sums: {counts} vs {s}",
                        )
                    )
    return _canonical(reports)


# ---------------------------------------------------------------------------
# lemma suite: conjugation properties and the almost-bijection census.
# ---------------------------------------------------------------------------


def _lemma_scan(n: int, r: int) -> dict:
    """Sweep the conjugation domain of B(n, r) once.

    Returns census counts, the exceptional encodings found, and the
    number of members failing the involution round trip (with a first
    counterexample).
    """
    q = n - r
    plus_odd = 0
    minus_even = 0
    exceptional: list[str] = []
    failures = 0
    first_failure: Optional[str] = None
    for w0, _, nonblack, smask in _b_layouts(n, r):
        odd = w0 % 2 == 1
        for f in range(1 << q):
            is_plus = bool(f & smask)
            if is_plus != odd:
                continue  # outside the conjugation domain
            if is_plus:
                plus_odd += 1
            else:
                minus_even += 1
            chars = ["b"] * n
            for j, c in enumerate(nonblack):
                chars[c] = "t" if (f >> j) & 1 else "w"
            enc = "".join(chars)
            try:
                kind, payload = _conjugate_enc(enc)
                if kind == "exceptional":
                    exceptional.append(enc)
                    continue
                if kind != "conjugate":
                    raise InternalInvariantViolation(
                        f"domain member {enc!r} reported {kind}"
                    )
                back_kind, back = _conjugate_enc(payload)
                if back_kind != "conjugate" or back != enc or len(payload) != n:
                    raise InternalInvariantViolation(
                        f"round trip broke: {enc!r} -> {payload!r} -> {back!r}"
                    )
            except InternalInvariantViolation as exc:
                failures += 1
                if first_failure is None:
                    first_failure = str(exc)
    return {
        "plus_odd": plus_odd,
        "minus_even": minus_even,
        "exceptional": exceptional,
        "failures": failures,
        "first_failure": first_failure,
    }


def verify_lemma(n_max: int) -> list[VerificationReport]:
    """Check the conjugation for all n <= n_max, r <= n - 1.

    Covers the census identity (the odd-weight plus class outnumbers the
    even-weight minus class by (-1)**(r+1)), the involution round trip
    with preserved n and r and flipped weight parity and sign, and the
    uniqueness and shape of the exceptional arrangement.
    """
    if n_max < 1:
        raise RangeError(f"need n_max >= 1, got {n_max}")
    reports = []
    for n in range(1, n_max + 1):
        for r in range(0, n):
            scan = _lemma_scan(n, r)
            params = {"n": n, "r": r}
            reports.append(
                _compare(
                    "lemma.cardinality",
                    params,
                    scan["plus_odd"],
                    scan["minus_even"] + (-1) ** (r + 1),
                )
            )
            if scan["failures"] == 0:
                reports.append(
                    _report("lemma.involution", params, Status.PASS, 0, 0)
                )
            else:
                reports.append(
                    _report(
                        "lemma.involution",
                        params,
                        Status.FAIL,
                        scan["failures"],
                        0,
                        detail=scan["first_failure"],
                    )
                )
            expected = _epsilon_enc(n, r, plus=(r % 2 == 1))
            if scan["exceptional"] == [expected]:
                reports.append(
                    _report(
                        "lemma.exception",
                        params,
                        Status.PASS,
                        1,
                        1,
                        detail=f"exception {expected}",
                    )
                )
            else:
                reports.append(
                    _report(
                        "lemma.exception",
                        params,
                        Status.FAIL,
                        len(scan["exceptional"]),
                        1,
                        detail=f"expected [{expected}], got {scan['exceptional']}",
                    )
                )
    return _canonical(reports)


# ---------------------------------------------------------------------------
# strata suite: every census stratum equals its summand, term by term.
# ---------------------------------------------------------------------------


def _strata_scan(n: int, r: int) -> dict:
    """One sweep of B(n, r) collecting all four censuses at once."""
    q = n - r
    last_dec = {j: 0 for j in range(r + 1, n + 1)}
    last_black = {j: 0 for j in range(1, n - r + 1)}
    non_white = {j: 0 for j in range(r + 1, n + 1)}
    weight_even = {k: 0 for k in range(0, r + 1, 2)}
    even_total = 0
    for w0, lb, nonblack, smask in _b_layouts(n, r):
        if w0 % 2 == 0:
            weight_even[w0] += 1 << q  # every filling shares the layout's weight
            even_total += 1 << q
        jb = n - 1 - lb
        for f in range(1 << q):
            if f & smask:
                last_dec[nonblack[f.bit_length() - 1] + 1] += 1
                non_white[r + f.bit_count()] += 1
                last_black[jb] += 1
    return {
        "last_dec": last_dec,
        "last_black": last_black,
        "non_white": non_white,
        "weight_even": weight_even,
        "even_total": even_total,
    }


def verify_strata(n_max: int) -> list[VerificationReport]:
    """Check every stratum count against its summand for n <= n_max.

    The last-black census is reported as skipped at r = 0, where the
    statistic is undefined and the closed form uses a pinned value.
    """
    if n_max < 1:
        raise RangeError(f"need n_max >= 1, got {n_max}")
    reports = []
    for n in range(1, n_max + 1):
        for r in range(0, n):
            scan = _strata_scan(n, r)
            params = {"n": n, "r": r}
            reports.append(
                _compare(
                    "strata.non_white",
                    params,
                    [scan["non_white"][j] for j in range(r + 1, n + 1)],
                    [binom(n, j) * binom(j - 1, r) for j in range(r + 1, n + 1)],
                )
            )
            reports.append(
                _compare(
                    "strata.last_decorated",
                    params,
                    [scan["last_dec"][j] for j in range(r + 1, n + 1)],
                    [binom(j - 1, r) << (j - 1 - r) for j in range(r + 1, n + 1)],
                )
            )
            if r == 0:
                reports.append(
                    _report(
                        "strata.last_black",
                        params,
                        Status.SKIPPED,
                        None,
                        None,
                        detail=(
                            "skipped: no last black cell at r = 0; the closed "
                            "form pins this case to 2**n - 1"
                        ),
                    )
                )
            else:
                reports.append(
                    _compare(
                        "strata.last_black",
                        params,
                        [scan["last_black"][j] for j in range(1, n - r + 1)],
                        [
                            binom(n - 1 - j, r - 1) * ((1 << (n - r - j)) * ((1 << j) - 1))
                            for j in range(1, n - r + 1)
                        ],
                    )
                )
            reports.append(
                _compare(
                    "strata.weight_even",
                    params,
                    [scan["weight_even"][k] for k in range(0, r + 1, 2)],
                    [binom(n - 2 - 2 * k, r - 2 * k) << (n - r) for k in range(0, r // 2 + 1)],
                )
            )
            reports.append(
                _compare(
                    "strata.even_count",
                    params,
                    eval_T(n, r),
                    scan["even_total"] + (-1) ** (r + 1),
                )
            )
    return _canonical(reports)


# ---------------------------------------------------------------------------
# auxiliary suite: the side identities around the main chain.
# ---------------------------------------------------------------------------


def verify_auxiliary(
    moriarty_max: int = 30,
    companion_max: int = 30,
    recurrence_max: int = 12,
    gf_r_max: int = 8,
    gf_m_max: int = 40,
    parity_max: int = 60,
) -> list[VerificationReport]:
    """Check the standalone identities over their stated ranges."""
    if min(moriarty_max, companion_max, recurrence_max, gf_r_max, gf_m_max, parity_max) < 1:
        raise RangeError("all limits must be positive")
    reports = []
    for m in range(1, moriarty_max + 1):
        for r in range(0, m // 2 + 1):
            if m > r:
                lhs, rhs = moriarty(m, r)
                reports.append(_compare("auxiliary.moriarty", {"m": m, "r": r}, lhs, rhs))
    for n in range(0, companion_max + 1):
        for r in range(0, n + 1):
            lhs, rhs = companion_identity(n, r)
            reports.append(_compare("auxiliary.companion", {"n": n, "r": r}, lhs, rhs))
    for n in range(1, recurrence_max + 1):
        reports.append(
            _compare("auxiliary.recurrence", {"n": n}, recurrence_residual(n), 0)
        )
    for r in range(0, gf_r_max + 1):
        coeffs = gf_coefficients(r, gf_m_max)
        # index 0 is the empty sum; eval_S is defined from m = 1 on
        direct = [0] + [eval_S(m, r) for m in range(1, gf_m_max + 1)]
        reports.append(
            _compare("auxiliary.generating_function", {"r": r, "m_max": gf_m_max}, coeffs, direct)
        )
    for m in range(2, parity_max + 1):
        for r in range(0, (m - 2) // 2 + 1):
            is_odd, div_ok = oddness_and_divisibility(m, r)
            reports.append(
                _compare(
                    "auxiliary.parity_divisibility",
                    {"m": m, "r": r},
                    [int(is_odd), int(div_ok)],
                    [1, 1],
                )
            )
    return _canonical(reports)


def verify_all(
    m_max: int = 200,
    enum_limit: int = 12,
    n_max: int = 12,
) -> list[VerificationReport]:
    """Run every suite at the given limits, suites in fixed order."""
    reports = []
    reports.extend(verify_theorem(m_max, enum_limit))
    reports.extend(verify_lemma(n_max))
    reports.extend(verify_strata(n_max))
    reports.extend(verify_auxiliary())
    return reports
