"""Exhaustive enumeration against independent brute force and closed forms."""

from itertools import product

import pytest

from lastsquares import (
    ClassFilter,
    RangeError,
    SignClass,
    SizeLimitExceeded,
    StratumKind,
    WeightParity,
    binom,
    count,
    encode,
    enumerate_B,
    enumerate_D,
    eval_S,
    eval_T,
    list_encodings,
    stratify,
)

PLUS = ClassFilter(sign=SignClass.PLUS)
MINUS = ClassFilter(sign=SignClass.MINUS)


# -- independent oracle: generate-then-filter over all cell strings --------


def brute_B(n, r):
    return sorted(
        "".join(p)
        for p in product("btw", repeat=n)
        if p.count("b") == r and p[-1] != "b"
    )


def brute_D(m, r):
    out = []

    def rec(s, cells):
        if cells == m:
            if s.count("d") == r:
                out.append(s)
            return
        if cells == 0:
            rec("b", 1)
            return
        for ch, width in (("b", 1), ("d", 2), ("w", 1)):
            if cells + width <= m:
                rec(s + ch, cells + width)

    rec("", 0)
    return sorted(out)


def brute_weight(enc):
    k = 0
    i = len(enc) - 2
    while i >= 0 and enc[i] == "b":
        k += 1
        i -= 1
    return k


def brute_plus_b(enc):
    return "t" in enc[enc.rfind("b") + 1 :]


def brute_plus_d(enc):
    return "w" in enc[enc.rfind("d") + 1 :]


def test_enumerate_B_matches_brute_force():
    for n in range(1, 8):
        for r in range(0, n):
            got = [encode(a) for a in enumerate_B(n, r)]
            want = brute_B(n, r)
            assert got == want  # same members, lexicographic, no duplicates


def test_enumerate_D_matches_brute_force():
    for m in range(1, 10):
        for r in range(0, (m - 1) // 2 + 1):
            got = [encode(a) for a in enumerate_D(m, r)]
            want = brute_D(m, r)
            assert got == want


def test_totals_match_closed_forms():
    for n in range(1, 13):
        for r in range(0, n):
            assert count("B", n, r) == binom(n - 1, r) * 2 ** (n - r)
    for m in range(1, 15):
        for r in range(0, (m - 1) // 2 + 1):
            assert count("D", m, r) == binom(m - 1 - r, r) * 2 ** (m - 1 - 2 * r)
    for m in range(1, 15):
        assert count("D", m, 0) == 2 ** (m - 1)


def test_enumeration_examples():
    assert list_encodings("D", 2, 0) == ["bb", "bw"]
    assert list_encodings("D", 4, 1, PLUS) == ["bdw"]
    assert count("D", 6, 1, PLUS) == 17 == eval_S(6, 1)
    assert list_encodings("B", 2, 0) == ["tt", "tw", "wt", "ww"]
    assert count("B", 2, 0) == 4
    assert count("B", 2, 0, PLUS) == 3 == eval_T(2, 0)
    assert count("B", 4, 1, PLUS) == 17 == eval_T(4, 1)
    assert count("B", 4, 1) == 24


def test_count_with_weight_filters():
    odd_plus = ClassFilter(sign=SignClass.PLUS, weight_parity=WeightParity.ODD)
    even_minus = ClassFilter(sign=SignClass.MINUS, weight_parity=WeightParity.EVEN)
    assert count("B", 2, 1, odd_plus) == 1  # only "bt"
    assert count("B", 2, 1, even_minus) == 0
    exact = ClassFilter(exact_weight=2)
    assert count("B", 4, 2, exact) == sum(
        1 for e in brute_B(4, 2) if brute_weight(e) == 2
    )


def test_filters_match_brute_force_classification():
    for n in range(1, 8):
        for r in range(0, n):
            encs = brute_B(n, r)
            assert count("B", n, r, PLUS) == sum(1 for e in encs if brute_plus_b(e))
            assert count("B", n, r, MINUS) == sum(
                1 for e in encs if not brute_plus_b(e)
            )
            for parity in (WeightParity.EVEN, WeightParity.ODD):
                filt = ClassFilter(weight_parity=parity)
                assert count("B", n, r, filt) == sum(
                    1 for e in encs if brute_weight(e) % 2 == parity.value
                )
    for m in range(1, 10):
        for r in range(0, (m - 1) // 2 + 1):
            encs = brute_D(m, r)
            assert count("D", m, r, PLUS) == sum(1 for e in encs if brute_plus_d(e))


def test_sign_classes_partition_everything():
    for n in range(1, 11):
        for r in range(0, n):
            assert count("B", n, r, PLUS) + count("B", n, r, MINUS) == count("B", n, r)
    for m in range(1, 13):
        for r in range(0, (m - 1) // 2 + 1):
            assert count("D", m, r, PLUS) + count("D", m, r, MINUS) == count("D", m, r)


def test_count_equals_enumeration_length():
    cases = [
        ("B", 7, 2, None),
        ("B", 7, 2, PLUS),
        ("B", 8, 3, ClassFilter(weight_parity=WeightParity.ODD)),
        ("B", 6, 1, ClassFilter(sign=SignClass.MINUS, exact_weight=0)),
        ("D", 9, 2, None),
        ("D", 9, 2, PLUS),
    ]
    for family, size, r, filt in cases:
        it = enumerate_B(size, r, filt) if family == "B" else enumerate_D(size, r, filt)
        assert count(family, size, r, filt) == sum(1 for _ in it)


def test_plus_counts_equal_sums_up_to_guard():
    for m in range(1, 21):
        for r in range(0, (m - 1) // 2 + 1):
            assert count("D", m, r, PLUS) == eval_S(m, r)
    for n in range(1, 15):
        for r in range(0, n):
            assert count("B", n, r, PLUS) == eval_T(n, r)


def test_stratify_examples():
    assert stratify(4, 1, StratumKind.LAST_DECORATED) == {2: 1, 3: 4, 4: 12}
    assert stratify(4, 1, StratumKind.LAST_BLACK) == {1: 4, 2: 6, 3: 7}
    assert stratify(4, 2, StratumKind.WEIGHT) == {0: 4, 2: 4}
    assert stratify(4, 1, StratumKind.NON_WHITE) == {
        j: binom(4, j) * binom(j - 1, 1) for j in (2, 3, 4)
    }
    assert stratify(3, 2, StratumKind.WEIGHT) == {0: 0, 2: 2}


def test_stratify_against_brute_force():
    for n in range(1, 9):
        for r in range(0, n):
            encs = brute_B(n, r)
            plus = [e for e in encs if brute_plus_b(e)]
            got = stratify(n, r, StratumKind.LAST_DECORATED)
            want = {j: 0 for j in range(r + 1, n + 1)}
            for e in plus:
                want[e.rfind("t") + 1] += 1
            assert got == want
            got = stratify(n, r, StratumKind.NON_WHITE)
            want = {j: 0 for j in range(r + 1, n + 1)}
            for e in plus:
                want[len(e) - e.count("w")] += 1
            assert got == want
            if r >= 1:
                got = stratify(n, r, StratumKind.LAST_BLACK)
                want = {j: 0 for j in range(1, n - r + 1)}
                for e in plus:
                    want[n - (e.rfind("b") + 1)] += 1
                assert got == want
            got = stratify(n, r, StratumKind.WEIGHT)
            want = {k: 0 for k in range(0, r + 1, 2)}
            for e in encs:
                w = brute_weight(e)
                if w % 2 == 0:
                    want[w] += 1
            assert got == want


def test_strata_partition_the_scoped_sets():
    for n in range(1, 11):
        for r in range(0, n):
            plus_total = count("B", n, r, PLUS)
            assert sum(stratify(n, r, StratumKind.LAST_DECORATED).values()) == plus_total
            assert sum(stratify(n, r, StratumKind.NON_WHITE).values()) == plus_total
            if r >= 1:
                assert sum(stratify(n, r, StratumKind.LAST_BLACK).values()) == plus_total
            odd_count = count("B", n, r, ClassFilter(weight_parity=WeightParity.ODD))
            assert (
                sum(stratify(n, r, StratumKind.WEIGHT).values()) + odd_count
                == count("B", n, r)
            )


def test_stratify_last_black_rejects_r_zero():
    with pytest.raises(RangeError):
        stratify(5, 0, StratumKind.LAST_BLACK)


def test_class_filter_consistency():
    with pytest.raises(ValueError):
        ClassFilter(weight_parity=WeightParity.EVEN, exact_weight=3)
    with pytest.raises(ValueError):
        ClassFilter(exact_weight=-1)
    ClassFilter(weight_parity=WeightParity.ODD, exact_weight=3)  # consistent


def test_weight_filters_rejected_for_family_D():
    filt = ClassFilter(weight_parity=WeightParity.EVEN)
    with pytest.raises(ValueError):
        count("D", 6, 1, filt)
    with pytest.raises(ValueError):
        list(enumerate_D(6, 1, filt))


def test_range_errors():
    with pytest.raises(RangeError):
        list(enumerate_B(0, 0))
    with pytest.raises(RangeError):
        list(enumerate_B(3, 3))
    with pytest.raises(RangeError):
        list(enumerate_D(4, 2))  # needs 2r <= m - 1
    with pytest.raises(RangeError):
        count("B", 2, -1)
    with pytest.raises(ValueError):
        count("X", 2, 0)


def test_size_guards_and_overrides(monkeypatch):
    with pytest.raises(SizeLimitExceeded):
        list(enumerate_B(17, 0))
    with pytest.raises(SizeLimitExceeded):
        count("D", 25, 0)
    # per-call override
    assert count("B", 17, 16, max_cells=17) == 2**1 * binom(16, 16)
    # environment override applies to both families
    monkeypatch.setenv("LASTSQ_MAX_CELLS", "18")
    assert count("B", 17, 16) == 2
    monkeypatch.setenv("LASTSQ_MAX_CELLS", "10")
    with pytest.raises(SizeLimitExceeded):
        count("B", 11, 0)


def test_determinism_two_runs_identical():
    first = list_encodings("B", 8, 2, PLUS)
    second = list_encodings("B", 8, 2, PLUS)
    assert first == second
    assert first == sorted(first)
    assert len(set(first)) == len(first)


def test_parallel_listing_matches_sequential():
    for family, size, r, filt in [
        ("B", 9, 2, None),
        ("B", 9, 2, PLUS),
        ("D", 10, 2, None),
        ("D", 10, 2, MINUS),
        ("B", 1, 0, None),
    ]:
        seq = list_encodings(family, size, r, filt, jobs=1)
        par = list_encodings(family, size, r, filt, jobs=3)
        assert par == seq
        assert count(family, size, r, filt, jobs=3) == len(seq)


def test_enumerators_yield_valid_objects():
    for arr in enumerate_B(5, 2):
        assert arr.n == 5 and arr.r == 2
    for arr in enumerate_D(6, 2):
        assert arr.m == 6 and arr.r == 2
