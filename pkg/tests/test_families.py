import itertools

import pytest

from paltriples.digits import concat_copies, is_palindrome, render_template
from paltriples.families import (
    FamilyId,
    check_member,
    f_multiplier,
    member,
    members,
    pattern_check,
    ppt1_s_values,
)
from paltriples.triples import Triple, is_primitive, profile


def test_f_multiplier():
    assert [f_multiplier(n) for n in range(3)] == [1, 101, 10101]
    for n in range(60):
        assert f_multiplier(n) == (100 ** (n + 1) - 1) // 99


def test_ppt1_s_values_start():
    assert list(ppt1_s_values(3)) == [4, 22, 44]


def test_ppt1_s_values_against_enumeration():
    oracle = [
        n
        for n in range(3, 100_000)
        if n % 2 == 0 and str(n) == str(n)[::-1] and set(str(n)) <= set("01234") and n != 2
    ]
    got = list(itertools.takewhile(lambda s: s < 100_000, ppt1_s_values()))
    assert got == oracle
    assert 212 in got
    assert 121 not in got and 262 not in got


@pytest.mark.parametrize(
    "fam, n, expected, pal_count",
    [
        ("NPPT-2A", 1, (363, 484, 605), 2),
        ("NPPT-1B", 2, (99, 132, 165), 1),
        ("NPPT-2B", 2, (66, 88, 110), 2),
        ("NPPT-3", 3, (333, 444, 555), 3),
        ("NPPT-1A", 1, (1111, 6060, 6161), 1),
        ("NPPT-2A", 2, (30603, 40804, 51005), 2),
    ],
)
def test_member_examples(fam, n, expected, pal_count):
    m = member(fam, n)
    assert m.triple.components == expected
    assert m.declared_pal_count == pal_count
    assert profile(m.triple).count == pal_count
    assert pattern_check(m)


def test_nppt1b_pattern_text():
    m = member("NPPT-1B", 2)
    assert [str(p) for p in m.predicted_pattern] == ["9_2", "1 3 2", "1 6 5"]


def test_ppt1_second_member():
    m = member("PPT-1", 2)
    assert m.s == 22
    assert m.triple.components == (483, 44, 485)
    assert profile(m.triple).flags == (False, True, False)
    assert m.primitive and pattern_check(m)


def test_index_zero():
    m = member("NPPT-1A", 0)
    assert m.triple.components == (11, 60, 61)
    assert m.primitive and pattern_check(m)
    for fam in FamilyId:
        if fam is not FamilyId.NPPT_1A:
            with pytest.raises(ValueError):
                member(fam, 0)


def test_nppt3_first_member_is_primitive():
    m = member("NPPT-3", 1)
    assert m.triple == Triple(3, 4, 5)
    assert m.primitive
    report = check_member(m)
    assert report.templates_match and report.ok


def test_pattern_check_detects_tampering():
    m = member("NPPT-2A", 3)
    bad = type(m)(m.family, m.index, m.triple, (m.predicted_pattern[0], m.predicted_pattern[0], m.predicted_pattern[2]),
                  m.declared_pal_count, m.primitive)
    assert not pattern_check(bad)
    wrong_count = type(m)(m.family, m.index, m.triple, m.predicted_pattern, 3, m.primitive)
    assert not pattern_check(wrong_count)


def test_nppt1a_equals_concatenation():
    for n in range(51):
        m = member("NPPT-1A", n)
        assert m.triple.components == (concat_copies(11, n), concat_copies(60, n), concat_copies(61, n))


@pytest.mark.parametrize("fam", list(FamilyId))
def test_families_first_50(fam):
    start = 0 if fam is FamilyId.NPPT_1A else 1
    for m in members(fam, start, 51 - start):
        t = m.triple
        assert t.a**2 + t.b**2 == t.c**2
        for tpl, value in zip(m.predicted_pattern, t):
            if tpl is not None:
                assert render_template(tpl) == value
        assert check_member(m).ok, check_member(m).mismatches


def test_nontrivial_nppt_members_not_primitive():
    for fam in FamilyId:
        if fam is FamilyId.PPT_1:
            continue
        for n in range(2, 51):
            assert not is_primitive(member(fam, n).triple)
    assert not member("NPPT-1B", 1).primitive
    assert not member("NPPT-2B", 1).primitive
    assert not member("NPPT-2A", 1).primitive


def test_ppt1_odd_leg_and_hypotenuse_not_both_palindromes():
    # the hypotenuse exceeds the odd leg by 2
    for n in range(1, 201):
        m = member("PPT-1", n)
        a, b, c = m.triple
        assert c - a == 2
        assert is_palindrome(b)
        assert not (is_palindrome(a) and is_palindrome(c))
