import random

import pytest

from permgrowth.algebraics import AlgebraicNumber, compare, xi
from permgrowth.classes import census
from permgrowth.sequences import (
    SumSequence,
    class_gf_of_sequence,
    classify,
    dominates,
    gf_of_sequence,
    growth_rate_of_sequence,
    is_legal,
    position_vs_xi,
    realize,
)
from fractions import Fraction


def S(text):
    return SumSequence.parse(text)


def test_canonical_form():
    assert S("1,1,2,3,4,4,(4)") == S("1,1,2,3,(4)")
    assert S("1,1,2,5,2,1,0,0") == S("1,1,2,5,2,1")
    assert S("1,(5,4,5,4)") == S("1,(5,4)")
    assert str(S("1,1,2,3,(4)")) == "1,1,2,3,(4)"
    assert S(str(S("1,1,2,3,4,4,(5,4)"))) == S("1,1,2,3,4,4,(5,4)")


def test_terms():
    s = S("1,1,2,3,(5,4)")
    assert s.terms(9) == [1, 1, 2, 3, 5, 4, 5, 4, 5]
    assert S("1,1").terms(4) == [1, 1, 0, 0]


def test_rejects_negative_counts():
    with pytest.raises(ValueError):
        SumSequence([1, -1])


def test_is_legal_frozen_cases():
    # note 1,1,2,6 and 1,1,3,14 pass the raw legality caps; counting
    # arguments rule them out only at classification time
    legal = ["1,1,3", "1,1,2,5", "1,(1)", "1,1,3,13,71", "1,1,2,3,(4)", "",
             "1,1,2,6", "1,1,3,14"]
    illegal = ["2", "1,2", "0,1", "1,1,4",
               "1,1,1,2",      # drop to 1 at length >= 3 is permanent
               "1,1,2,2,3",    # drop to 2 at length >= 4 is permanent
               "1,1,3,3,3,4"]  # drop to 3 at length >= 5 is permanent
    for text in legal:
        assert is_legal(S(text)), text
    for text in illegal:
        assert not is_legal(S(text)), text


def test_dominates():
    # dominates(r, t) holds when r sits below t pointwise
    assert dominates(S("1,1,2,3,(4)"), S("1,1,3,5,(5)"))
    assert not dominates(S("1,1,3,5,(5)"), S("1,1,2,3,(4)"))
    assert dominates(S("1,1,2"), S("1,1,2"))
    assert dominates(S("1,1,2"), S("1,1,3"))
    assert dominates(S("1,1,2,3"), S("1,1,2,(3)"))
    assert not dominates(S("1,1,2,(3)"), S("1,1,2,3"))


def test_gf_of_sequence():
    # all-ones counts: g = x / (1 - x)
    g = gf_of_sequence(S("1,(1)"))
    assert g.series(6) == [0, 1, 1, 1, 1, 1, 1]
    # the class generating function is 1 / (1 - g)
    f = class_gf_of_sequence(S("1,(1)"))
    assert f.series(8) == [1, 1, 2, 4, 8, 16, 32, 64, 128]


def test_growth_rate_of_sequence():
    two = AlgebraicNumber.from_rational(Fraction(2))
    assert compare(growth_rate_of_sequence(S("1,(1)")), two) == 0
    assert compare(growth_rate_of_sequence(S("1,1,2,3,(4)")), xi()) == 0
    assert compare(growth_rate_of_sequence(S("1,1,2,4,3,3,2,1")), xi()) == 0


def test_position_vs_xi():
    assert position_vs_xi(growth_rate_of_sequence(S("1,(1)"))) == "below_xi"
    assert position_vs_xi(growth_rate_of_sequence(S("1,1,2,3,(4)"))) == "equal_xi"
    assert position_vs_xi(growth_rate_of_sequence(S("1,1,3,5,(5)"))) == "above_xi"


CLASSIFY_CASES = [
    # (sequence, legal, realizable, reason fragment, position)
    ("1,1,2,3,(4)", True, "yes", "wide", "equal_xi"),
    ("1,(1)", True, "yes", "wide", "below_xi"),
    ("1,1,2,4,5", True, "yes", "wide", "above_xi"),
    ("1,1,2,5,2,1", True, "yes", "wide", "below_xi"),
    ("1,1,2,3,4,4,5,(4)", True, "yes", "narrow", "above_xi"),
    ("1,1,2,3,4,4,4,5,(4)", True, "no", "even-indexed", "above_xi"),
    ("1,1,2,3,4,4,5,1,1", True, "no", "consecutive entries equal to 1", "below_xi"),
    ("1,1,2,3,4,4,5,6,(4)", True, "no", "outside the characterized region", "above_xi"),
    ("1,1,3,5,(5)", True, "no", "outside the characterized region", "above_xi"),
    ("1,1,2,6", True, "no", "at most 5", "below_xi"),
    ("2,1", False, "no", "illegal", None),
    ("1,2", False, "no", "illegal", None),
]


@pytest.mark.parametrize("text,legal,realizable,fragment,position", CLASSIFY_CASES)
def test_classify_frozen_cases(text, legal, realizable, fragment, position):
    v = classify(S(text))
    assert v.legal == legal
    assert v.realizable == realizable
    assert fragment in (v.reason or "")
    assert v.position == position


def test_classify_verdict_serializes():
    doc = classify(S("1,1,2,3,(4)")).to_dict()
    assert doc["realizable"] == "yes"
    assert doc["growth"] == "2.305224"


@pytest.mark.parametrize(
    "text,check_to",
    [
        ("1,1,2,3,(4)", 9),
        ("1,1,2,5,2,1", 9),
        ("1,1,2,3,4,5", 9),
        ("1,(1)", 9),
    ],
)
def test_realize_census_reproduces_sequence(text, check_to):
    s = S(text)
    r = realize(s)
    assert census(r.spec, check_to).si_sequence() == s.terms(check_to)


@pytest.mark.slow
def test_realize_narrow_spike():
    s = S("1,1,2,3,4,4,5,(4)")
    r = realize(s)
    assert r.kind == "narrow"
    assert census(r.spec, 10).si_sequence() == s.terms(10)


def _random_realizable(rng):
    # sample inside the wide-template domination region, support <= 10
    caps = [1, 1, 3, 5, 5, 5] + [4] * 4
    length = rng.randint(2, 10)
    prefix = [min(caps[i], rng.randint(1, 5)) for i in range(length)]
    prefix[0] = prefix[1] = 1
    tail = (prefix[-1],) if rng.random() < 0.5 and length >= 6 else ()
    s = SumSequence(prefix, tail)
    return s if classify(s).realizable == "yes" else None


@pytest.mark.slow
def test_realize_random_samples():
    rng = random.Random(112344)
    seen = set()
    checked = 0
    while checked < 30:
        s = _random_realizable(rng)
        if s is None or s in seen:
            continue
        seen.add(s)
        checked += 1
        r = realize(s)
        assert census(r.spec, 10).si_sequence() == s.terms(10), str(s)


def test_census_sequences_are_legal():
    # sum indecomposable count sequences of actual classes are legal
    from permgrowth.classes import spec_from_strs

    for basis in (
        ("3 2 1",),
        ("2 3 1", "4 3 1 2", "4 3 2 1"),
        ("3 2 1", "3 4 1 2", "4 1 2 3"),
    ):
        seq = census(spec_from_strs(*basis), 8).si_sequence()
        assert is_legal(SumSequence(seq))
