import pytest

from permgrowth.perms import (
    ALTERNATION_KINDS,
    Permutation,
    all_permutations,
    children,
    contains,
    direct_sum,
    increasing_oscillation,
    inflate,
    inversion_graph,
    is_sum_indecomposable,
    monotone_quotient,
    parse_permutation,
    skew_sum,
    split_end_member,
    standardize,
    sum_components,
    vertical_alternation,
)


def P(text):
    return parse_permutation(text)


def test_parse_and_str_round_trip():
    for text in ("1", "2 1", "3 1 4 6 2 5", "10 1 2 3 4 5 6 7 8 9"):
        assert str(P(text)) == text


def test_parse_rejects_non_permutations():
    for bad in ("1 1", "0 1", "2 4 3"):
        with pytest.raises(ValueError):
            P(bad)


def test_standardize():
    assert standardize([17, 3, 9]) == P("3 1 2")
    assert standardize([]) == Permutation(())


def test_contains_basics():
    assert contains(P("2 1"), P("3 1 2"))
    assert not contains(P("1 2 3"), P("3 2 1"))
    assert contains(P("2 3 1"), P("3 5 1 4 2"))
    # every permutation contains itself and the singleton
    w = P("3 1 4 6 2 5")
    assert contains(w, w)
    assert contains(P("1"), w)


def test_sum_indecomposable_counts():
    # 1, 1, 3, 13, 71 at lengths 1..5
    got = [
        sum(1 for p in all_permutations(n) if is_sum_indecomposable(p))
        for n in range(1, 6)
    ]
    assert got == [1, 1, 3, 13, 71]


def test_sum_indecomposable_matches_inversion_graph_connectivity():
    for n in range(1, 7):
        for p in all_permutations(n):
            g = inversion_graph(p)
            assert is_sum_indecomposable(p) == g.is_connected()


def test_direct_sum_and_components_round_trip():
    a, b, c = P("2 3 1"), P("1"), P("2 1")
    s = direct_sum(direct_sum(a, b), c)
    assert sum_components(s) == [a, b, c]
    assert not is_sum_indecomposable(s)
    assert is_sum_indecomposable(skew_sum(b, b))


def test_children_of_increasing():
    assert children(P("1 2 3")) == frozenset({P("1 2")})
    assert children(P("2 3 1"), indecomposable_only=True) == frozenset(
        {P("2 1")}
    )


def test_monotone_quotient_blocks():
    d = monotone_quotient(P("3 4 5 2 1"))
    assert d.quotient == P("2 1")
    assert d.blocks == (3, -2)


def test_increasing_oscillation_closed_form():
    assert increasing_oscillation(1) == P("1")
    assert increasing_oscillation(2) == P("2 1")
    assert increasing_oscillation(3, primary=True) == P("2 3 1")
    assert increasing_oscillation(3, primary=False) == P("3 1 2")
    assert increasing_oscillation(7) == P("2 4 1 6 3 7 5")
    # sum indecomposable, and the inversion graph is a path (max degree 2)
    for n in range(3, 12):
        for primary in (True, False):
            o = increasing_oscillation(n, primary)
            assert is_sum_indecomposable(o)
            g = inversion_graph(o)
            assert all(len(g.neighbors(v)) <= 2 for v in range(1, n + 1))


def test_split_end_members_form_an_antichain():
    ws = [split_end_member(n, "Uo") for n in (7, 9, 11, 13)]
    for w in ws:
        assert is_sum_indecomposable(w)
    for i, a in enumerate(ws):
        for b in ws[i + 1:]:
            assert not contains(a, b)
            assert not contains(b, a)


def test_split_end_member_lengths_and_variants():
    for n in (7, 9, 11):
        for variant in ("Uo", "Uo_inverse"):
            assert len(split_end_member(n, variant)) == n
    with pytest.raises(ValueError):
        split_end_member(7, "bogus")


def test_vertical_alternations():
    for kind in ALTERNATION_KINDS:
        for n in (4, 6, 8):
            v = vertical_alternation(n, kind)
            assert len(v) == n
            # odd-position entries separated from even-position entries
            odd = set(v.entries[0::2])
            even = set(v.entries[1::2])
            assert max(odd) < min(even) or min(odd) > max(even)


def test_inflate():
    assert inflate(P("2 1"), [P("1 2"), P("1")]) == P("2 3 1")
    assert inflate(P("1"), [P("3 1 2")]) == P("3 1 2")
