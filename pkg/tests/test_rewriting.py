import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plactic.core import column_ge, iter_columns, tableau_of_word
from plactic.errors import ParseError, ResourceLimit, ViolationFound
from plactic.rewriting import (
    RewritingSystem,
    all_columns,
    check_termination,
    critical_pairs,
    decode_word,
    encode_word,
    format_cword,
    generate_rules,
    gsb_export,
    gsb_json,
    gsb_text,
    is_normal_form,
    normalize,
    parse_cword,
    product_columns,
    rewrite_step,
    rules_json,
    rules_text,
    word_less,
)

import oracles

# derived once from the incomparable-pair enumeration below and frozen
RULE_COUNTS = {1: 0, 2: 3, 3: 22, 4: 115, 5: 531}


def test_all_columns():
    assert all_columns(1) == [(1,)]
    assert all_columns(2) == [(1,), (2,), (2, 1)]
    assert len(all_columns(3)) == 7


def test_product_columns():
    assert product_columns((2,), (1,)) == ((2, 1),)
    assert product_columns((1,), (2, 1)) == ((2, 1), (1,))
    assert product_columns((2, 1), (1,)) is None


def test_generate_rules_rank2_exact():
    rs = generate_rules(2)
    assert rs.rules == {
        ((2,), (1,)): ((2, 1),),
        ((1,), (2, 1)): ((2, 1), (1,)),
        ((2,), (2, 1)): ((2, 1), (2,)),
    }


def test_rule_counts_match_incomparable_pairs():
    for n, expected in RULE_COUNTS.items():
        cols = list(iter_columns(n))
        incomparable = sum(
            1 for a in cols for b in cols if not column_ge(a, b)
        )
        rs = generate_rules(n)
        assert len(rs.rules) == incomparable == expected


def test_rule_shape_invariants():
    for n in range(1, 5):
        for (a, b), rhs in generate_rules(n).rules.items():
            assert not column_ge(a, b)
            assert 1 <= len(rhs) <= 2
            if len(rhs) == 2:
                assert len(rhs[0]) > len(a)
            assert sorted(x for c in rhs for x in c) == sorted(a + b)


def test_generate_rules_budget():
    with pytest.raises(ResourceLimit):
        generate_rules(12, pair_budget=1000)


def test_word_less():
    assert word_less(((2, 1),), ((2,), (1,)))  # shorter first
    assert word_less(((2, 1), (1,)), ((1,), (2, 1)))  # longer subscript first
    assert not word_less(((2, 1),), ((2, 1),))


def test_rewrite_step():
    rs = generate_rules(2)
    assert rewrite_step(((2,), (1,)), rs) == ((2, 1),)
    assert rewrite_step(((1,), (2, 1), (1,)), rs) == ((2, 1), (1,), (1,))
    assert rewrite_step(((2, 1), (1,)), rs) is None


def test_normalize_examples():
    rs = generate_rules(2)
    assert normalize(((1,), (2,), (1,)), rs) == ((2, 1), (1,))
    assert normalize((), rs) == ()
    assert normalize(((2, 1), (1,)), rs) == ((2, 1), (1,))


def test_normalize_agrees_with_tableaux():
    for n in (1, 2, 3):
        rs = generate_rules(n)
        for w in oracles.all_words(n, 6):
            nf = normalize(encode_word(w), rs)
            assert decode_word(nf) == tableau_of_word(w).column_reading()
            assert sorted(decode_word(nf)) == sorted(w)


def test_normal_form_iff_chained():
    rs = generate_rules(3)
    cols = list(iter_columns(3))
    for w in itertools.product(cols, repeat=3):
        chained = all(column_ge(w[i], w[i + 1]) for i in range(2))
        assert is_normal_form(w, rs) == chained


def test_termination_certificate():
    for n in range(1, 6):
        cert = check_termination(generate_rules(n))
        assert cert.rule_count == RULE_COUNTS[n]


def test_termination_rank6():
    cert = check_termination(generate_rules(6))
    assert cert.rule_count == (2**6 - 1) ** 2 - sum(
        1 for a in iter_columns(6) for b in iter_columns(6) if column_ge(a, b)
    )


def test_termination_violation():
    bad = RewritingSystem(2, {((2, 1), (2, 1)): ((2,), (1,), (2, 1))})
    with pytest.raises(ViolationFound):
        check_termination(bad)


def test_critical_pairs_converge():
    for n in range(1, 5):
        overlaps = critical_pairs(generate_rules(n))
        assert all(o.converged for o in overlaps)
        if n == 1:
            assert overlaps == []


def test_critical_pair_results_match_tableaux():
    rs = generate_rules(3)
    for o in critical_pairs(rs):
        word = decode_word(o.word)
        assert decode_word(o.left_result) == tableau_of_word(word).column_reading()


def test_gsb_export_rank2():
    basis = gsb_export(generate_rules(2))
    assert len(basis.elements) == 3
    assert gsb_text(basis) == (
        "order: deglex; symbol order: |subscript| desc, then lex\n"
        "c[1]*c[21] - c[21]*c[1]\n"
        "c[2]*c[21] - c[21]*c[2]\n"
        "c[2]*c[1] - c[21]\n"
    )


def test_gsb_bijection_and_order():
    for n in (2, 3):
        rs = generate_rules(n)
        basis = gsb_export(rs)
        assert len(basis.elements) == len(rs.rules)
        for el in basis.elements:
            assert rs.rules[el.leading] == el.trailing
            assert word_less(el.trailing, el.leading)
            assert el.leading_coeff == 1 and el.trailing_coeff == -1


def test_gsb_empty_rank1():
    basis = gsb_export(generate_rules(1))
    assert basis.elements == ()
    assert gsb_text(basis) == "order: deglex; symbol order: |subscript| desc, then lex\n"


def test_gsb_json_stable():
    a = json.dumps(gsb_json(gsb_export(generate_rules(3))), sort_keys=True)
    b = json.dumps(gsb_json(gsb_export(generate_rules(3))), sort_keys=True)
    assert a == b


def test_encode_decode():
    assert encode_word((1, 2, 1)) == ((1,), (2,), (1,))
    assert decode_word(((2, 1), (1,))) == (2, 1, 1)
    for w in oracles.all_words(3, 5):
        assert decode_word(encode_word(w)) == w


def test_cword_parsing():
    assert parse_cword("c:21,1", 2) == ((2, 1), (1,))
    assert parse_cword("c:", 2) == ()
    assert parse_cword("c:10.2,1", 12) == ((10, 2), (1,))
    assert format_cword(((2, 1), (1,)), 2) == "c_21 c_1"
    with pytest.raises(ParseError):
        parse_cword("c:12", 2)  # not strictly decreasing


def test_rules_exports():
    rs = generate_rules(2)
    data = rules_json(rs)
    assert data["rank"] == 2
    assert {"lhs": ["2", "1"], "rhs": ["21"]} in data["rules"]
    text = rules_text(rs)
    assert "c[2] c[1] -> c[21]" in text


@st.composite
def cwords(draw, rank=4, max_len=6):
    cols = all_columns(rank)
    return tuple(draw(st.sampled_from(cols)) for _ in range(draw(st.integers(0, max_len))))


RS4 = generate_rules(4)


@settings(max_examples=120, deadline=None)
@given(cwords())
def test_normalize_properties_random(w):
    nf = normalize(w, RS4)
    assert is_normal_form(nf, RS4)
    assert all(column_ge(nf[i], nf[i + 1]) for i in range(len(nf) - 1))
    assert sorted(decode_word(nf)) == sorted(decode_word(w))
    assert decode_word(nf) == tableau_of_word(decode_word(w)).column_reading()


@settings(max_examples=120, deadline=None)
@given(cwords())
def test_rewrite_step_decreases(w):
    nxt = rewrite_step(w, RS4)
    if nxt is None:
        assert is_normal_form(w, RS4)
    else:
        assert word_less(nxt, w)
