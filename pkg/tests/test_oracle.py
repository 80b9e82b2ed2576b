import pytest

from scstar.automata import Dfa
from scstar.bounds import upper_count
from scstar.errors import InputError
from scstar.oracle import (SearchResult, SearchSpec, dfa_from_index, encode, enumerate_dfas,
                           max_sc_search, naive_pipeline, pruned_pipeline, random_corpus)


def test_naive_examples(even_a, sigma_star):
    assert naive_pipeline(even_a) == Dfa(2, ("a",), 0, {1}, [[1], [1]])
    assert naive_pipeline(sigma_star).state_count == 1


def test_naive_matches_pruned_random():
    for d in random_corpus(3, 200, 4, 2):
        assert naive_pipeline(d) == pruned_pipeline(d)


def test_enumeration_counts():
    assert len(list(enumerate_dfas(SearchSpec(1, 1)))) == 2
    assert len(list(enumerate_dfas(SearchSpec(2, 1)))) == 16  # 2^(2*1) * 2^2
    assert len(list(enumerate_dfas(SearchSpec(3, 2)))) == 5832
    all_ = list(enumerate_dfas(SearchSpec(2, 2)))
    assert len(all_) == 64 and len(set(all_)) == 64


def test_slices_partition():
    full = list(enumerate_dfas(SearchSpec(2, 2)))
    parts = [list(enumerate_dfas(SearchSpec(2, 2, offset=o, stride=2))) for o in (0, 1)]
    assert sorted(map(encode, parts[0] + parts[1])) == sorted(map(encode, full))
    assert not set(parts[0]) & set(parts[1])


def test_index_decoding():
    d = dfa_from_index(3, 2, (1 + 2 * 3) * 8 + 0b101)
    assert d.delta[0] == (1, 2) and d.finals == {0, 2}
    assert encode(d) == "3:2:120000:101"


def test_spec_validation():
    with pytest.raises(InputError):
        SearchSpec(0, 1)
    with pytest.raises(InputError):
        SearchSpec(2, 1, offset=2, stride=2)
    with pytest.raises(InputError):
        SearchSpec(20, 5)


def test_search_small_examples():
    assert max_sc_search(SearchSpec(1, 1)).max_sc == 1
    res = max_sc_search(SearchSpec(2, 1))
    assert res.max_sc == 2 and res.count == 16 and res.valid
    assert res.max_sc <= upper_count(2)
    assert sum(res.histogram.values()) == 16


def test_search_argmax_reruns():
    res = max_sc_search(SearchSpec(2, 2))
    n, k, table, fbits = res.argmax.split(":")
    d = Dfa(int(n), ("a", "b"), 0, {i for i, b in enumerate(fbits) if b == "1"},
            [[int(table[q * 2 + a]) for a in range(2)] for q in range(int(n))])
    assert pruned_pipeline(d).state_count == res.max_sc


def test_search_capped_runs_flagged():
    res = max_sc_search(SearchSpec(2, 2, cap=1))
    assert not res.valid and res.capped > 0


def test_merge_is_order_independent():
    a, b = SearchResult(2, 1), SearchResult(2, 1)
    for d in enumerate_dfas(SearchSpec(2, 1, offset=0, stride=2)):
        a.add(d, pruned_pipeline(d).state_count)
    for d in enumerate_dfas(SearchSpec(2, 1, offset=1, stride=2)):
        b.add(d, pruned_pipeline(d).state_count)
    assert a.merge(b).to_json() == b.merge(a).to_json()
    assert SearchResult.from_json(a.to_json()).to_json() == a.to_json()


def test_checkpoint_resume(tmp_path):
    ck = str(tmp_path / "ck.txt")
    first = max_sc_search(SearchSpec(2, 2), checkpoint=ck)
    ids = open(ck).read().split()
    assert sorted(map(int, ids)) == list(range(64))
    # drop half the checkpoint; the rest is recomputed
    with open(ck, "w") as fh:
        fh.write("\n".join(ids[:30]) + "\n")
    again = max_sc_search(SearchSpec(2, 2), checkpoint=ck)
    assert again.to_json() == first.to_json()
