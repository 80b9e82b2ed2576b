from scstar import verify
from scstar.automata import Dfa
from scstar.oracle import random_corpus
from scstar.pipeline import antichain_min


def keep_supersets_stepper(d: Dfa):
    """Negative control: prunes the wrong way round (keeps ⊆-maximal sets)."""
    fmask, start = d.final_mask, 1 << d.initial

    def step(s, a):
        out, acc = [], False
        for x in s:
            y = d.image(x, a)
            if y & fmask:
                out.append(y | start)
            else:
                out.append(y)
                acc = True
        if acc:
            out.append(start)
        maximal = [x for x in set(out) if not any(x != y and x & y == x for y in out)]
        return antichain_min(maximal), acc

    return step


def test_corrupted_pruning_is_caught():
    dfas = verify.corpus(3, 20, 7)
    assert verify.oracle_suite(dfas).passed
    bad = verify.oracle_suite(dfas, stepper=keep_supersets_stepper)
    assert not bad.passed
    assert "FAIL" in bad.line()


def test_run_suites_negative_control_via_cli_path():
    results = verify.run_suites(n_max=3, samples=10, seed=1, stepper=keep_supersets_stepper,
                                orbit_samples=5)
    by_name = {r.name: r for r in results}
    assert not by_name["pruned vs naive oracle"].passed
    assert by_name["bounds consistency"].passed


def test_orbit_closure_small():
    for d in random_corpus(11, 10, 3, 2):
        assert verify.orbit_closure_failures(d) == []


def test_corpus_shape():
    c = verify.corpus(3, 5, 0)
    assert len(c) == 6132 + 5


def test_verify_command_exits_1_on_corrupted_rule(monkeypatch, capsys):
    from functools import partial

    from scstar.cli import main

    monkeypatch.setattr(verify, "run_suites",
                        partial(verify.run_suites, stepper=keep_supersets_stepper, orbit_samples=5))
    assert main(["verify", "--n-max", "3", "--samples", "5"]) == 1
    assert "FAIL  pruned vs naive oracle" in capsys.readouterr().out
