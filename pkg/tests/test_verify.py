import pytest

from catalan_zeta import verify

from conftest import catalan_closed


def test_catalan_recurrence_matches_closed_form():
    assert [verify.catalan(n) for n in range(15)] == [catalan_closed(n) for n in range(15)]


def test_all_suites_pass_small():
    results = verify.run_all(max_n=6)
    assert all(r.passed for r in results), [r.counterexample for r in results if not r.passed]


def test_bounds_are_capped():
    results = verify.run_all(max_n=3, only=["zeta", "words-brute-force"])
    assert [r.bound for r in results] == [3, 3]


def test_seed_changes_nothing_on_success():
    a = verify.run_all(max_n=5, seed=1, only=["swap-confluence"])
    b = verify.run_all(max_n=5, seed=2, only=["swap-confluence"])
    assert a[0].passed and b[0].passed and a[0].cases == b[0].cases


@pytest.mark.parametrize("name", sorted(verify.MUTANTS))
def test_every_mutant_is_caught_by_n5(name):
    failed = [r for r in verify.run_all(max_n=5, maps=verify.mutant_maps(name)) if not r.passed]
    assert failed
    assert min(r.counterexample.n for r in failed) <= 5


def test_counterexample_is_minimal_in_n():
    [result] = verify.run_all(max_n=8, maps=verify.mutant_maps("zeta-role-swap"), only=["zeta"])
    assert result.counterexample.n == 2


def test_swaps_never_fire_below_length_five():
    # why operand-swapped swap mutants survive any harness bounded by n <= 4
    from catalan_zeta.dyck import enumerate_area_sequences
    from catalan_zeta.words import classify, enumerate_words_A

    for n in range(1, 5):
        assert all(classify(w).satisfies_B1 for w in enumerate_words_A(n))
        b_words = [a for a in enumerate_area_sequences(n) if classify(a.entries).satisfies_B]
        assert all(classify(a.entries).satisfies_A1 for a in b_words)
    assert not all(classify(w).satisfies_B1 for w in enumerate_words_A(5))
