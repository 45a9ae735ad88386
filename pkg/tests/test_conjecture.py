import json
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import multicount.conjecture as conjecture
from multicount.conjecture import (
    Checkpoint,
    CorruptCheckpointError,
    SearchConfig,
    SearchMode,
    checkpoint_load,
    checkpoint_save,
    gcd_conjecture_holds_direct,
    gcd_conjecture_holds_fast,
    lemma1_holds,
    search,
)


def test_direct_examples():
    assert gcd_conjecture_holds_direct(7, 3)  # gcd(35, 15) = 5
    assert gcd_conjecture_holds_direct(14, 4)  # gcd(1001, 78) = 13
    assert gcd_conjecture_holds_direct(4, 2)  # gcd(6, 3) = 3


def test_fast_examples():
    assert gcd_conjecture_holds_fast(7, 3)
    assert gcd_conjecture_holds_fast(14, 4)
    assert gcd_conjecture_holds_fast(4, 2)
    assert gcd_conjecture_holds_fast(5000, 2500)  # far beyond direct's comfort


def test_lemma1_examples():
    assert lemma1_holds(7, 3)  # 35 = 5*7
    assert lemma1_holds(4, 2)  # 6 = 2*3
    assert lemma1_holds(10, 5)  # 252 = 2^2*3^2*7


def test_pair_precondition():
    for fn in (gcd_conjecture_holds_direct, gcd_conjecture_holds_fast, lemma1_holds):
        for bad in [(3, 2), (7, 1), (7, 4), (4, 3), (9, 5)]:
            with pytest.raises(ValueError):
                fn(*bad)


def test_fast_equals_direct_grid():
    for n in range(4, 151):
        for k in range(2, n // 2 + 1):
            assert gcd_conjecture_holds_fast(n, k) == gcd_conjecture_holds_direct(n, k)


@given(st.integers(min_value=4, max_value=1200), st.data())
@settings(max_examples=200)
def test_fast_equals_direct_property(n, data):
    k = data.draw(st.integers(min_value=2, max_value=n // 2))
    assert gcd_conjecture_holds_fast(n, k) == gcd_conjecture_holds_direct(n, k)


def test_config_validation():
    SearchConfig(mode=SearchMode.LEMMA1, n_max=10)
    with pytest.raises(ValueError):
        SearchConfig(mode=SearchMode.LEMMA1, n_max=10, n_min=3)
    with pytest.raises(ValueError):
        SearchConfig(mode=SearchMode.LEMMA1, n_max=4, n_min=5)
    with pytest.raises(ValueError):
        SearchConfig(mode=SearchMode.LEMMA1, n_max=10, workers=0)
    with pytest.raises(ValueError):
        SearchConfig(mode=SearchMode.LEMMA1, n_max=10, checkpoint_interval=0)
    with pytest.raises(ValueError):
        SearchConfig(mode="no-such-mode", n_max=10)


def test_config_coerces_mode_string():
    cfg = SearchConfig(mode="gcd_conjecture", n_max=10)
    assert cfg.mode is SearchMode.GCD_CONJECTURE


def test_single_pair_search():
    report = search(SearchConfig(mode="gcd_conjecture", n_max=4))
    assert report.verified_up_to == 4
    assert report.pairs_checked == 1  # only (4, 2)
    assert report.counterexamples == ()
    assert report.fast_path_hits == 1


def test_pairs_checked_formula():
    report = search(SearchConfig(mode="gcd_conjecture", n_max=321))
    expected = sum(n // 2 - 1 for n in range(4, 322))
    assert report.pairs_checked == expected
    assert report.fast_path_hits == expected


def test_gcd_sweep_clean_to_1500():
    report = search(SearchConfig(mode="gcd_conjecture", n_max=1500))
    assert report.counterexamples == ()
    assert report.verified_up_to == 1500


def test_lemma1_sweep_clean():
    report = search(SearchConfig(mode="lemma1", n_max=400))
    assert report.counterexamples == ()
    assert report.fast_path_hits == report.pairs_checked


def test_worker_determinism_small():
    reports = [
        search(SearchConfig(mode="gcd_conjecture", n_max=600, workers=w))
        for w in (1, 2, 4)
    ]
    canon = {r.canonical_json() for r in reports}
    assert len(canon) == 1
    assert json.loads(reports[0].canonical_json())["verified_up_to"] == 600


def test_checkpoint_roundtrip(tmp_path):
    cp = Checkpoint(
        mode=SearchMode.GCD_CONJECTURE,
        n_verified=777,
        counterexamples=((10, 2), (11, 3)),
        created_at="2026-01-15T12:00:00+00:00",
    )
    path = tmp_path / "cp.json"
    checkpoint_save(cp, path)
    assert checkpoint_load(path) == cp
    # no stray temp files from the atomic write
    assert os.listdir(tmp_path) == ["cp.json"]


def test_checkpoint_schema_is_exact(tmp_path):
    path = tmp_path / "cp.json"
    checkpoint_save(
        Checkpoint(SearchMode.LEMMA1, 50, (), "2026-01-15T12:00:00+00:00"), path
    )
    data = json.loads(path.read_text())
    assert set(data) == {"version", "mode", "n_verified", "counterexamples", "created_at"}
    assert data["version"] == 1
    assert data["mode"] == "lemma1"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "{truncated",
        "[1, 2]",
        '{"version": 1}',
        '{"version": 2, "mode": "lemma1", "n_verified": 1, "counterexamples": [], "created_at": "x"}',
        '{"version": 1, "mode": "bogus", "n_verified": 1, "counterexamples": [], "created_at": "x"}',
        '{"version": 1, "mode": "lemma1", "n_verified": -2, "counterexamples": [], "created_at": "x"}',
        '{"version": 1, "mode": "lemma1", "n_verified": 1, "counterexamples": [[1]], "created_at": "x"}',
        '{"version": 1, "mode": "lemma1", "n_verified": 1, "counterexamples": {}, "created_at": "x"}',
        '{"version": 1, "mode": "lemma1", "n_verified": 1, "counterexamples": [], "created_at": 5}',
        '{"version": 1, "mode": "lemma1", "n_verified": 1, "counterexamples": [], "created_at": "x", "extra": true}',
    ],
)
def test_checkpoint_corruption_detected(tmp_path, text):
    path = tmp_path / "cp.json"
    path.write_text(text)
    with pytest.raises(CorruptCheckpointError):
        checkpoint_load(path)


def test_checkpoint_missing_is_not_corrupt(tmp_path):
    with pytest.raises(FileNotFoundError):
        checkpoint_load(tmp_path / "nope.json")


def test_resume_equals_uninterrupted(tmp_path):
    path = tmp_path / "cp.json"
    # simulate an interrupted run: its last checkpoint stops at 400
    search(SearchConfig(mode="gcd_conjecture", n_max=400, checkpoint_path=path))
    assert checkpoint_load(path).n_verified == 400
    resumed = search(
        SearchConfig(mode="gcd_conjecture", n_max=900, checkpoint_path=path),
        resume=True,
    )
    uninterrupted = search(SearchConfig(mode="gcd_conjecture", n_max=900))
    assert resumed.canonical_json() == uninterrupted.canonical_json()
    # final checkpoint reflects the full range
    assert checkpoint_load(path).n_verified == 900


def test_resume_lemma1(tmp_path):
    path = tmp_path / "cp.json"
    search(SearchConfig(mode="lemma1", n_max=200, checkpoint_path=path))
    resumed = search(
        SearchConfig(mode="lemma1", n_max=350, checkpoint_path=path), resume=True
    )
    plain = search(SearchConfig(mode="lemma1", n_max=350))
    assert resumed.canonical_json() == plain.canonical_json()


def test_resume_past_n_max(tmp_path):
    path = tmp_path / "cp.json"
    search(SearchConfig(mode="gcd_conjecture", n_max=800, checkpoint_path=path))
    resumed = search(
        SearchConfig(mode="gcd_conjecture", n_max=500, checkpoint_path=path),
        resume=True,
    )
    plain = search(SearchConfig(mode="gcd_conjecture", n_max=500))
    assert resumed.canonical_json() == plain.canonical_json()


def test_resume_requires_path_and_matching_mode(tmp_path):
    with pytest.raises(ValueError):
        search(SearchConfig(mode="gcd_conjecture", n_max=10), resume=True)
    path = tmp_path / "cp.json"
    search(SearchConfig(mode="lemma1", n_max=50, checkpoint_path=path))
    with pytest.raises(ValueError):
        search(
            SearchConfig(mode="gcd_conjecture", n_max=100, checkpoint_path=path),
            resume=True,
        )


def test_checkpoint_interval_respected(tmp_path):
    path = tmp_path / "cp.json"
    saves = []
    real_save = conjecture.checkpoint_save

    def spy(cp, p):
        saves.append(cp.n_verified)
        real_save(cp, p)

    conjecture.checkpoint_save = spy
    try:
        search(
            SearchConfig(
                mode="gcd_conjecture",
                n_max=1000,
                checkpoint_path=path,
                checkpoint_interval=300,
            )
        )
    finally:
        conjecture.checkpoint_save = real_save
    assert saves[-1] == 1000
    assert len(saves) >= 3  # intermediate persists happened
    assert all(b > a for a, b in zip(saves, saves[1:]))


def test_checkpoint_write_failure_is_reported(tmp_path):
    missing_dir = tmp_path / "no" / "such" / "dir" / "cp.json"
    report = search(
        SearchConfig(mode="gcd_conjecture", n_max=300, checkpoint_path=missing_dir)
    )
    assert report.checkpoint_error is not None
    assert report.counterexamples == ()
    assert report.pairs_checked == sum(n // 2 - 1 for n in range(4, 301))


def test_counterexample_reporting_path(tmp_path, monkeypatch):
    # neither claim has a real counterexample in range, so fake one to
    # exercise collection, ordering, and checkpoint persistence
    fake_bad = {(37, 5), (20, 7)}

    def fake_lemma1(n, k):
        return (n, k) not in fake_bad

    monkeypatch.setattr(conjecture, "lemma1_holds", fake_lemma1)
    path = tmp_path / "cp.json"
    report = search(SearchConfig(mode="lemma1", n_max=60, checkpoint_path=path))
    assert report.counterexamples == ((20, 7), (37, 5))
    assert checkpoint_load(path).counterexamples == ((20, 7), (37, 5))


def test_binomial_shares_factor_with_n():
    # from C(n,k) = (n/k)*C(n-1,k-1): n divides k*C(n,k), so for k < n a
    # coprime C(n,k) would force n | k
    from math import comb, gcd

    for n in range(2, 201):
        for k in range(2, n):
            assert gcd(comb(n, k), n) > 1, (n, k)


def test_report_canonical_json_excludes_elapsed():
    report = search(SearchConfig(mode="gcd_conjecture", n_max=30))
    data = json.loads(report.canonical_json())
    assert set(data) == {
        "verified_up_to",
        "counterexamples",
        "pairs_checked",
        "fast_path_hits",
    }
    assert report.elapsed >= 0.0
