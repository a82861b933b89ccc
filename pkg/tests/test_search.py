from fractions import Fraction

import pytest

from shippierce.closed_forms import density_bounds
from shippierce.core import make_family, parse_family, reflect, scale_reduce
from shippierce.search import (
    check_mirror_triples,
    compute_extremes,
    enumerate_families,
    raw_family_count,
    ships_with_span,
)


def test_ships_with_span():
    assert [s.offsets for s in ships_with_span(2, 3)] == [(0, 1), (0, 2)]
    assert [s.offsets for s in ships_with_span(1, 5)] == [(0,)]
    assert ships_with_span(3, 2) == []


def test_enumerate_hand_counted_cases():
    assert [str(f) for f in enumerate_families(1, 2, 3)] == ["0,1"]
    assert [str(f) for f in enumerate_families(1, 3, 4)] == ["0,1,2", "0,1,3"]
    fams = [str(f) for f in enumerate_families(2, 2, 4)]
    assert fams == ["0,1;0,2", "0,1;0,3", "0,2;0,3"]


def test_enumerate_emits_canonical_forms_only():
    for f in enumerate_families(2, 3, 7):
        assert not reflect(f) < f
        assert scale_reduce(f) == (f, 1)
        assert len(f.ships) == 2
        assert all(s.size == 3 and s.span <= 7 for s in f.ships)


def test_enumerate_is_deterministic_stream():
    a = list(enumerate_families(2, 3, 6))
    b = list(enumerate_families(2, 3, 6))
    assert a == b == sorted(a)


def test_extremes_small_sweeps():
    rep = compute_extremes(1, 3, 10)
    assert rep.max_density == Fraction(2, 5)
    assert rep.max_witness == make_family([[0, 1, 3]])
    assert rep.min_density == Fraction(1, 3)

    rep = compute_extremes(2, 2, 9)
    assert rep.max_density == Fraction(2, 3)
    assert rep.max_witness == make_family([[0, 1], [0, 2]])
    assert rep.min_density == Fraction(1, 2)  # easiest witness fits the budget

    rep = compute_extremes(1, 4, 8)
    assert rep.min_density == Fraction(1, 4)
    assert rep.max_density <= Fraction(1, 3)


def test_extremes_counts_raw_and_canonical():
    rep = compute_extremes(2, 2, 4)
    assert rep.families_examined == 3
    assert rep.families_raw == raw_family_count(2, 2, 4) == 3
    rep = compute_extremes(1, 3, 4)
    assert (rep.families_examined, rep.families_raw) == (2, 3)


def test_extremes_within_bounds_envelope():
    for n, k, budget in [(1, 3, 7), (2, 2, 7), (1, 4, 7), (2, 3, 6)]:
        rep = compute_extremes(n, k, budget)
        env = density_bounds(n, k)
        assert rep.min_density >= Fraction(1, k)
        assert float(rep.max_density) <= env.upper + 1e-9
        if env.lower > 0:
            assert float(rep.max_density) >= env.lower - 1e-9


def test_min_is_one_over_k_when_easiest_witness_fits():
    # the easiest family of n k-cell ships spans n*k cells
    from shippierce.constructions import easiest_family

    for n, k in [(1, 3), (2, 2), (2, 3), (1, 4)]:
        fam, _ = easiest_family(n, k)
        budget = fam.span
        assert compute_extremes(n, k, budget).min_density == Fraction(1, k)


def test_search_monotone_in_span_budget():
    prev_max, prev_min = None, None
    for budget in range(3, 8):
        rep = compute_extremes(1, 3, budget)
        if prev_max is not None:
            assert rep.max_density >= prev_max
            assert rep.min_density <= prev_min
        prev_max, prev_min = rep.max_density, rep.min_density


def test_results_file_roundtrip_and_resume(tmp_path):
    out = tmp_path / "results.txt"
    rep1 = compute_extremes(2, 2, 6, results_path=out)
    first = out.read_text()
    assert f"max {rep1.max_density} witness {rep1.max_witness}" in first  # 2/3 formats identically
    assert first.splitlines()[0].split("\t")[0] == "0,1;0,2"

    # truncate to simulate an interrupted run; the rerun must reuse
    # surviving lines and produce a byte-identical file
    lines = first.splitlines()
    out.write_text("\n".join(lines[:2]) + "\n")
    rep2 = compute_extremes(2, 2, 6, results_path=out)
    assert rep2 == rep1
    assert out.read_text() == first


def test_workers_give_byte_identical_results(tmp_path):
    seq = tmp_path / "seq.txt"
    par = tmp_path / "par.txt"
    rep_seq = compute_extremes(2, 2, 7, results_path=seq, workers=1)
    rep_par = compute_extremes(2, 2, 7, results_path=par, workers=2)
    assert rep_seq == rep_par
    assert seq.read_text() == par.read_text()


def test_budget_must_fit_cap():
    with pytest.raises(ValueError):
        compute_extremes(1, 3, 12, span_cap=10)


def test_mirror_triples_report():
    rep = check_mirror_triples()
    assert len(rep.rows) == 10
    assert rep.all_below_bound and rep.extremes_as_expected
    by_pair = {(r.a, r.b): r for r in rep.rows}
    assert by_pair[(2, 1)].density == Fraction(2, 5)
    assert by_pair[(3, 1)].density == Fraction(2, 5)
    assert by_pair[(4, 2)].density == Fraction(2, 5)  # scaled copy of (2,1)
    assert by_pair[(4, 2)].reduced == (2, 1)
    assert by_pair[(5, 2)].density < Fraction(2, 5)
    assert by_pair[(2, 1)].family == parse_family("0,2,3;0,1,3")
