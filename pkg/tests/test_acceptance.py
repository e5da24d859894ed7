"""Acceptance suite: every criterion runs at its stated bound and prints one
pass/fail line (run pytest with -s to watch them).  All checks are exact;
the runtime ceilings below are part of the acceptance contract."""

import pytest

from graphgroups import verification as verif


def _report(result, ceiling):
    print()
    print(result.line())
    assert result.ok, result.detail
    assert result.seconds < ceiling, f"exceeded {ceiling}s: {result.seconds:.1f}s"


def test_criterion_1_phi_p4_injective_to_8():
    _report(verif.criterion_phi_p4(max_len=8, oracle_len=5), 60)


def test_criterion_2_bs_free_submonoid_to_10():
    _report(verif.criterion_bs_free_submonoid(max_len=10), 5)


def test_criterion_3_trefoil():
    _report(verif.criterion_trefoil(max_inj=6, max_ker=4), 60)


def test_criterion_4_hnn_trefoil():
    _report(verif.criterion_hnn(max_len=5), 300)


def test_criterion_5_octahedron_and_bs_cube():
    _report(verif.criterion_octahedron_and_cube(max_len=8), 60)


def test_criterion_6_classification_table():
    _report(verif.criterion_classification(), 1)


def test_criterion_7_word_problem_oracles():
    _report(verif.criterion_word_problem_oracles(max_vertices=4, word_len=6), 300)


def test_criterion_8_free_powers_and_bb_basis():
    _report(verif.criterion_free_powers_and_bb(max_bb_len=6), 60)
