"""
Acceptance checks: every results-table group must pass.
"""
import pytest

from apps.reports.suite import SUITE, chain_rows, run_suite, trees_rows
from apps.solver.lower_bounds import lower_bound_game


def assert_rows_pass(rows):
    failed = [
        f'{row.name}: {row.value} (expected {row.expected})'
        for row in rows if row.passed is False
    ]
    assert not failed, failed


@pytest.mark.parametrize('group', ['zielonka', 'fig1', 'W1', 'trees'])
def test_quick_groups(group):
    assert_rows_pass(run_suite([group]))


@pytest.mark.slow
@pytest.mark.parametrize('group', ['W2', 'W3', 'W4', 'W5', 'solvers', 'closure'])
def test_slow_groups(group):
    assert_rows_pass(run_suite([group]))


def test_suite_covers_every_group():
    assert list(SUITE) == [
        'zielonka', 'fig1', 'W1', 'W2', 'W3', 'W4', 'W5', 'trees', 'solvers', 'closure',
    ]


@pytest.mark.parametrize('name', ['fig1', 'w1', 'w4'])
def test_memory_variants_are_ordered(name):
    chain, rows = chain_rows(name, lower_bound_game(name))
    assert_rows_pass(rows)
    assert len(chain) == 4


@pytest.mark.parametrize('name', ['w1', 'w4'])
def test_two_states_suffice_for_every_variant(name):
    chain, _ = chain_rows(name, lower_bound_game(name))
    assert [result.memory for result in chain.values()] == [2, 2, 2, 2]


def test_width_witness_embeds_as_a_tree_but_not_as_a_graph():
    embeds, universal = trees_rows(seed=0)
    assert embeds.value is False
    assert embeds.passed
    assert universal.value is True
