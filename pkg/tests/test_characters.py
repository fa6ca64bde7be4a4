import itertools
import math
import random

import pytest

from moment_forge.characters import (
    Partition,
    class_size,
    frobenius_contributions,
    frobenius_count,
    hook_dimension,
    mn_character,
    partitions,
    perm_character_multiplicities,
    perm_character_norm,
)
from moment_forge.perm import Permutation, edge_action, symmetric_group

# S3 character table, rows (3), (2,1), (1,1,1); columns e, transposition, 3-cycle
S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}


def test_partition_parsing():
    assert Partition.parse("6,3,1") == (6, 3, 1)
    assert Partition.parse("2^3 1^4") == (2, 2, 2, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_s3_table():
    for lam, row in S3_TABLE.items():
        for mu, val in row.items():
            assert mn_character(lam, mu) == val


def test_column_orthogonality_s5():
    lams = partitions(5)
    for mu in lams:
        s = sum(mn_character(l, mu) ** 2 for l in lams)
        assert s == math.factorial(5) // class_size(mu)


def test_dimensions():
    for lam in partitions(10):
        assert mn_character(lam, [1] * 10) == hook_dimension(lam)
    assert sum(hook_dimension(l) ** 2 for l in partitions(10)) == math.factorial(10)


def test_sign_character():
    # sign of cycle type (5,5) is +1
    assert mn_character([1] * 10, (5, 5)) == 1
    assert mn_character([1] * 10, (6, 3, 1)) == -1


def test_class_sizes():
    assert class_size((5, 5)) == 72576
    assert sum(class_size(mu) for mu in partitions(6)) == 720


def test_map_count():
    classes = [(6, 3, 1), (2, 2, 2, 1, 1, 1, 1), (5, 5)]
    count = frobenius_count(10, classes)
    assert count == 25_401_600 == 7 * math.factorial(10)
    assert sum(v for _, v in frobenius_contributions(10, classes)) == count


def test_literal_class_typo_gives_zero():
    # 2^2 1^6 instead of 2^3 1^4 is an odd permutation: no solutions at all
    assert frobenius_count(10, [(6, 3, 1), (2, 2, 1, 1, 1, 1, 1, 1), (5, 5)]) == 0


def test_mismatched_class_size():
    with pytest.raises(ValueError):
        frobenius_count(5, [(3, 1), (5,), (5,)])


def _brute(n, classes):
    group = symmetric_group(n)
    types = [tuple(Partition.of(c)) for c in classes]
    count = 0
    for combo in itertools.product(group, repeat=len(classes)):
        if all(g.cycle_type() == t for g, t in zip(combo, types)):
            p = combo[0]
            for g in combo[1:]:
                p = p * g
            count += p.is_identity()
    return count


@pytest.mark.parametrize("n", [3, 4])
def test_against_enumeration(n):
    rng = random.Random(n)
    parts = partitions(n)
    for _ in range(6):
        classes = [rng.choice(parts) for _ in range(3)]
        assert frobenius_count(n, classes) == _brute(n, classes)


def test_two_class_count_is_class_size():
    # x1 x2 = 1 with both in the class of mu: |C_mu| solutions
    for mu in partitions(4):
        assert frobenius_count(4, [mu, mu]) == class_size(mu)


def _edge_fix(img):
    return edge_action(Permutation(img)).fixed_points()


def test_edge_permutation_character():
    mults = dict(perm_character_multiplicities(5, _edge_fix))
    assert {lam: m for lam, m in mults.items() if m} == {(5,): 1, (4, 1): 1, (3, 2): 1}
    assert perm_character_norm(5, _edge_fix) == 3
    assert sum(m * hook_dimension(l) for l, m in mults.items()) == 10


def test_norm_by_brute_force():
    total = sum(edge_action(g).fixed_points() ** 2 for g in symmetric_group(5))
    assert total // 120 == perm_character_norm(5, _edge_fix) == 3
