"""Smoke tests for the Python bindings."""

import pytest

import hooklab


def test_partition_basics():
    p = hooklab.Partition("7,7,5,4,3,2,2")
    assert p.size == 30
    assert len(p) == 7
    assert p.parts == [7, 7, 5, 4, 3, 2, 2]
    assert p.is_self_conjugate()
    assert str(p) == "7,7,5,4,3,2,2"
    assert p == hooklab.Partition([7, 7, 5, 4, 3, 2, 2])
    assert p.n_hooks(4) == 2
    assert p.hook_lengths()[:4] == [13, 12, 12, 11]
    assert p.hook_multiset()[1] == 5

    assert hooklab.Partition("3,1").conjugate() == hooklab.Partition("2,1,1")
    assert str(hooklab.Partition()) == "-"

    with pytest.raises(ValueError):
        hooklab.Partition("1,2")


def test_enumeration_and_counts():
    assert [str(p) for p in hooklab.partitions(4)] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert len(hooklab.self_conjugate_partitions(16)) == 5
    assert hooklab.count_distinct_odd(12) == 3
    assert all(
        hooklab.count_self_conjugate(n) == hooklab.count_distinct_odd(n) for n in range(25)
    )


def test_littlewood_decomposition():
    lam = hooklab.Partition("7,7,5,4,3,2,2")
    image = hooklab.decompose(lam, 4)
    assert str(image.core) == "3,2,1"
    assert [str(nu) for nu in image.quotient] == ["-", "3", "1,1,1", "-"]
    assert hooklab.compose(image.core, image.quotient, 4) == lam
    assert hooklab.is_t_core(image.core, 4)
    assert hooklab.t_core(lam, 4) == image.core

    assert hooklab.encode(lam) == "1100101.0101100"
    assert hooklab.decode("1100101.0101100") == lam
    assert hooklab.verify_sc_properties(lam, 4)["status"] == "pass"

    split = hooklab.sc_split(hooklab.Partition("5,4,4,3,1"))
    assert split.durfee == 3
    assert str(split.twin) == "3,1"
    assert split.type == hooklab.ScType.TYPE2
    assert hooklab.sc_reassemble(split) == hooklab.Partition("5,4,4,3,1")


def test_hook_counts_match_paper_row():
    row = [14, 14, 12, 12, 8, 6, 2, 8, 1, 0, 1, 0, 1, 0, 1]
    for t, expected in enumerate(row, start=1):
        assert hooklab.a_star_formula(t, 16) == expected
        assert hooklab.a_star_oracle(t, 16) == expected
    table = hooklab.a_star_table(16)
    assert table[0] == ("1", 14)
    assert table[-1] == (">16", 0)


def test_series():
    sc = dict(((q, x), int(c)) for q, x, c in hooklab.sc_series(12))
    assert sc[(0, 0)] == 1
    assert sc[(8, 0)] == 2
    assert sc[(12, 0)] == 3
    assert (2, 0) not in sc

    # Bivariate closed form marks 2-hooks of (2,2) with x^2 at q^4.
    thm11 = dict(((q, x), int(c)) for q, x, c in hooklab.sc_hook_series(2, 6))
    assert thm11[(4, 2)] == 1

    a2 = dict(((q, x), int(c)) for q, x, c in hooklab.a_star_series(2, 16))
    assert a2[(16, 0)] == 14


def test_verify_targets():
    reports = hooklab.verify(["table1"])
    assert len(reports) == 1
    assert reports[0]["status"] == "pass"

    reports = hooklab.verify(["thm1.1"], t=2, qmax=12)
    assert reports[0]["target"] == "thm1.1.even"
    assert reports[0]["status"] == "pass"
