from guinand.util import CompensatedSum, comp_sum, rel_diff


def test_compensated_sum_recovers_cancellation():
    acc = CompensatedSum()
    for x in (1e16, 1.0, -1e16):
        acc.add(x)
    assert acc.total == 1.0  # plain float addition would give 0.0


def test_comp_sum_complex():
    vals = [complex(1e16, 1.0), complex(1.0, -1e16), complex(-1e16, 1e16)]
    assert comp_sum(vals) == complex(1.0, 1.0)


def test_rel_diff_floor():
    assert rel_diff(0j, 0j) == 0.0
    assert rel_diff(2.0, 1.0) == 0.5
