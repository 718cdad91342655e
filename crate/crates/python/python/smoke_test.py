"""Quick end-to-end check of the extension module.

    cd crates/python && maturin develop && python python/smoke_test.py
"""
from fractions import Fraction

import youngwit_py as yw

d = yw.YoungDiagram([1, 4, 2])
assert d.rows == [4, 2, 1] and str(d) == "4,2,1"
assert (d.width, d.height, d.rank) == (4, 3, 1)
assert d.qfi() == 21 == yw.qfi_analytic(d, phases=[0.3, 1.0, -2.0])
assert abs(yw.qfi_statevector(d) - 21) < 1e-9

assert yw.f_wh(14, 4, 9) == 32
assert yw.f_height(14, 10) == 34
assert yw.f_rank(10, 0) == 34
assert yw.valid_ranks(5) == [-4, -2, -1, 0, 1, 2, 4]
assert (4, 9) in yw.all_tuples(14) and yw.is_valid(14, 4, 9)
assert yw.count_width_leq(14, 4) == 24

value, argmax = yw.brute_force_max(10, max_rank=0)
assert value == 34 and argmax.rows == [4, 4, 1, 1]
assert yw.optimal_state(14, 4, 9).sum_of_squares() == 32
assert yw.verify_closed_forms(12) == []

assert Fraction(yw.xi2_floor_w(2)) == Fraction(1, 2)
assert abs(yw.linear_to_db(yw.db_to_linear(-4.5)) + 4.5) < 1e-12

r = yw.analyze(14, fq="40.4")
assert (r["inferred"]["w"], r["inferred"]["h"], r["inferred"]["r"]) == (4, 9, -3)
c = r["counts"]
assert (c["by_w"], c["by_h"], c["by_r"], c["by_wh"]) == (16, 11, 20, 24)
assert r["grid_csv"].startswith("w,h,f_wh,status\n")

r = yw.analyze(470, xi2_db="-4.5")
assert (r["inferred"]["w"], r["inferred"]["h"], r["inferred"]["r"]) == (4, 435, -399)

try:
    yw.analyze(14)
except ValueError:
    pass
else:
    raise AssertionError("missing value should fail")

print("smoke test ok")
