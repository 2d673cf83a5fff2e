from fractions import Fraction

import pytest

import cwb


def test_perms():
    assert cwb.count_avoiders(7, "4 _ 1 3 2") == 3592
    assert cwb.count_avoiders(7, "3 _ 1 4 2") == 3587
    assert cwb.inversions([4, 3, 2, 1]) == 6
    assert not cwb.contains([1, 2, 3, 4, 5, 6], "2 1")
    assert cwb.wilf_check(6, ["1 2 3 _ 4", "1 2 4 _ 3", "2 1 4 _ 3"])["all_equal"]
    fam = [[int(c) for c in s] for s in ["12345", "35241", "41523", "25143", "53142", "43215"]]
    sets = cwb.shattered_ksets(fam, 3)
    assert len(sets) == 8 and [2, 3, 5] in sets
    assert cwb.avoiders_by_inversions(7, 10)["violation"] is None


def test_tournaments_and_game():
    assert cwb.tournament_inv("3 101") == 1
    assert cwb.additivity_probe(2, 2)["max_defect"] == 0
    assert cwb.solve_game(3)["winner"] == "BLUE"


def test_setfam():
    assert cwb.setfam_bound(7, 7) == 584
    f = cwb.calbet_construction(3, 5)
    v = cwb.check_calbet(f)
    assert v["holds"] and v["size"] == v["bound"] == 6
    assert not cwb.check_bollobas([([1, 2], [3]), ([1, 2], [3])])["holds"]
    assert cwb.brute_force_max(3, 3, 5) == 4


def test_latin():
    z5 = cwb.cayley_table("Z5")
    assert cwb.count_cuboctahedra(z5) == 5**5
    assert cwb.is_group_table(cwb.cayley_table("Z2xZ2"))
    s = cwb.jm_sample(6, 200, 1)
    assert all(sorted(r) == list(range(6)) for r in s)
    assert s == cwb.jm_sample(6, 200, 1)


def test_capset():
    assert cwb.max_capset(3)["size"] == 9
    assert not cwb.is_capset(["0", "1", "2"])["is_cap"]
    p = cwb.cap_product(["00", "01", "10", "11"], ["0", "1"])
    assert len(p) == 8 and cwb.is_capset(p)["is_cap"]
    assert cwb.find_disjoint_equal(2, 4)["found"]


def test_graphs():
    assert cwb.partial_sum([1, 2, 3]) == Fraction(13, 12)
    r = cwb.colours_Z([1, 2, 3])
    assert r["colours"] and len(r["certificate"]) == 4
    assert not cwb.colours_Z([1])["colours"]
    assert cwb.hall_condition(2, [(0, 1)], [0, 0]) == (False, [0, 1])
    ok, arcs = cwb.orientation_exists(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 1])
    assert ok and len(arcs) == 3
    assert cwb.bipartite_cycle_check(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])["outcome"] == "conjecture_holds"


def test_surfaces():
    assert cwb.k5_genus_distribution() == {1: 462, 2: 4974, 3: 2340}
    assert len(cwb.classify_k5(3)) == 13
    assert len(cwb.classify_k5(3, with_reversal=False)) == 24
    assert cwb.genus([[1, 2], [0, 2], [0, 1]]) == 0


def test_stirling():
    assert cwb.assoc_stirling(4, 2, 2) == 3
    c = cwb.cycle_poly(2, 10)
    assert c[-1] == 654729075
    assert cwb.is_real_rooted(c)
    assert cwb.is_log_concave(cwb.cycle_poly(3, 40))[0]
    assert cwb.is_log_concave([1, 1, 2]) == (False, 1)
    assert not cwb.is_real_rooted([1, 0, 1])


def test_errors():
    with pytest.raises(cwb.LimitExceeded):
        cwb.count_avoiders(13, "1 2 3")
    with pytest.raises(cwb.InvalidInput):
        cwb.count_avoiders(5, "1 1")
    with pytest.raises(ValueError):
        cwb.cayley_table("Q8x")


def test_quick_suite():
    checks = cwb.suite("quick")
    assert checks and all(c["passed"] for c in checks)
