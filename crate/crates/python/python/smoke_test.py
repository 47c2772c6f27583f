"""Smoke test for the `neutro` extension module."""

import math

import neutro


def close(a, b, tol=1e-9):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main():
    T = neutro.Triplet

    r = neutro.validate([0.9, 0.4, 0.5], "SFS")
    assert not r["valid"] and abs(r["constraint_value"] - 1.22) < 1e-9
    assert neutro.validate([0.8, 0.3, 0.5], "NS")["valid"]
    assert not neutro.validate([1.0, 0.5], "QROFS", exponent=5)["valid"]
    assert abs(neutro.hesitancy(0.9, 0.2) - math.sqrt(0.15)) < 1e-12

    a, b = T(0.3, 0.6, 0.1), T(0.4, 0.1, 0.5)
    assert close(neutro.conjunct(a, b).to_list(), [0.3, 0.6, 0.5])
    assert close(neutro.conjunct(a, b, "ifs").to_list(), [0.3, 0.2, 0.5])
    assert close(neutro.negate(neutro.negate(a)).to_list(), a.to_list())

    rows, refusals, denom = neutro.sup_transform([[0.8, 0.3, 0.5], [0.9, 0.2, 0.6]])
    assert abs(denom - 1.8) < 1e-12
    assert close(rows[0], [0.44, 0.17, 0.28], 0.01)
    assert len(refusals) == 2

    p = neutro.paradox_check(T(1, 1, 1))
    assert p["ns_valid"] and not p["iifs_valid"]
    assert p["normalized"].to_list() == [1 / 3] * 3

    est, se, exact = neutro.estimate_volume("SFS", 20000, 7)
    assert abs(exact - math.pi / 6) < 1e-12 and abs(est - exact) < 4 * se

    ts, is_, fs = neutro.refine(T(0.6, 0.3, 0.9), 2, 1, 3)
    assert close(neutro.coarsen(ts, is_, fs).to_list(), [0.6, 0.3, 0.9])
    assert neutro.validate_refined([0.9, 0.8], [0.7], [0.9], "RNS")["valid"]

    x = neutro.NeutrosophicNumber("2+I")
    assert str(x * neutro.NeutrosophicNumber("-1+4I")) == "-2+11I"
    assert str(neutro.NeutrosophicNumber("I") ** 5) == "I"
    try:
        neutro.NeutrosophicNumber("I") ** -1
    except ArithmeticError:
        pass
    else:
        raise AssertionError("I^-1 should be undefined")

    assert neutro.matrix_mul("1 I\n0 1", "1 0\nI 1") == "1+I I\nI 1\n"
    g = neutro.adjacency_validate("0 1 I\n1 0 0\nI 0 0")
    assert g["indeterminate"] == 2 and g["symmetric"]
    assert close(neutro.path_influence([T(0.3, 0.6, 0.1), T(0.4, 0.1, 0.5)]).to_list(), [0.3, 0.6, 0.5])

    assert neutro.three_ways([0.9, 0.5, 0.1], 0.7, 0.3) == ["Accept", "Noncommit", "Reject"]
    assert neutro.n_ways([0.9, 0.6, 0.1], [0.25, 0.5, 0.75], 2, 1, 1)[1] == "Accept-2"
    m = neutro.neutrosophify([("cold", 30), ("medium", 20), ("hot", 50)], ["cold"], ["medium"], ["hot"])
    assert close(m, [0.3, 0.2, 0.5])
    assert [neutro.offset_degree(h, 40) for h in (30, 40, 45, 0, -20)] == [0.75, 1.0, 1.125, 0.0, -0.5]
    assert neutro.offset_class([1.125, 0, 0]) == "Overset"

    try:
        neutro.validate([0.5, 0.5, 0.5], "nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown family should raise")

    assert all(neutro.demo().values())
    print("smoke test ok")


if __name__ == "__main__":
    main()
