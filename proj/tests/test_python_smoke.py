#!/usr/bin/env python3
"""Smoke tests for the Python bindings.

Run directly (PYTHONPATH must contain either the built extension module
or the installed package). Exits nonzero on the first failure.
"""

import sys

try:
    import _secnet as sn
except ImportError:
    import secnet as sn


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    # network construction and generators
    net = sn.example_six_node_network()
    assert net.n == 6
    assert net.is_connected()
    er = sn.erdos_renyi(20, 3.0, seed=4)
    assert er.n == 20
    t = sn.tree(2, 3)  # root plus 3 levels below: 1 + 2 + 4 + 8
    assert t.n == 15 and t.degree(0) == 2
    com = sn.community([3, 3], [(0, 3)])
    assert com.n == 6 and com.has_edge(0, 3)

    # edge-list round trip
    assert sn.from_edge_list(sn.to_edge_list(net)).edges() == net.edges()

    # protection tensors on the six-node example
    a = sn.one_point_protection(net)
    assert a.at(0, 2, 5) == 1.0  # removing cut node 0 separates 2 from 5
    assert a.at(4, 0, 5) == 1.0  # removing cut node 4 separates 0 from 5
    assert a.at(2, 1, 3) == 0.0  # node 2 is not a cut vertex for (1, 3)
    assert a.at(2, 2, 2) == 1.0  # convention entry
    b = sn.two_point_protection(net)
    assert isinstance(b.entries(0, 2), list)

    # weighted reductions agree with a direct summation
    v = [1.0 / 6] * 6
    vec = sn.reduce_a_vec(a, 2, v)
    assert len(vec) == 6 and all(x >= 0 for x in vec)
    direct = sum(a.at(2, i, k) * v[i] * v[k] for i in range(6) for k in range(6))
    assert approx(sn.reduce_a_scalar(a, 2, v, v), direct)

    # risk measures: MC tracks exact; walk-count bounds agree at q=0
    q = [0.3, 0.1, 0.5, 0.0, 0.2, 0.4]
    phi = [1.0 / 6] * 6
    exact = sn.infection_probability_exact(net, q, phi)
    mc = sn.infection_probability_mc(net, q, phi, samples=200000, seed=1)
    assert max(abs(e - m) for e, m in zip(exact, mc)) < 0.01
    wd = sn.walk_count_risk(net, q, phi, L=3, mode="exact_distinct")
    wm = sn.walk_count_risk(net, q, phi, L=3, mode="matrix_power")
    assert all(m <= d + 1e-12 for d, m in zip(wd, wm))
    act = sn.activation_risk(net, q, phi, samples=2000, seed=2)
    assert all(0.0 <= r <= 1.0 + 1e-12 for r in act)

    # attacker best response is a distribution
    br_phi, interior = sn.attacker_best_response(net, q, [1.0] * 6, [1.0] * 6, 10.0)
    assert approx(sum(br_phi), 1.0, 1e-9) and all(p >= -1e-12 for p in br_phi)

    # equilibrium: numerical and closed-form agree at large alpha
    z = [1.0] * 6
    num = sn.equilibrium(net, z, z, alpha=200.0, theta=50.0,
                         method="projected_gradient", tol=1e-7, random_starts=2, seed=3)
    cf = sn.equilibrium(net, z, z, alpha=200.0, theta=50.0, method="closed_form")
    assert all(0.0 <= qi <= 1.0 for qi in num["q"])
    assert max(abs(x - y) for x, y in zip(num["q"], cf["q"])) < 0.01
    assert approx(sum(num["phi"]), 1.0, 1e-9)

    # frontier: cost decreasing, risk increasing in alpha
    pts = sn.efficient_frontier(net, z, z, 50.0, sn.log_alpha_grid(5.0, 500.0, 4),
                                tol=1e-6, random_starts=1, seed=5)
    assert len(pts) == 4 and not any(p["failed"] for p in pts)
    for prev, cur in zip(pts, pts[1:]):
        assert cur["cost"] <= prev["cost"] + 1e-4
        assert cur["risk_z"] >= prev["risk_z"] - 1e-4

    # dynamics: full protection freezes the epidemic; results are deterministic
    agg = sn.simulate(net, [1.0] * 6, phi, beta=0.8, gamma=0.7, horizon=10,
                      runs=50, seed=6)
    assert all(f == 0.0 for f in agg["mean_fractions"])
    r1 = sn.simulate(net, q, phi, beta=0.8, gamma=0.7, horizon=10, runs=50, seed=6)
    r2 = sn.simulate(net, q, phi, beta=0.8, gamma=0.7, horizon=10, runs=50, seed=6,
                     workers=4)
    assert r1["mean_fractions"] == r2["mean_fractions"]

    cmp = sn.compare_strategies(net, [0.6] * 6, phi, beta=0.9, gamma=0.6,
                                horizon=15, runs=50, seed=7)
    assert cmp["optimal"]["mean_asymptotic"] <= cmp["none"]["mean_asymptotic"] + 1e-9

    print("all python smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
