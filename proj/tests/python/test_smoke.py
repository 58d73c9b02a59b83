"""Smoke tests for the Python bindings and the command-line tool.

The CLI binary is located through the POLYCOMB_CLI environment variable
(set by the test harness to the freshly built executable).
"""

import json
import os
import subprocess

import pytest

import polycomb as pc

CLI = os.environ.get("POLYCOMB_CLI", "polycomb")


def run_cli(*args, stdin=None, env_extra=None):
    env = dict(os.environ)
    env.pop("POLYCOMB_CONFIG", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, env=env
    )


# ── Library ──────────────────────────────────────────────────────────────────


def test_generators_and_exact_integers():
    p = pc.gen_cyclic(3, 3)
    assert p.dim == 3
    assert p.points == [[1, 1, 1], [2, 4, 8], [3, 9, 27]]

    g = pc.GSpec.affine(2, 1)
    assert pc.gen_cyclic(2, 2, g).points == [[3, 9], [5, 25]]

    # Exact at any size: 2^300 survives the round trip through the core.
    big = 2**300
    r = pc.brute_max(pc.PointSet(1, [[0], [big]]), [1])
    assert r.value == big and r.argmax == [1]


def test_optimizer_matches_brute_force():
    for d, n, c in [(2, 5, [6, -1]), (3, 40, [1, -2, 1]), (4, 7, [0, 0, 0, 0])]:
        fast = pc.cyclic_max(d, n, c)
        slow = pc.brute_max(pc.gen_cyclic(d, n), c)
        assert fast.value == slow.value
        if any(c):
            assert fast.argmax == slow.argmax
        assert fast.evaluations <= 2 * d * d * max(1, (n - 1).bit_length()) + 4 * d

    assert pc.cyclic_max(2, 5, [6, -1]).value == 9
    assert pc.is_in_cone(pc.gen_cyclic(2, 5), 2, [6, -1])


def test_hull_and_perturbation():
    cube = pc.PointSet(3, [[(m >> i) & 1 for i in range(3)] for m in range(8)])
    inc = pc.facets(cube)
    assert len(inc.facets) == 6
    assert not pc.is_simplicial(inc)

    params = pc.PerturbParams.minimal_valid(3)
    assert params.k_exponent == 17
    assert pc.is_simplicial(pc.facets(pc.cyclic_perturb(cube, params)))

    assert pc.in_convex_hull([0, 0, 0], cube)
    assert not pc.in_convex_hull([2, 0, 0], cube)
    assert len(pc.extreme_points(cube)) == 8
    assert pc.neighborliness(pc.facets(pc.gen_cyclic(4, 7))) == 2


def test_clique_and_rectangle_covers():
    c4 = pc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert pc.clique_number(c4) == 2
    assert pc.solve_clique_via_bqp(c4, False) == 2
    assert pc.solve_clique_via_bqp(c4, True) == 2

    ident = pc.BoolMatrix(["100", "010", "001"])
    assert pc.rc_exact(ident) == 3
    assert pc.fooling_set_bound(ident) == 3
    assert pc.rc_greedy(ident) == 3
    assert pc.det(pc.IntMatrix([[1, 2], [3, 4]])) == -2
    assert pc.det_sum_decomposition_check(
        pc.IntMatrix([[1, 2], [3, 4]]), pc.IntMatrix([[0, 1], [1, 0]])
    )


def test_decision_trees():
    tree = pc.LinearDecisionTree(
        nodes={
            0: pc.TreeNode([1, -1], 0, 1, 2),
            1: pc.TreeNode([1, 0], 0, 3, 4),
            2: pc.TreeNode([0, 1], 0, 5, 6),
        },
        leaves={3: pc.TreeLeaf(1), 4: pc.TreeLeaf(0), 5: pc.TreeLeaf(2), 6: pc.TreeLeaf(0)},
        root=0,
    )
    triangle = pc.PointSet(2, [[0, 0], [1, 0], [0, 1]])
    tree.validate(3, 2)
    assert tree.depth() == 2
    assert pc.ldt_evaluate(tree, [5, 1]) == 1

    report = pc.is_direct_type(tree, triangle, pc.skeleton_graph(pc.facets(triangle)))
    assert report.ok and report.complete and report.witness_node is None


def test_errors_surface_as_python_exceptions():
    with pytest.raises(pc.ValidationError):
        pc.gen_cyclic(0, 3)
    with pytest.raises(pc.ResourceError):
        pc.gen_bqp(13)
    assert issubclass(pc.ValidationError, ValueError)
    assert issubclass(pc.ResourceError, RuntimeError)


# ── Command-line tool ────────────────────────────────────────────────────────


def test_cli_generate_example():
    r = run_cli("gen", "cyclic", "--d", "3", "--n", "3")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {
        "dim": 3,
        "points": [["1", "1", "1"], ["2", "4", "8"], ["3", "9", "27"]],
    }


def test_cli_optimizer_example():
    r = run_cli("opt", "cyclic", "--d", "2", "--n", "5", "--c", "6,-1")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["value"] == "9" and out["t"] == ["3"]


def test_cli_round_trip_and_determinism():
    gen = run_cli("gen", "bqp", "--n", "2")
    assert gen.returncode == 0
    pert = run_cli("perturb", "--input", "-", stdin=gen.stdout)
    assert pert.returncode == 0
    simp = run_cli("hull", "simplicial", "--input", "-", stdin=pert.stdout)
    assert simp.returncode == 0
    assert json.loads(simp.stdout) == {"simplicial": True}

    again = run_cli("perturb", "--input", "-", stdin=gen.stdout)
    assert again.stdout == pert.stdout  # byte-identical reruns

    parsed = json.loads(pert.stdout)
    assert len(parsed["points"]) == 4 and parsed["dim"] == 3


def test_cli_exit_codes():
    assert run_cli("no-such-command").returncode == 1
    assert run_cli("gen", "cyclic", "--d", "0", "--n", "3").returncode == 2
    assert run_cli("gen", "bqp", "--n", "13").returncode == 3
    bad = run_cli("hull", "facets", "--input", "-", stdin="not json")
    assert bad.returncode == 2 and bad.stdout == "" and "error" in bad.stderr


def test_cli_k_exponent_validation():
    gen = run_cli("gen", "bqp", "--n", "2")
    refused = run_cli("perturb", "--input", "-", "--k-exponent", "3", stdin=gen.stdout)
    assert refused.returncode == 2
    accepted = run_cli("perturb", "--input", "-", "--k-exponent", "30", stdin=gen.stdout)
    assert accepted.returncode == 0
    assert json.loads(accepted.stdout)["points"][1][0] == str(2**30 + 1)


def test_cli_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"output": "text", "k_exponent_policy": "minimal-valid"}))
    gen = run_cli("gen", "bqp", "--n", "2")
    r = run_cli(
        "perturb", "--input", "-", stdin=gen.stdout,
        env_extra={"POLYCOMB_CONFIG": str(cfg)},
    )
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "dim 3, 4 points"
    assert "131073" in r.stdout  # 2^17 + 1: the minimal-valid scale for d = 3

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"output": "yaml"}))
    r = run_cli("gen", "bqp", "--n", "2", env_extra={"POLYCOMB_CONFIG": str(bad)})
    assert r.returncode == 2


def test_cli_selftest():
    r = run_cli("selftest")
    assert r.returncode == 0
    assert all(line.startswith("ok ") for line in r.stdout.splitlines())
