"""Smoke tests for the python bindings."""

import math
import subprocess
import os
import sys

import stabsim


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol


def test_parse_and_dense():
    c = stabsim.parse("qubits 2\ngate h 0\ngate cx 0 1\n")
    assert c.n == 2
    assert c.gate_count() == 2
    amp = stabsim.amplitude_dense(c, "00")
    assert approx(amp.real, 1 / math.sqrt(2), 1e-12)
    assert approx(amp.imag, 0.0, 1e-12)


def test_engines_agree():
    c = stabsim.generate("cz", n=4, cycles=2, p=0.5, seed=7)
    lc = stabsim.layerize(c)
    want = stabsim.amplitude_dense(c, "0000")
    spir, trace = stabsim.amplitude_spir(lc, "0000")
    spc, _ = stabsim.amplitude_spc(lc, "0000")
    soc, _ = stabsim.amplitude_spc_soc(lc, "0000")
    assert approx(spir, want, 1e-8)
    assert approx(spc, want, 1e-8)
    assert approx(soc, want, 1e-8)
    assert trace["inner_product_count"] > 0


def test_cut():
    c = stabsim.parse("qubits 4\ngate h 0\ngate t 1\ngate cz 1 2\ngate w 3\n")
    amp, trace = stabsim.amplitude_cut(c, 2, "0000")
    want = stabsim.amplitude_dense(c, "0000")
    assert approx(amp, want, 1e-8)
    assert trace["cut_count"] == 1


def test_decomposition_and_cost():
    assert stabsim.decomposition_rank("fsim") == 4
    assert stabsim.decomposition_rank("ww") == 6
    rep = stabsim.verify_decomposition("fsim_w1")
    assert rep["pass"] and rep["rank"] == 12
    assert stabsim.crossover_dnc("cz", 1 / 3) in (31, 32)
    assert stabsim.crossover_dnc("cs", 1 / 3) in (11, 12)
    assert 66.6 <= stabsim.supremacy_cycle_log2_kappa() <= 66.7


def test_cli_runs():
    cli = os.environ.get("STABSIM_CLI")
    if not cli:
        return
    out = subprocess.run([cli, "cost", "crossover", "cz", "0.3333333333"],
                         capture_output=True, text=True, check=True)
    assert "crossover_dnc: 32" in out.stdout


if __name__ == "__main__":
    fails = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except Exception as exc:  # noqa: BLE001
                print(f"FAIL {name}: {exc}")
                fails += 1
    sys.exit(1 if fails else 0)
