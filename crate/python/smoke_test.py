#!/usr/bin/env python3
"""Smoke test for the qextend_py extension module.

Build the extension first:

    cargo build -p qextend-py          # or --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_extension():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libqextend_py.so", "qextend_py.so", "libqextend_py.dylib")
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    sys.exit("extension not built; run: cargo build -p qextend-py")


def import_extension():
    built = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="qextend_py_"))
    shutil.copy2(built, staging / "qextend_py.so")
    sys.path.insert(0, str(staging))
    import qextend_py

    return qextend_py


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    qx = import_extension()
    checks = 0

    def check(name, ok):
        nonlocal checks
        checks += 1
        status = "ok" if ok else "FAIL"
        print(f"  {name}: {status}")
        if not ok:
            sys.exit(1)

    print(f"qextend_py {qx.__version__}")

    k4 = qx.Graph.complete(4)
    check("q(K_4) = 6", close(k4.q(), 6.0))
    check("K_4 graph6 round trip", qx.Graph.from_graph6(k4.to_graph6()).edge_count() == 6)
    check("rho(K_4) = 3", close(k4.adjacency_spectral_radius(), 3.0))

    check("theta(0, 4) = 4", close(qx.theta(0, 4), 4.0))
    check(
        "threshold(0, 6) = 4 + 2 sqrt(3)",
        close(qx.threshold_value(0, 6), 4.0 + 2.0 * math.sqrt(3.0)),
    )
    spec = json.loads(qx.threshold_json(0, 8))
    check("threshold(0, 8) case", spec["case"] == "n_eq_2k8")

    boundary = qx.extremal_graph(0, 6)
    check("extremal(0, 6) attains the bound", close(boundary.q(), qx.threshold_value(0, 6)))
    check("extremal(0, 6) has no 1-factor", not boundary.has_one_factor())
    cert = json.loads(boundary.certify_json(0))
    check("boundary graph is Inconclusive", cert["verdict"] == "Inconclusive")

    k6 = qx.Graph.complete(6)
    cert = json.loads(k6.certify_json(1))
    check("K_6 certified extendable at k = 1", cert["verdict"] == "ExtendableByTheorem")
    check("K_6 is exactly 1-extendable", k6.is_k_extendable(1))

    excluded = qx.exception_graph(1, 6)
    check("excluded graph detected", qx.is_exception(excluded, 1))
    cert = json.loads(excluded.certify_json(1))
    check("excluded graph verdict", cert["verdict"] == "Exception")
    check("excluded graph not 1-extendable", not excluded.is_k_extendable(1))
    witness = json.loads(excluded.deficiency_witness_json(1))
    check("excluded-graph witness is the core", witness["s"] == [0, 1])

    report = json.loads(qx.verify_sharpness_json(1, 12))
    check("sharpness(1, 12) passes", report["pass"])
    check("sharpness witness o(G-S) = 3", report["witness"]["odd_components"] == 3)

    fam = qx.build_family(2, [3, 1])
    check("K_2 v (K_3 u K_1) has 12 edges", fam.edge_count() == 12)
    check("split-join closed form", close(qx.split_join_q(2, 6), 4.0 + 2.0 * math.sqrt(3.0)))
    check(
        "components after deleting the core",
        fam.components([0, 1]) == [[2, 3, 4], [5]],
    )
    check("odd component count", fam.odd_component_count([0, 1]) == 2)

    print(f"all {checks} smoke checks passed")


if __name__ == "__main__":
    main()
