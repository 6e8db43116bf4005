"""Emit one JSON document of seeded reports; run twice and compare bytes."""

import contextlib
import io
import json
import sys

from hilbertnss import affine_ring, hilbert_data
from hilbertnss.bounds import fixture_c_n_delta, fixture_rational_normal_curve, sweep_bound
from hilbertnss.cli import main as cli_main
from hilbertnss.nullstellensatz import certify_nss_thm44, example41_report, geometric_degree_estimate
from hilbertnss.regseq import straighten_affine_cor32

CLI_RUNS = [
    ["gb", "--fixture", "cndelta:4:2,1"],
    ["hilbert", "--fixture", "rnc:4", "--upto", "10"],
    ["bounds", "--thm", "2.3", "--random", "10", "--mmax", "10"],
    ["bounds", "--fixture", "rnc:3", "--thm", "2.4", "--section-degree", "2"],
    ["regseq", "--fixture", "example31:3"],
    ["delta", "--fixture", "example41:0", "--trials", "0"],
]


def build(seed: int = 0) -> str:
    from corpus import unit_systems

    doc: dict = {"seed": seed, "cli": [], "library": {}}
    for argv in CLI_RUNS:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(argv + ["--seed", str(seed)])
        doc["cli"].append({"argv": argv, "exit": code, "stdout": buf.getvalue()})
    lib = doc["library"]
    lib["hilbert"] = [hilbert_data(fixture_rational_normal_curve(n).ideal).to_json(12) for n in range(1, 5)]
    fx = fixture_c_n_delta(5, [2, 2])
    lib["sandwich"] = sweep_bound(fx.ideal, "sandwich", (1, 12), irr=fx.irr).to_json()
    A = affine_ring(3)
    lib["straighten"] = straighten_affine_cor32([A("x1"), A("x1^3 + x2"), A("x1^3 + x3")], seed=seed).to_json()
    systems = unit_systems(5, seed=seed)
    lib["certify"] = [certify_nss_thm44(fs, trials=2, seed=seed).to_json() for fs in systems]
    lib["delta"] = geometric_degree_estimate(systems[0], trials=3, seed=seed).to_json()
    lib["example41"] = example41_report(affine_ring(3), seed=seed, outer_degree=10).to_json()
    return json.dumps(doc, sort_keys=True)


if __name__ == "__main__":
    sys.stdout.write(build(int(sys.argv[1]) if len(sys.argv) > 1 else 0))
