#!/usr/bin/env python3
"""Smoke test for the bergesat_py extension module.

Builds nothing itself: expects `cargo build -p bergesat-py` (or --release)
to have produced the cdylib under target/. Copies it into a temp dir under
an importable name and exercises the main entry points.
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    names = ["libbergesat_py.so", "bergesat_py.dll", "libbergesat_py.dylib"]
    for profile in ("debug", "release"):
        for name in names:
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("extension not found; run `cargo build -p bergesat-py` first")


def main() -> None:
    ext = locate_extension()
    tmp = Path(tempfile.mkdtemp(prefix="bergesat_py_"))
    shutil.copy(ext, tmp / "bergesat_py.so")
    sys.path.insert(0, str(tmp))
    import bergesat_py as bs

    k3 = bs.Hypergraph(2, 3, [[0, 1], [1, 2], [0, 2]])
    assert bs.vertex_cover_number(k3) == (2, [0, 1])
    assert bs.feedback_number(k3)[0] == 1
    assert bs.case_select(k3, 3) == "F1"

    host = bs.expansion(k3, 3)
    assert (host.n, host.edge_count()) == (6, 3)
    w = bs.contains_berge(host, k3)
    assert w is not None and w["core_map"] == [0, 1, 2]

    case, lemma_host = bs.build_lemma_host(k3, 3, 12)
    assert case == "F1" and lemma_host.edge_count() == 5
    assert bs.contains_berge(lemma_host, k3) is None

    sat_host, added = bs.greedy_complete(lemma_host, k3)
    report = bs.is_saturated(sat_host, k3)
    assert report["free"] and report["saturated"]
    _, d_star = bs.degeneracy_order(added)
    assert d_star <= 3

    p2 = bs.Hypergraph(2, 2, [[0, 1]])
    assert bs.sat_bruteforce(5, 3, p2)[0] == 0

    tp = bs.tight_path(3, 5)
    assert tp.edges() == [[0, 1, 2], [1, 2, 3], [2, 3, 4]]
    assert bs.reduction_threshold(3, 4, 5) == 15
    assert bs.intersection_level(tp) == 2
    sparse = bs.expansion(tp, 4)
    out = bs.run_reduction(sparse, 3, 5)
    assert out["kind"] == "BOUND_CERTIFICATE" and out["max_multiplicity"] < 15

    # round trip through the text format
    text = lemma_host.serialize()
    assert bs.Hypergraph.parse(text) == lemma_host

    print("bergesat_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
