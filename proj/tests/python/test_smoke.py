import gzip
import os
import subprocess

import pytest

import pancycle as pc

K9 = pc.graphs.complete(9).to_graph6()
C9 = pc.graphs.cycle(9).to_graph6()


def test_graph6_round_trip():
    assert pc.write_graph6(pc.graphs.complete(4)) == "C~"
    assert pc.write_graph6(pc.graphs.cycle(5)) == "Dhc"
    g = pc.Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert pc.parse_graph6(g.to_graph6()) == g
    assert g.order == 5 and g.size == 3
    assert g.adjacent(1, 0) and not g.adjacent(0, 4)
    with pytest.raises(pc.MalformedRecord):
        pc.parse_graph6("C~~")
    with pytest.raises(pc.Error):
        pc.parse_graph6("")
    with pytest.raises(IndexError):
        g.adjacent(0, 9)


def test_st_condition_and_independence():
    c9 = pc.graphs.cycle(9)
    v = pc.check_st(c9, 5, 3)
    assert v["holds"] is False
    assert len(v["witness"]) == 5
    assert pc.independence_number(c9) == 4
    assert pc.check_st(pc.graphs.complete(4), 5, 3)["holds"] is True


def test_gadgets():
    k5 = pc.graphs.complete(5)
    w = pc.find_c_tilde(k5, 3)
    assert w["cycle"] == [0, 1, 2] and w["apex"] == 3
    assert pc.find_switch(k5, 3)["t"] == 1
    assert pc.find_triangle(pc.graphs.cycle(9)) is None
    assert pc.find_dumbbell(pc.graphs.bowtie(), 0) is not None
    p = pc.shortest_st_path(pc.graphs.cycle(9), [0, 1], [4, 5])
    assert len(p["vertices"]) == 4
    with pytest.raises(pc.InvalidSets):
        pc.shortest_st_path(pc.graphs.cycle(9), [0], [0])


def test_certificate_and_spectrum():
    k9 = pc.graphs.complete(9)
    cert = pc.certify_pancyclic(k9)
    assert pc.verify_certificate(k9, cert)
    cert["lengths"].pop()
    assert not pc.verify_certificate(k9, cert)
    with pytest.raises(pc.HypothesesViolated):
        pc.certify_pancyclic(pc.graphs.cycle(9))
    s = pc.cycle_spectrum(pc.graphs.petersen())
    assert s["missing"] == [3, 4, 7, 10]


def test_verdicts():
    v = pc.verify_main_theorem(pc.graphs.complete(9))
    assert v["hypotheses_met"] and v["conclusion"] is True and not v["counterexample"]
    assert pc.verify_main_theorem(pc.graphs.cycle(9))["hypotheses_met"] is False
    b = pc.blow_up(pc.graphs.cycle(5), 3)
    assert pc.recognize_c5_blowup(b) == 3
    assert pc.verify_triangle_lemma(b, 6)["conclusion"] is True
    assert pc.verify_gadget_lemma(pc.graphs.complete(9))["conclusion"] is True
    assert pc.verify_path_lemma(pc.graphs.complete(9), 3, samples=20, seed=4)["seed"] == 4


def test_scan_and_resume(tmp_path):
    src = tmp_path / "in.g6.gz"
    with gzip.open(src, "wt") as f:
        f.write("\n".join([K9, C9, "junk", K9]) + "\n")
    report = pc.scan(str(src), workers=2)
    t = report["totals"]
    assert t["read"] == 4 and t["parse_errors"] == 1 and t["verified"] == 2
    assert sum(t["filtered_out"].values()) == 1

    cp = tmp_path / "cp.json"
    part = pc.scan(str(src), checkpoint=cp, max_records=2)
    assert part["coverage"]["complete"] is False
    done = pc.resume(cp)
    assert done["coverage"]["complete"] is True
    assert done["totals"] == t

    with pytest.raises(pc.PreconditionViolated):
        pc.probe_conjecture(3, str(src))


def test_probe_on_generated_stream(tmp_path):
    geng = os.environ.get("PANCYCLE_GENG")
    if not geng:
        pytest.skip("geng not available")
    out = tmp_path / "eleven.g6"
    with open(out, "w") as f:
        subprocess.run([geng, "-q", "-C", "-d4", "11", "0/2000"], stdout=f, check=True)
    report = pc.probe_conjecture(4, str(out))
    assert report["coverage"]["complete"] is True
    t = report["totals"]
    assert t["read"] == t["parse_errors"] + sum(t["filtered_out"].values()) + t["verified"]
