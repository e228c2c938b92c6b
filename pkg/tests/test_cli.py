import json
import subprocess
import sys

import pytest

import polysym as ps
from polysym.cli import main


def run(argv, capfd):
    rc = main(argv)
    out, err = capfd.readouterr()
    return rc, out, err


class TestCount:
    def test_csv_golden(self, capfd):
        rc, out, err = run(["count", "--m", "3..5", "--format", "csv"], capfd)
        assert rc == 0
        assert out == "n,m,p_count,q_count\n9,3,3,2\n12,4,6,4\n15,5,16,16\n"
        assert err == ""

    def test_json_golden(self, capfd):
        rc, out, _ = run(["count", "--m", "3", "--format", "json"], capfd)
        assert rc == 0
        assert out == '[{"n":9,"m":3,"p":3,"q":2}]\n'

    def test_csv_is_default_format(self, capfd):
        rc, out, _ = run(["count", "--m", "3..30"], capfd)
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "n,m,p_count,q_count"
        assert len(lines) == 29

    def test_rejects_m_of_two(self, capfd):
        rc, _, err = run(["count", "--m", "2..5"], capfd)
        assert rc == 2
        assert err == "error: count needs 2 < m_from <= m_to, got 2..5\n"

    def test_rejects_reversed_range(self, capfd):
        rc, _, err = run(["count", "--m", "5..3"], capfd)
        assert rc == 2
        assert "error:" in err

    def test_rejects_malformed_range(self, capfd):
        rc, _, err = run(["count", "--m", "abc"], capfd)
        assert rc == 2
        assert "bad range" in err


class TestEnumerate:
    def test_axial_m3_records(self, capfd):
        rc, out, _ = run(["enumerate", "--m", "3", "--family", "axial"], capfd)
        assert rc == 0
        recs = json.loads(out)
        assert [r["generators"] for r in recs] == [[1, 4], [4, 7], [7, 1]]
        assert all(r["n"] == 9 and r["m"] == 3 and r["family"] == "axial" for r in recs)
        assert all(r["rotation_order"] == 3 and r["axis_count"] == 3 for r in recs)
        assert recs[0]["sides"] == [1, 1, 4, 1, 1, 4, 1, 1, 4]
        assert recs[0]["u"] == 2

    def test_circular_m3_records(self, capfd):
        rc, out, _ = run(["enumerate", "--m", "3", "--family", "circular"], capfd)
        recs = json.loads(out)
        assert [r["generators"] for r in recs] == [[1, 4, 7], [1, 7, 4]]
        assert all(r["axis_count"] == 0 and r["rotation_order"] == 3 for r in recs)

    def test_record_count_matches_formula(self, capfd):
        for m, fam in [(5, "axial"), (5, "circular"), (8, "circular")]:
            rc, out, _ = run(["enumerate", "--m", str(m), "--family", fam], capfd)
            count = ps.count_axial(m) if fam == "axial" else ps.count_circular(m)
            assert len(json.loads(out)) == count

    def test_csv_header(self, capfd):
        rc, out, _ = run(
            ["enumerate", "--m", "3", "--family", "circular", "--format", "csv"],
            capfd,
        )
        lines = out.splitlines()
        assert lines[0] == "n,m,family,a,b,c,u,rotation_order,axis_count,sides"
        assert lines[1].startswith("9,3,circular,1,4,7,4,3,0,")

    def test_rejects_m_too_small(self, capfd):
        rc, _, err = run(["enumerate", "--m", "2", "--family", "axial"], capfd)
        assert rc == 2
        assert "m > 2" in err

    def test_reingestion_through_classify(self, capfd):
        for fam in ("axial", "circular"):
            rc, out, _ = run(["enumerate", "--m", "4", "--family", fam], capfd)
            for rec in json.loads(out):
                sides = ",".join(str(e) for e in rec["sides"])
                rc2, out2, _ = run(
                    ["classify", "--n", str(rec["n"]), "--sides", sides], capfd
                )
                rec2 = json.loads(out2)
                assert rc2 == 0
                assert rec2["family"] == fam
                assert rec2["m"] == rec["m"]
                assert rec2["sides"] == rec["sides"]
                assert rec2["rotation_order"] == rec["rotation_order"]
                assert rec2["axis_count"] == rec["axis_count"]


class TestClassify:
    def test_axial_golden(self, capfd):
        rc, out, _ = run(
            ["classify", "--n", "9", "--sides", "1,4,1,1,4,1,1,4,1"], capfd
        )
        assert rc == 0
        assert out == (
            '{"n":9,"m":3,"family":"axial","generators":[1,4],'
            '"sides":[1,1,4,1,1,4,1,1,4],"u":2,"rotation_order":3,"axis_count":3}\n'
        )

    def test_hexagon_example(self, capfd):
        rc, out, _ = run(["classify", "--n", "6", "--sides", "1,2,1,4,3,1"], capfd)
        rec = json.loads(out)
        assert rc == 0
        assert rec["family"] == "other"
        assert rec["m"] is None
        assert rec["generators"] is None
        assert rec["u"] == 2

    def test_regular_example(self, capfd):
        rc, out, _ = run(["classify", "--n", "9", "--sides", ",".join(["2"] * 9)], capfd)
        rec = json.loads(out)
        assert rec["family"] == "regular"
        assert rec["generators"] == [2]
        assert rec["rotation_order"] == rec["axis_count"] == 9

    def test_premature_closure_exits_one(self, capfd):
        rc, out, err = run(["classify", "--n", "6", "--sides", "2,2,2,2,2,2"], capfd)
        assert rc == 1
        assert out == ""
        assert err == "FAIL: not a valid polygon: premature closure at i=3\n"

    def test_malformed_sides_exit_two(self, capfd):
        rc, _, err = run(["classify", "--n", "6", "--sides", "1,2,3"], capfd)
        assert rc == 2
        assert err.startswith("error:")
        rc, _, err = run(["classify", "--n", "6", "--sides", "0,2,1,4,3,2"], capfd)
        assert rc == 2


class TestVerify:
    def test_census_nonagon(self, capfd):
        rc, out, _ = run(["verify", "--mode", "census", "--n", "9"], capfd)
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "census n=9: cycles=20160 axial=3 circular=2 regular=3 other=0 ok"
        report = json.loads(lines[-1])
        assert report == {
            "mode": "census",
            "ok": True,
            "results": [
                {
                    "n": 9,
                    "census_size": 20160,
                    "axial": 3,
                    "circular": 2,
                    "regular": 3,
                    "other": 0,
                    "ok": True,
                }
            ],
        }

    def test_census_rejects_large_n(self, capfd):
        rc, _, err = run(["verify", "--mode", "census", "--n", "15"], capfd)
        assert rc == 2
        assert err == "error: census supports 3 <= n <= 12, got n=15\n"

    def test_sweep(self, capfd):
        rc, out, _ = run(["verify", "--mode", "sweep", "--m", "3..4"], capfd)
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "sweep m=3: axial=3 circular=2 regular=3 other=0 ok"
        assert lines[1] == "sweep m=4: axial=6 circular=4 regular=2 other=0 ok"
        assert json.loads(lines[-1])["ok"] is True

    def test_sweep_needs_m(self, capfd):
        rc, _, err = run(["verify", "--mode", "sweep"], capfd)
        assert rc == 2
        assert "needs --m" in err

    def test_identity(self, capfd):
        rc, out, _ = run(["verify", "--mode", "identity", "--m", "3..10"], capfd)
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "identity m=3: 18 == 18 ok"
        report = json.loads(lines[-1])
        assert report["mode"] == "identity" and report["ok"] is True
        assert len(report["results"]) == 8

    def test_gcd(self, capfd):
        rc, out, _ = run(["verify", "--mode", "gcd", "--m", "3..5"], capfd)
        assert rc == 0
        report = json.loads(out.splitlines()[-1])
        assert len(report["results"]) == 6  # both families per m

    def test_gcd_single_family(self, capfd):
        rc, out, _ = run(
            ["verify", "--mode", "gcd", "--m", "3..3", "--family", "axial"], capfd
        )
        report = json.loads(out.splitlines()[-1])
        assert report["results"] == [{"m": 3, "family": "axial", "ok": True}]

    def test_jobs_flag_does_not_change_output(self, capfd):
        rc1, out1, _ = run(["verify", "--mode", "sweep", "--m", "3..5"], capfd)
        rc2, out2, _ = run(
            ["verify", "--mode", "sweep", "--m", "3..5", "--jobs", "3"], capfd
        )
        assert (rc1, out1) == (rc2, out2)


class TestRender:
    def test_writes_gallery(self, capfd, tmp_path):
        out_path = tmp_path / "p3.svg"
        rc, out, _ = run(
            ["render", "--m", "3", "--family", "axial", "--out", str(out_path)], capfd
        )
        assert rc == 0
        assert out == f"wrote {out_path}: 3 classes\n"
        doc = out_path.read_text()
        import xml.etree.ElementTree as ET

        root = ET.fromstring(doc)
        cells = [el for el in root.iter() if el.get("class") == "cell"]
        assert len(cells) == 3
        caps = [el.text for el in root.iter() if el.get("class") == "caption"]
        assert caps == ["a=1;b=4", "a=4;b=7", "a=7;b=1"]

    def test_axes_flag(self, capfd, tmp_path):
        out_path = tmp_path / "p3ax.svg"
        rc, _, _ = run(
            [
                "render", "--m", "3", "--family", "axial",
                "--axes", "--out", str(out_path),
            ],
            capfd,
        )
        assert rc == 0
        doc = out_path.read_text()
        assert doc.count('class="axis"') == 9  # 3 cells x 3 mirror lines

    def test_output_is_deterministic(self, capfd, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for p in (a, b):
            run(["render", "--m", "4", "--family", "circular", "--out", str(p)], capfd)
        assert a.read_bytes() == b.read_bytes()

    def test_unwritable_path_exits_one(self, capfd):
        rc, _, err = run(
            ["render", "--m", "3", "--family", "axial",
             "--out", "/nonexistent/dir/x.svg"],
            capfd,
        )
        assert rc == 1
        assert err.startswith("FAIL: cannot write")

    def test_bad_options_exit_two(self, capfd, tmp_path):
        out_path = str(tmp_path / "x.svg")
        rc, _, err = run(
            ["render", "--m", "3", "--family", "axial", "--out", out_path,
             "--columns", "0"],
            capfd,
        )
        assert rc == 2
        rc, _, err = run(
            ["render", "--m", "3", "--family", "axial", "--out", out_path,
             "--size", "10"],
            capfd,
        )
        assert rc == 2


class TestTopLevel:
    def test_no_command_exits_two(self, capfd):
        assert run([], capfd)[0] == 2

    def test_unknown_command_exits_two(self, capfd):
        assert run(["frobnicate"], capfd)[0] == 2

    def test_stdout_is_reproducible(self, capfd):
        rc1, out1, _ = run(["count", "--m", "3..12", "--format", "json"], capfd)
        rc2, out2, _ = run(["count", "--m", "3..12", "--format", "json"], capfd)
        assert out1 == out2

    def test_console_script_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "polysym.cli", "count", "--m", "3..4"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "n,m,p_count,q_count"
