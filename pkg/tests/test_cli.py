import csv
import io
import json
import re
from pathlib import Path

import pytest

from nfeseq.cli import cmd_eval, cmd_solve, cmd_spiral, cmd_table, cmd_verify, main
from nfeseq.errors import DomainError, ParseError
from nfeseq.golden import parse_golden
from nfeseq.analytic import principal_complex

FIXTURE = Path(__file__).parent / "fixtures" / "table_-8_8.txt"

# n-value, power of phi, negaFibonacci form as printed in the published table
PUBLISHED_TABLE = [
    (-8, 9, "34phi + 21"), (-7, 8, "21phi + 13"), (-6, 7, "13phi + 8"),
    (-5, 6, "8phi + 5"), (-4, 5, "5phi + 3"), (-3, 4, "3phi + 2"),
    (-2, 3, "2phi + 1"), (-1, 2, "phi + 1"), (0, 1, "phi"), (1, 0, "1"),
    (2, -1, "-1 + phi"), (3, -2, "2 - phi"), (4, -3, "-3 + 2phi"),
    (5, -4, "5 - 3phi"), (6, -5, "-8 + 5phi"), (7, -6, "13 - 8phi"),
    (8, -7, "-21 + 13phi"),
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTable:
    def test_golden_file(self):
        assert cmd_table(-8, 8) == FIXTURE.read_text()

    def test_fixture_matches_published_rows(self):
        lines = FIXTURE.read_text().splitlines()
        assert lines[0].split() == ["n", "phi_exponent", "negafibonacci_form", "decimal"]
        assert len(lines) == 18
        for line, (n, exponent, form) in zip(lines[1:], PUBLISHED_TABLE):
            fields = re.split(r"\s{2,}", line.strip())
            assert int(fields[0]) == n and int(fields[1]) == exponent
            assert parse_golden(fields[2]) == parse_golden(form)

    def test_rows(self):
        rows = {line.split()[0]: line for line in cmd_table(-8, 8).splitlines()[1:]}
        assert rows["-5"].split()[1:5] == ["6", "5", "+", "8*phi"]
        assert rows["1"].split()[1:3] == ["0", "1"]
        assert "-21 + 13*phi" in rows["8"]

    def test_csv_and_json(self):
        reader = list(csv.DictReader(io.StringIO(cmd_table(-1, 1, "csv"))))
        assert [r["negafibonacci_form"] for r in reader] == ["1 + 1*phi", "1*phi", "1"]
        data = json.loads(cmd_table(-1, 1, "json"))
        assert data[0] == {"n": -1, "phi_exponent": 2, "negafibonacci_form": "1 + 1*phi",
                           "decimal": pytest.approx(2.618033988749895)}

    def test_main(self, capsys):
        code, out, _ = run(capsys, "table", "--min", "-8", "--max", "8")
        assert code == 0 and out == FIXTURE.read_text()
        code, out, _ = run(capsys, "--format", "json", "table", "--min", "0", "--max", "0")
        assert json.loads(out)[0]["negafibonacci_form"] == "1*phi"
        code, out, _ = run(capsys, "table", "--format", "csv", "--min", "0", "--max", "0")
        assert out.startswith("n,phi_exponent")

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "table", "--min", "3", "--max", "1")
        assert code == 2 and "error" in err


class TestEval:
    def test_exact(self):
        assert cmd_eval("1", "1", "4") == "-3 + 2*phi\n"
        assert cmd_eval("0", "0", "9") == "0\n"

    def test_complex_matches_principal(self):
        out = cmd_eval("1", "1", "0.5+0.5i", "json")
        data = json.loads(out)
        z = principal_complex(0.5 + 0.5j)
        assert data["path"] == "complex"
        assert complex(data["re"], data["im"]) == pytest.approx(z, rel=1e-12)
        text = cmd_eval("1", "1", "0.5+0.5i").strip()
        assert complex(text.replace("i", "j")) == pytest.approx(z, rel=1e-12)

    def test_paths_agree(self):
        for eta, gamma in [("1", "1"), ("3/2", "2 - phi"), ("-phi", "7")]:
            for n in range(-10, 11):
                exact = json.loads(cmd_eval(eta, gamma, str(n), "json"))
                approx = json.loads(cmd_eval(eta, gamma, str(n), "json", numeric=True))
                value = complex(approx["re"], approx["im"])
                assert abs(value - exact["decimal"]) <= 1e-9 * max(1, abs(exact["decimal"]))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            cmd_eval("3+2i", "-1", "3")
        assert cmd_eval("3+2i", "-1", "3", numeric=True)

    def test_parse_error(self, capsys):
        with pytest.raises(ParseError):
            cmd_eval("foo", "1", "2")
        code, _, err = run(capsys, "eval", "--eta", "foo", "--gamma", "1", "--n", "2")
        assert code == 2 and "neither" in err


class TestSolve:
    def test_principal(self):
        data = json.loads(cmd_solve("1", "-1 + 1*phi", "json"))
        assert (data["eta"], data["gamma"]) == ("1", "1")
        assert len(data["check"]) == 10 and all(r["match"] for r in data["check"])

    def test_zero(self):
        data = json.loads(cmd_solve("0", "0", "json"))
        assert (data["eta"], data["gamma"]) == ("0", "0")

    def test_ones(self):
        out = cmd_solve("1", "1")
        assert "gamma = -2 + 2*phi" in out
        data = json.loads(cmd_solve("1", "1", "json"))
        assert [r["recurrence"] for r in data["check"][:6]] == ["1", "1", "0", "1", "-1", "2"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "solve", "--omega1", "1", "--omega2", "1")
        head, table = out.split("\n\n")
        assert head.splitlines()[2] == "gamma,-2 + 2*phi"
        assert len(table.strip().splitlines()) == 11


class TestVerify:
    def test_all_default(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--tol", "1e-9")
        assert code == 0
        assert [line.split()[0] for line in out.splitlines()[1:4]] == ["recurrence", "principal", "binet"]

    def test_unreachable_tolerance(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "recurrence", "--tol", "1e-30")
        assert code == 1 and "FAIL" in out

    def test_binet(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "binet", "--binet-range", "-70", "70")
        assert code == 0

    def test_exit_status_contract(self):
        for tol in (1e-9, 1e-30):
            status, out = cmd_verify("all", tol=tol, fmt="json", pairs=3)
            failures = sum(r["failures"] for r in json.loads(out))
            assert status == int(failures > 0)

    def test_custom_grid(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "verify", "--suite", "principal",
                           "--re-range", "-2", "2", "--im-range", "0", "1", "--step", "1")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and rows[0]["cases"] == str(5 * 2 + 5)

    def test_rejects_bad_grid(self, capsys):
        code, _, err = run(capsys, "verify", "--im-range", "-9", "9")
        assert code == 2
        with pytest.raises(SystemExit):
            main(["verify", "--tol", "0"])


class TestSpiral:
    def summary(self, text):
        block = text.split("\n\n")[1]
        return list(csv.DictReader(io.StringIO(block)))

    def test_one_segment(self):
        (row,) = self.summary(cmd_spiral(1))
        assert (row["index"], row["exact_length"], float(row["decimal_length"])) == ("1", "1", 1.0)

    def test_five_lengths(self):
        rows = self.summary(cmd_spiral(5))
        assert [r["exact_length"] for r in rows] == ["1", "-1 + 1*phi", "2 - 1*phi", "-3 + 2*phi", "5 - 3*phi"]
        phi = (1 + 5**0.5) / 2
        expected = [1, phi - 1, 2 - phi, 2 * phi - 3, 5 - 3 * phi]
        assert [float(r["decimal_length"]) for r in rows] == pytest.approx(expected, rel=1e-14)

    def test_points_block(self):
        points = cmd_spiral(3, 4).split("\n\n")[0]
        rows = list(csv.DictReader(io.StringIO(points)))
        assert len(rows) == 12 and list(rows[0]) == ["segment_index", "t", "x", "y"]

    def test_svg(self):
        svg = cmd_spiral(12, 32, "svg")
        assert svg.startswith("<?xml") and 'xmlns="http://www.w3.org/2000/svg"' in svg
        assert re.search(r'<svg [^>]*width="\d+" height="\d+" viewBox="[^"]+"', svg)
        paths = re.findall(r' d="([^"]+)"', svg)
        assert len(paths) == 12
        ends = []
        for d in paths:
            nums = [float(v) for v in re.findall(r"-?\d+(?:\.\d+)?(?:e-?\d+)?", d)]
            ends.append(((nums[0], nums[1]), (nums[-2], nums[-1])))
        for (_, end), (start, _) in zip(ends, ends[1:]):
            assert abs(end[0] - start[0]) <= 1e-9 and abs(end[1] - start[1]) <= 1e-9

    def test_svg_viewbox_margin(self):
        svg = cmd_spiral(20, 16, "svg")
        x, y, w, h = (float(v) for v in re.search(r'viewBox="([^"]+)"', svg).group(1).split())
        assert (w, h) == pytest.approx((1.1, 1.1 * 1.618033988749895), rel=1e-9)
        assert (x, y) == pytest.approx((-0.05, -1 - 0.05 * 1.618033988749895), rel=1e-9)

    def test_write_file(self, tmp_path, capsys):
        target = tmp_path / "spiral.svg"
        code, _, _ = run(capsys, "spiral", "--segments", "4", "--format", "svg", "--out", str(target))
        assert code == 0 and target.read_text().count("<path") == 4

    def test_write_failure(self, tmp_path, capsys):
        code, _, err = run(capsys, "spiral", "--segments", "4", "--out", str(tmp_path / "missing" / "x.csv"))
        assert code == 2 and "cannot write" in err

    def test_resolution_cap(self, capsys):
        code, _, err = run(capsys, "spiral", "--segments", "100000")
        assert code == 2
