import json
import subprocess
import sys
from io import StringIO

import pytest

from pogroups.cli import run_command

QUAD = """dim 2
group g { gen 1 0 ; gen 0 1 }
cone c { gen 1 0 ; gen 0 1 }
stack s { level 1 sqrt2 }
stack lex { level 1 0 ; level 0 1 }
stack flip { level 1 0 ; level 0 -1 }
stack tie { level 1 1 }
"""


def run(argv):
    out, err = StringIO(), StringIO()
    code = run_command(argv, out, err)
    return code, [json.loads(line) for line in out.getvalue().splitlines()], err.getvalue()


@pytest.fixture
def quad(tmp_path):
    p = tmp_path / "quad.pog"
    p.write_text(QUAD)
    return str(p)


def test_sign(quad):
    out = StringIO()
    assert run_command(["sign", quad, "--stack", "s", "--point", "1 -1"], out) == 0
    assert out.getvalue() == '{"sign":"neg","value":"1-1*sqrt2"}\n'


def test_sign_reports_deciding_level(quad):
    code, recs, _ = run(["sign", quad, "--stack", "lex", "--point", "0 -5"])
    assert code == 0 and recs == [{"sign": "neg", "value": "-5"}]
    code, recs, _ = run(["sign", quad, "--stack", "lex", "--point", "0 0"])
    assert recs == [{"sign": "zero", "value": "0"}]


def test_is_extension(quad):
    code, recs, _ = run(["is-extension", quad, "--stack", "lex", "--cone", "c", "--group", "g"])
    assert (code, recs) == (0, [{"extension": True}])
    code, recs, _ = run(["is-extension", quad, "--stack", "flip", "--cone", "c"])
    assert code == 1 and recs == [{"extension": False, "violator": ["0", "1"]}]
    code, _, err = run(["is-extension", quad, "--stack", "tie", "--cone", "c"])
    assert code == 2 and "linear" in err


def test_separate_inside_closure(quad):
    code, recs, err = run(["separate", quad, "--cone", "c", "--point", "1 1"])
    assert code == 2 and recs == [] and "not separable" in err


def test_closure(quad):
    code, recs, _ = run(["closure", quad, "--cone", "c", "--point", "2 3"])
    assert code == 0 and recs[0]["member"] and recs[0]["coefficients"] == ["2", "3"]
    code, recs, _ = run(["closure", quad, "--cone", "c", "--point", "-1 0"])
    assert code == 1 and not recs[0]["member"]
    code, recs, _ = run(["closure", quad, "--cone", "c", "--point", "1/2 0"])
    assert code == 1 and recs[0]["group_element"] is False


def test_classify_and_equal(quad):
    assert run(["classify", quad, "--stack", "s"])[:2] == (0, [{"linear": True, "archimedean": True, "clarified_levels": 1}])
    assert run(["classify", quad, "--stack", "lex"])[1][0]["archimedean"] is False
    assert run(["classify", quad, "--stack", "tie"])[0] == 1
    code, recs, _ = run(["equal", quad, "--stack", "lex", "--stack2", "flip"])
    assert code == 1 and recs[0]["witness"] == ["0", "1"] and recs[0]["signs"] == ["pos", "neg"]
    assert run(["equal", quad, "--stack", "lex", "--stack2", "lex"])[:2] == (0, [{"equal": True}])


def test_holder(quad):
    code, recs, _ = run(["holder", quad, "--stack", "s", "--point", "2 1", "--bits", "30"])
    assert code == 0 and recs[0]["value"] == "2+1*sqrt2" and recs[0]["decimal"].startswith("3.41421356")
    assert run(["holder", quad, "--stack", "lex", "--point", "1 0"])[0] == 2


def test_join():
    assert run(["join", "--a", "3/2 -1", "--b", "0 4"])[:2] == (0, [{"join": ["2", "4"]}])
    assert run(["join", "--a", "1 2", "--b", "1"])[0] == 2


def test_validate(quad, tmp_path):
    code, recs, _ = run(["validate", quad])
    assert code == 1  # 'tie' is not linear
    assert recs[-1] == {"valid": False, "objects": 6}
    good = tmp_path / "good.pog"
    good.write_text("dim 2 cone c { gen 1 0 ; gen 1 1 } stack s { level 1 sqrt3 }")
    code, recs, _ = run(["validate", str(good)])
    assert code == 0 and recs[0]["pure"] and recs[-1]["valid"]


def test_harness(quad):
    code, recs, _ = run(["harness", "intersection", quad, "--cone", "c", "--samples", "12", "--extensions", "4", "--seed", "3"])
    assert code == 0 and recs[-1]["passed"] and recs[-1]["closure_applied"]
    assert len(recs) == 13
    again = run(["harness", "intersection", quad, "--cone", "c", "--samples", "12", "--extensions", "4", "--seed", "3"])
    assert again[1] == recs


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["sign", "{f}", "--stack", "nope", "--point", "1 0"], "unknown stack"),
        (["sign", "{f}", "--stack", "s", "--point", "1"], "expected 2 coordinates"),
        (["sign", "{f}", "--stack", "s", "--point", "1 a"], "malformed"),
        (["sign", "{f}", "--stack", "s"], "required"),
        (["frobnicate"], "invalid choice"),
        (["sign", "/nonexistent/file.pog", "--stack", "s", "--point", "1 0"], "No such file"),
        (["sign", "{f}", "--point", "1 0"], "name one explicitly"),
    ],
)
def test_exit_code_two(quad, argv, fragment):
    argv = [a.replace("{f}", quad) for a in argv]
    code, recs, err = run(argv)
    assert code == 2 and recs == [] and fragment in err


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.pog"
    bad.write_text("dim 2\ncone c { gen 1 }")
    code, _, err = run(["validate", str(bad)])
    assert code == 2 and "2:10" in err and "expected 2 coordinates" in err


SCENARIOS = [
    # (dim, cone generators, point)
    (2, ["1 0", "0 1"], "-1 5"),
    (2, ["1 0", "0 1"], "3 -7"),
    (2, ["1 0", "0 1"], "0 -1"),
    (2, ["2 1", "2 -1"], "0 1"),
    (2, ["2 1", "2 -1"], "-1 0"),
    (2, ["1 1"], "1 0"),
    (2, ["1 1"], "-1 -1"),
    (2, ["1 2", "3 -1"], "-2 1"),
    (3, ["1 0 0", "0 1 0", "0 0 1"], "1 1 -1"),
    (3, ["1 0 0", "0 1 0"], "0 0 1"),
    (3, ["1 1 0", "1 -1 0", "0 0 1"], "-1 0 0"),
    (3, ["1 2 3"], "3 2 1"),
    (3, ["1 0 1", "0 1 1", "-1 0 1", "0 -1 1"], "0 0 -1"),
    (3, ["1 0 1", "0 1 1", "-1 0 1", "0 -1 1"], "2 0 1"),
    (4, ["1 0 0 0", "0 1 0 0", "0 0 1 0", "0 0 0 1"], "1 -1 1 -1"),
    (4, ["1 1 0 0", "0 0 1 1"], "1 0 0 0"),
    (4, ["1 2 3 4"], "-1 0 0 0"),
    (1, ["3"], "-1"),
    (1, ["2"], "-5"),
    (2, ["1/2 1/2", "1 -1"], "-1/2 1/2"),
]


@pytest.mark.parametrize("dim, gens, point", SCENARIOS)
def test_separate_then_verify(tmp_path, dim, gens, point):
    group = "" if dim != 2 or "/" not in point else "group h { gen 1 0 ; gen 0 1 ; gen 1/2 1/2 }\n"
    base = f"dim {dim}\n{group}cone c {{ {' ; '.join('gen ' + g for g in gens)} }}\n"
    f = tmp_path / "spec.pog"
    f.write_text(base)
    code, recs, err = run(["separate", str(f), "--cone", "c", "--point", point, "--name", "sep"])
    assert code == 0, err
    assert recs[0]["sign"] == "neg"
    f.write_text(base + recs[0]["stack"] + "\n")
    assert run(["is-extension", str(f), "--stack", "sep", "--cone", "c"])[:2] == (0, [{"extension": True}])
    code, recs, _ = run(["sign", str(f), "--stack", "sep", "--point", point])
    assert code == 0 and recs[0]["sign"] == "neg"


def test_console_entry_point(quad):
    proc = subprocess.run(
        [sys.executable, "-m", "pogroups.cli", "sign", quad, "--stack", "s", "--point", "1 -1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == '{"sign":"neg","value":"1-1*sqrt2"}\n'
