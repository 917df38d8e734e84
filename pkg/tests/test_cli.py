import json
import subprocess
import sys

import pytest

from hbl import formats
from hbl.catalog import braces, cyclic, hopf_algebras, sweedler
from hbl.cli import main
from hbl.hopf import HopfAlgebra, dual_hopf
from hbl.hopfbrace import HopfBrace
from hbl.linalg import GF, K, tensor
from hbl.modules import BraceModule, standard_modules
from hbl.skewbrace import SkewBrace, enumerate_skew_braces, group_algebra
from hbl.structures import Module


def _write(path, obj):
    formats.write(path, obj)
    return str(path)


@pytest.fixture
def c2_file(tmp_path):
    return _write(tmp_path / "c2.json", formats.structure_to_json(group_algebra(cyclic(2))))


def test_check_hopf_pass(c2_file, capsys):
    assert main(["check", c2_file, "--laws", "hopf"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_check_hopf_broken(tmp_path, capsys):
    d = formats.structure_to_json(group_algebra(cyclic(2)))
    d["antipode"] = [["1", "0"], ["0", "0"]]
    path = _write(tmp_path / "broken.json", d)
    assert main(["check", path, "--laws", "hopf"]) == 1
    out = capsys.readouterr().out
    assert "FAIL antipode_left" in out


def test_check_trivial_module(tmp_path):
    h = group_algebra(cyclic(3))
    m = Module(K, tensor(h.counit, K), h.algebra)
    path = _write(tmp_path / "k.json", formats.module_to_json(m))
    assert main(["check", path, "--laws", "module"]) == 0


def test_check_bialgebra_without_antipode(tmp_path, capsys):
    from hbl.catalog import monoid_bialgebra

    path = _write(tmp_path / "m.json", formats.structure_to_json(monoid_bialgebra(), name="m"))
    assert main(["check", path, "--laws", "bialgebra"]) == 0
    assert main(["check", path, "--laws", "hopf"]) == 1
    assert "antipode_exists" in capsys.readouterr().out


def test_check_brace_and_zhu(tmp_path):
    from hbl.hopfbrace import opposite_brace

    b = opposite_brace(sweedler())
    bpath = _write(tmp_path / "b.json", formats.brace_to_json(b))
    assert main(["check", bpath, "--laws", "brace"]) == 0
    mods = {m.name: m for m in standard_modules(b)}
    reg = _write(tmp_path / "reg.json", formats.brace_module_to_json(mods["regular"], "b.json"))
    triv = _write(tmp_path / "triv.json", formats.brace_module_to_json(mods["trivial"], "b.json"))
    assert main(["check", reg, "--laws", "module"]) == 0
    assert main(["check", reg, "--laws", "zhu"]) == 1
    assert main(["check", triv, "--laws", "zhu"]) == 0


def test_check_skew_brace_file(tmp_path):
    s = enumerate_skew_braces(4)[1]
    path = _write(tmp_path / "s.json", formats.skew_brace_to_json(s))
    assert main(["check", path, "--laws", "brace"]) == 0
    d = formats.skew_brace_to_json(s)
    d["circ"][1][1], d["circ"][1][2] = d["circ"][1][2], d["circ"][1][1]
    bad = _write(tmp_path / "bad.json", d)
    assert main(["check", bad, "--laws", "brace"]) == 2


def test_parse_errors_carry_file_context(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2,\n "unit": [["1"]')
    assert main(["check", str(p), "--laws", "hopf"]) == 2
    err = capsys.readouterr().err
    assert "bad.json:2:" in err
    d = formats.structure_to_json(group_algebra(cyclic(2)))
    d["prod"] = d["prod"][:1]
    q = _write(tmp_path / "short.json", d)
    assert main(["check", q, "--laws", "algebra"]) == 2
    assert "short.json" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.json"), "--laws", "hopf"]) == 2


def test_laws_must_fit_the_object(c2_file, capsys):
    assert main(["check", c2_file, "--laws", "zhu"]) == 2
    assert "does not apply" in capsys.readouterr().err


def test_enumerate_braces(tmp_path):
    for n, count in ((1, 1), (2, 1), (4, 4)):
        out = tmp_path / f"o{n}"
        assert main(["enumerate-braces", "--order", str(n), "--out", str(out)]) == 0
        files = sorted(p.name for p in out.iterdir())
        assert len(files) == count + 1
        index = json.loads((out / f"index{n}.json").read_text())
        assert index["count"] == count


def test_enumerate_is_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["enumerate-braces", "--order", "6", "--out", str(a)])
    main(["enumerate-braces", "--order", "6", "--out", str(b)])
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    assert all((a / n).read_bytes() == (b / n).read_bytes() for n in names)


def test_enumerate_order_too_large(tmp_path, capsys):
    assert main(["enumerate-braces", "--order", "9", "--out", str(tmp_path)]) == 2
    assert "OrderTooLarge" in capsys.readouterr().err


@pytest.fixture(scope="module")
def catalog_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("catalog")
    for n in range(1, 5):
        main(["enumerate-braces", "--order", str(n), "--out", str(d)])
    return d


@pytest.mark.parametrize("theorem", ["mainth", "firstM", "ucat", "smashcat", "modcc"])
def test_verify_on_enumerated_catalog(catalog_dir, tmp_path, theorem):
    report = tmp_path / "r.json"
    code = main(["verify", "--theorem", theorem, "--catalog", str(catalog_dir),
                 "--report", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["failed"] == [] and data["instances"] > 0
    assert data["passed"] + len(data["skipped"]) == data["instances"]
    assert "wall_time" not in data


def test_verify_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "--theorem", "equiv2", "--report", str(a)])
    main(["verify", "--theorem", "equiv2", "--report", str(b)])
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["failed"] == []
    assert sum(1 for n in [data["instances"]] if n >= 50) == 1
    main(["verify", "--theorem", "hopf", "--report", str(a), "--timing"])
    assert "wall_time" in json.loads(a.read_text())


def test_verify_prime_field(tmp_path):
    assert main(["verify", "--theorem", "hopf", "--field", "gf:7"]) == 0
    assert main(["verify", "--theorem", "adjointcc", "--field", "gf:5"]) == 0


def test_verify_bad_catalog(tmp_path):
    assert main(["verify", "--theorem", "mainth", "--catalog", str(tmp_path)]) == 2


def test_dualize_twice_is_identity(tmp_path):
    for h in (sweedler(), group_algebra(cyclic(3))):
        src = _write(tmp_path / "h.json", formats.structure_to_json(h))
        assert main(["dualize", src, "--out", str(tmp_path / "d.json")]) == 0
        d = formats.load(tmp_path / "d.json")
        assert d.prod == dual_hopf(h).prod
        assert main(["dualize", str(tmp_path / "d.json"), "--out", str(tmp_path / "dd.json")]) == 0
        assert (tmp_path / "dd.json").read_text() == (tmp_path / "h.json").read_text()


def test_export_catalog(tmp_path):
    assert main(["export", "--out", str(tmp_path), "--order", "2"]) == 0
    assert main(["check", str(tmp_path / "hopf" / "H4.json"), "--laws", "hopf"]) == 0
    mods = sorted((tmp_path / "modules").iterdir())
    assert mods
    for p in mods[:5]:
        assert main(["check", str(p), "--laws", "zhu"]) == 0 or "op_H4" in p.name


def test_module_entry_point(c2_file):
    r = subprocess.run([sys.executable, "-m", "hbl", "check", c2_file, "--laws", "coalgebra"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "PASS" in r.stdout


# ---------------------------------------------------------------- formats


def test_structure_round_trips():
    for h in hopf_algebras(8):
        back = formats.loads(json.loads(formats.dumps(formats.structure_to_json(h))))
        assert isinstance(back, HopfAlgebra)
        assert (back.unit, back.prod, back.counit, back.coprod, back.antipode) == \
            (h.unit, h.prod, h.counit, h.coprod, h.antipode)
        assert back.name == h.name


def test_prime_field_round_trip():
    h = sweedler(GF(5))
    d = formats.structure_to_json(h)
    assert d["field"] == "gf:5"
    assert formats.loads(d).antipode == h.antipode


def test_brace_and_module_round_trips():
    for b in braces(3):
        back = formats.loads(formats.brace_to_json(b))
        assert isinstance(back, HopfBrace) and back == b
        for m in standard_modules(b):
            mm = formats.loads(formats.brace_module_to_json(m))
            assert isinstance(mm, BraceModule) and mm.same_structure(m)


def test_skew_brace_round_trip():
    s = enumerate_skew_braces(6)[4]
    back = formats.loads(formats.skew_brace_to_json(s))
    assert isinstance(back, SkewBrace) and (back.dot, back.circ) == (s.dot, s.circ)
