import os
import shutil

import pytest

from nutcirc.appendixManager import AppendixManager, appendixGoldenCheck
from nutcirc.errors import ConfigurationError
from nutcirc.families import TABLE_MODULI, PolyKind, generateTable

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "appendix")


@pytest.fixture
def goldenCopy(tmp_path):
    target = tmp_path / "appendix"
    shutil.copytree(GOLDEN_DIR, str(target))
    return target


def test_golden_files_match():
    report = appendixGoldenCheck(GOLDEN_DIR)
    assert report.passed
    assert report.mismatches == []
    assert len(report.tablesChecked) == 4 * len(TABLE_MODULI)
    assert report.rowsChecked == 4 * sum(TABLE_MODULI)


def test_default_path_is_the_shipped_directory(monkeypatch):
    monkeypatch.delenv("NUTCIRC_APPENDIX_DIR", raising=False)
    assert AppendixManager().check(kinds=["q"], moduli=[3]).passed


def test_environment_overrides_path(monkeypatch, goldenCopy):
    os.remove(str(goldenCopy / "u_6.txt"))
    monkeypatch.setenv("NUTCIRC_APPENDIX_DIR", str(goldenCopy))
    manager = AppendixManager()
    assert manager.path == str(goldenCopy)
    with pytest.raises(ConfigurationError):
        manager.check()


def test_single_perturbed_coefficient(goldenCopy):
    fileName = goldenCopy / "q_3.txt"
    text = fileName.read_text()
    assert "0;2:3,0:-3;1:-3,0:-6" in text
    fileName.write_text(text.replace("0;2:3,0:-3;1:-3,0:-6", "0;2:3,0:-3;1:-3,0:-7"))

    report = AppendixManager(str(goldenCopy)).check()
    assert not report.passed
    assert len(report.mismatches) == 1
    mismatch = report.mismatches[0]
    assert (mismatch.kind, mismatch.modulus, mismatch.residue) == (PolyKind.Q, 3, 0)
    assert mismatch.toJSON()["expected"]["remainder"] == "1:-3,0:-7"
    assert mismatch.toJSON()["actual"]["remainder"] == "1:-3,0:-6"


def test_missing_row_is_a_mismatch(goldenCopy):
    fileName = goldenCopy / "w_5.txt"
    lines = fileName.read_text().splitlines(True)
    fileName.write_text("".join(line for line in lines if not line.startswith("4;")))

    report = AppendixManager(str(goldenCopy)).check(kinds=[PolyKind.W])
    assert [(m.residue, m.expected) for m in report.mismatches] == [(4, None)]


def test_missing_directory(tmp_path):
    with pytest.raises(ConfigurationError):
        appendixGoldenCheck(str(tmp_path / "nowhere"))


def test_malformed_line(goldenCopy):
    with open(str(goldenCopy / "r_10.txt"), "a") as goldenFile:
        goldenFile.write("10;garbage\n")
    with pytest.raises(ConfigurationError):
        AppendixManager(str(goldenCopy)).check(kinds=["r"], moduli=[10])


def test_bad_polynomial_in_golden_file(goldenCopy):
    (goldenCopy / "q_5.txt").write_text("0;1:1,2:1;0:1\n")
    with pytest.raises(ConfigurationError):
        AppendixManager(str(goldenCopy)).check(kinds=["q"], moduli=[5])


def test_golden_files_are_regenerated_verbatim():
    manager = AppendixManager(GOLDEN_DIR)
    for kind in PolyKind:
        for modulus in TABLE_MODULI:
            with open(manager.fileName(kind, modulus)) as goldenFile:
                assert manager.formatGolden(kind, modulus, generateTable(kind, modulus)) == goldenFile.read()


def test_report_json():
    jsonReport = AppendixManager(GOLDEN_DIR).check(kinds=["u"], moduli=[6, 10]).toJSON()
    assert jsonReport == {"passed": True, "rows_checked": 16, "tables_checked": ["u_6", "u_10"], "mismatches": []}
