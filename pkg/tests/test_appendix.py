from pathlib import Path

import pytest

from simplexgraph.appendix import (
    DATA_ENV,
    DATA_FILE,
    AppendixParseError,
    load_appendix,
    parse_appendix,
)

BUNDLED = load_appendix()
TEXT = (Path(BUNDLED.source)).read_text()


def test_bundled_sizes():
    t = BUNDLED
    assert (len(t.six), len(t.x3), len(t.x0), len(t.pairs)) == (6, 20, 20, 10)
    assert all(len(e.bold) == 2 for e in t.x3)
    assert t.by_name()["L_136"].bold == {4, 5}
    assert t.by_name()["L_136"].label == (1, 3, 6)
    assert (t.pairs[0].first, t.pairs[0].second, t.pairs[0].st) == ((1, 3, 6), (2, 4, 5), (4, 5))


def corrupt(old, new):
    assert old in TEXT
    return TEXT.replace(old, new, 1)


@pytest.mark.parametrize(
    "old,new,fragment",
    [
        ("L_136: 011aa", "L_136: 011a", "not 5 symbols"),
        ("1baa0; bold=4,5", "1baa0; bold=4", "two distinct bold rows"),
        ("1baa0; bold=4,5", "1baa0", "need bold marks"),
        ("[PAIRS]", "[PAIRZ]", "unknown section"),
        ("1,3,6 | 2,4,5 | 4,5", "1,3,6 | 2,4,5", "pair row"),
        ("L_12: 01bbb|10ab1|1b01b|1110a|1aba0", "L_12: 01bbb|10ab1|1b01b|1110a|1aba0; bold=1,2", "only belong"),
        ("L_21:", "L_12:", "duplicate entry"),
    ],
)
def test_parse_errors_carry_line_numbers(old, new, fragment):
    bad = corrupt(old, new)
    with pytest.raises(AppendixParseError) as exc:
        parse_appendix(bad, source="bad.txt")
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"bad.txt:{exc.value.lineno}:")
    assert exc.value.lineno > 0


def test_missing_section_and_stray_entry():
    with pytest.raises(AppendixParseError, match="missing section"):
        parse_appendix(TEXT.split("[X0]")[0])
    with pytest.raises(AppendixParseError, match="outside of any section"):
        parse_appendix("L_1: 011aa|10aa1|1a01a|11b0b|1b1b0\n")


def test_named_section_optional():
    t = parse_appendix(TEXT.split("[NAMED]")[0])
    assert t.named == []


def test_env_override(tmp_path, monkeypatch):
    (tmp_path / DATA_FILE).write_text(TEXT)
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    assert load_appendix().source == str(tmp_path / DATA_FILE)
    monkeypatch.setenv(DATA_ENV, str(tmp_path / "nowhere"))
    with pytest.raises(FileNotFoundError, match="nowhere"):
        load_appendix()
