import io
import uuid

import fsspec

from eqschubert.utils.fsspec_utils import read_input, read_text, write_text


def test_write_then_read_through_fsspec():
    url = f"memory://io-{uuid.uuid4().hex}/class.txt"
    write_text("s1: 1", url)
    assert read_text(url) == "s1: 1\n"
    with fsspec.open(url, "r") as f:
        assert f.read() == "s1: 1\n"


def test_standard_streams(capsys, monkeypatch):
    write_text("e: t1", None)
    write_text("s1: 1", "-")
    assert capsys.readouterr().out == "e: t1\ns1: 1\n"
    monkeypatch.setattr("sys.stdin", io.StringIO("x1 + x2\n"))
    assert read_text("-") == "x1 + x2\n"


def test_inline_input_wins(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ignored"))
    assert read_input(None, "e: t1;s1: 1") == "e: t1\ns1: 1"
    assert read_input(None) == "ignored"
