import sys
from typing import Optional

import fsspec


def read_text(url: Optional[str]) -> str:
    """Reads a whole file from any fsspec url; None or ``-`` reads standard input."""
    if url is None or url == "-":
        return sys.stdin.read()
    with fsspec.open(url, "r") as f:
        return f.read()


def write_text(text: str, url: Optional[str]):
    """Writes ``text`` plus a trailing newline to ``url``, or to standard output if ``url`` is None or ``-``."""
    if url is None or url == "-":
        sys.stdout.write(text + "\n")
        sys.stdout.flush()
        return
    with fsspec.open(url, "w") as f:
        f.write(text + "\n")


def read_input(url: Optional[str], inline: Optional[str] = None) -> str:
    """``inline`` wins over ``url``; inside it ``;`` separates lines."""
    if inline is not None:
        return inline.replace(";", "\n")
    return read_text(url)
