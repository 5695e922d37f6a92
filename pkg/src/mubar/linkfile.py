"""Link files: JSON with ``type`` braid or pd.

    {"type": "braid", "strands": 3, "word": "s2 s1^-1 s2 s1^-1 s2 s1^-1"}

    {"type": "pd",
     "components": [[1, 2], [3, 4]],
     "crossings": [
       [1, 4, 2, 3, 1],
       [4, 1, 3, 2, 1]
     ]}

Crossings are ``[a, b, c, d, sign]`` counterclockwise from the incoming
under-edge. Components list edge labels in the direction of travel; their
order is the Milnor index order. ``print_link`` output is canonical, so
``print_link(parse_link(s)) == s`` for any file it wrote.
"""

from __future__ import annotations

import json
from pathlib import Path

from .diagrams import DiagramError, PDCode
from .words import BraidWord, WordError, parse_braid

Link = BraidWord | PDCode


class LinkFileError(ValueError):
    pass


def _require(data: dict, key: str, where: str):
    if key not in data:
        raise LinkFileError(f"{where}: missing field {key!r}")
    return data[key]


def parse_link(text: str, where: str = "<input>") -> Link:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LinkFileError(f"{where}:{e.lineno}:{e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise LinkFileError(f"{where}: expected a JSON object")
    kind = _require(data, "type", where)
    if kind == "braid":
        strands = _require(data, "strands", where)
        word = _require(data, "word", where)
        if not isinstance(strands, int) or not isinstance(word, str):
            raise LinkFileError(f"{where}: 'strands' must be an integer and 'word' a string")
        try:
            return parse_braid(word, strands)
        except WordError as e:
            raise LinkFileError(f"{where}: word: {e}") from None
    if kind == "pd":
        comps = _require(data, "components", where)
        crossings = _require(data, "crossings", where)
        for k, x in enumerate(crossings):
            if not (isinstance(x, list) and len(x) == 5 and all(isinstance(v, int) for v in x)):
                raise LinkFileError(f"{where}: crossing {k}: expected [a, b, c, d, sign] of integers")
            if x[4] not in (1, -1):
                raise LinkFileError(f"{where}: crossing {k}: sign must be +1 or -1")
        try:
            return PDCode(tuple(tuple(x) for x in crossings), tuple(tuple(c) for c in comps))
        except (DiagramError, TypeError, ValueError) as e:
            raise LinkFileError(f"{where}: {e}") from None
    raise LinkFileError(f"{where}: unknown link type {kind!r} (expected 'braid' or 'pd')")


def print_link(link: Link) -> str:
    if isinstance(link, BraidWord):
        return json.dumps({"type": "braid", "strands": link.strands, "word": str(link)}) + "\n"
    lines = ['{"type": "pd",', ' "components": ' + json.dumps([list(c) for c in link.components]) + ",",
             ' "crossings": [']
    rows = [f"   {json.dumps([*x.labels, x.sign])}" for x in link.crossings]
    lines.append(",\n".join(rows))
    lines.append(" ]}")
    return "\n".join(line for line in lines if line) + "\n"


def read_link(path: str | Path) -> Link:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise LinkFileError(f"{path}: {e.strerror}") from None
    return parse_link(text, str(path))


def write_link(link: Link, path: str | Path) -> None:
    Path(path).write_text(print_link(link))


def component_count(link: Link) -> int:
    return link.strands if isinstance(link, BraidWord) else link.m
