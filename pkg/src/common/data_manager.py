"""Data manager for loading and saving set-system, clutter and graph files (common).

Three line-oriented text formats, all with `#` comments and blank lines ignored:

    .ss   `n <k>` header, then one bitstring per point (character i is coordinate i)
    .cl   `ground <m>` header, then one member per line as 1-based indices (`-` is the empty member)
    .mg   `vertices <k>` header, then `a <u> <v>` per arc and `e <u> <v>` per edge
"""

import logging
import os
from typing import Iterator, List, Optional, Tuple, Union

from ..clutter.clutter_logic import Clutter
from ..graphs.mixed_graph import MixedGraph
from ..setsys.set_system import SetSystem, mask_of
from .errors import ArgumentError, ParseError


logger = logging.getLogger(__name__)

SET_SYSTEM_EXT = '.ss'
CLUTTER_EXT = '.cl'
GRAPH_EXT = '.mg'

Loaded = Union[SetSystem, Clutter, MixedGraph]
Token = Tuple[str, int]


def _lines(text: str) -> Iterator[Tuple[int, List[Token]]]:
    """(line number, [(token, 1-based column)]) for every non-blank, non-comment line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0]
        tokens: List[Token] = []
        col = 0
        for piece in body.split():
            col = body.index(piece, col)
            tokens.append((piece, col + 1))
            col += len(piece)
        if tokens:
            yield number, tokens


def _int(token: Token, source: str, line: int, what: str) -> int:
    text, col = token
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", source, line, col)


def _header(lines: Iterator[Tuple[int, List[Token]]], keyword: str, source: str, least: int) -> int:
    try:
        line, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{keyword} <count>' header", source)
    if len(tokens) != 2 or tokens[0][0] != keyword:
        raise ParseError(f"expected '{keyword} <count>' header", source, line, tokens[0][1])
    value = _int(tokens[1], source, line, keyword)
    if value < least:
        raise ParseError(f"{keyword} must be at least {least}, got {value}", source, line, tokens[1][1])
    return value


def parse_set_system_text(text: str, source: str = '<string>') -> SetSystem:
    lines = _lines(text)
    n = _header(lines, 'n', source, 1)
    points: List[int] = []
    seen = set()
    for line, tokens in lines:
        if len(tokens) != 1:
            raise ParseError("expected one bitstring per line", source, line, tokens[1][1])
        bits, col = tokens[0]
        if len(bits) != n:
            raise ParseError(f"point has {len(bits)} coordinates, expected {n}", source, line, col)
        bad = next((i for i, ch in enumerate(bits) if ch not in '01'), None)
        if bad is not None:
            raise ParseError(f"unexpected character {bits[bad]!r}", source, line, col + bad)
        p = sum(1 << k for k, ch in enumerate(bits) if ch == '1')
        if p in seen:
            raise ParseError(f"duplicate point {bits}", source, line, col)
        seen.add(p)
        points.append(p)
    try:
        return SetSystem(n, points)
    except ArgumentError as e:
        raise ParseError(str(e), source)


def parse_clutter_text(text: str, source: str = '<string>') -> Clutter:
    lines = _lines(text)
    m = _header(lines, 'ground', source, 0)
    members: List[int] = []
    for line, tokens in lines:
        if [t for t, _ in tokens] == ['-']:
            member = 0
        else:
            elems = []
            for token in tokens:
                e = _int(token, source, line, 'element')
                if not 1 <= e <= m:
                    raise ParseError(f"element {e} outside [1, {m}]", source, line, token[1])
                elems.append(e)
            if len(set(elems)) != len(elems):
                raise ParseError("repeated element in member", source, line, tokens[0][1])
            member = mask_of(elems)
        for other in members:
            if other == member:
                raise ParseError("duplicate member", source, line, tokens[0][1])
            if other & member in (other, member):
                raise ParseError("member is nested with an earlier member", source, line, tokens[0][1])
        members.append(member)
    return Clutter(m, members)


def parse_graph_text(text: str, source: str = '<string>') -> MixedGraph:
    lines = _lines(text)
    k = _header(lines, 'vertices', source, 1)
    arcs, edges = [], []
    for line, tokens in lines:
        kind = tokens[0][0]
        if kind not in ('a', 'e'):
            raise ParseError(f"expected 'a' or 'e', got {kind!r}", source, line, tokens[0][1])
        if len(tokens) != 3:
            raise ParseError(f"'{kind}' lines take two endpoints", source, line, tokens[0][1])
        ends = []
        for token in tokens[1:]:
            v = _int(token, source, line, 'vertex')
            if not 1 <= v <= k:
                raise ParseError(f"vertex {v} outside [1, {k}]", source, line, token[1])
            ends.append(v)
        if ends[0] == ends[1]:
            raise ParseError("loops are not allowed", source, line, tokens[1][1])
        (arcs if kind == 'a' else edges).append(tuple(ends))
    return MixedGraph(k, tuple(arcs), tuple(edges))


def format_set_system(S: SetSystem) -> str:
    return '\n'.join([f"n {S.n}"] + S.to_bitstrings()) + '\n'


def format_clutter(C: Clutter) -> str:
    rows = [' '.join(map(str, s)) or '-' for s in C.sets()]
    return '\n'.join([f"ground {C.ground}"] + rows) + '\n'


def format_graph(G: MixedGraph) -> str:
    rows = [f"a {u} {v}" for u, v in G.arcs] + [f"e {u} {v}" for u, v in G.edges]
    return '\n'.join([f"vertices {G.vcount}"] + rows) + '\n'


class DataManager:
    """Loads and saves one input file, choosing the format by extension."""

    def __init__(self, path: str, kind: Optional[str] = None):
        self.path = path
        self.kind = kind or os.path.splitext(path)[1]
        if self.kind not in (SET_SYSTEM_EXT, CLUTTER_EXT, GRAPH_EXT):
            raise ArgumentError(f"unknown file type {self.kind!r} for {path}")

    def read_text(self) -> str:
        try:
            with open(self.path, encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise ParseError(f"cannot read file: {e.strerror}", self.path)

    def load(self) -> Loaded:
        text = self.read_text()
        if self.kind == SET_SYSTEM_EXT:
            obj: Loaded = parse_set_system_text(text, self.path)
        elif self.kind == CLUTTER_EXT:
            obj = parse_clutter_text(text, self.path)
        else:
            obj = parse_graph_text(text, self.path)
        logger.info("loaded %s from %s", type(obj).__name__, self.path)
        return obj

    def save(self, obj: Loaded) -> None:
        with open(self.path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(dumps(obj))
        logger.info("wrote %s", self.path)


def dumps(obj: Loaded) -> str:
    if isinstance(obj, SetSystem):
        return format_set_system(obj)
    if isinstance(obj, Clutter):
        return format_clutter(obj)
    if isinstance(obj, MixedGraph):
        return format_graph(obj)
    raise ArgumentError(f"cannot serialise {type(obj).__name__}")


def extension_for(obj: Loaded) -> str:
    if isinstance(obj, SetSystem):
        return SET_SYSTEM_EXT
    if isinstance(obj, Clutter):
        return CLUTTER_EXT
    return GRAPH_EXT


def parse_set_system(path: str) -> SetSystem:
    obj = DataManager(path, SET_SYSTEM_EXT).load()
    assert isinstance(obj, SetSystem)
    return obj


def parse_clutter(path: str) -> Clutter:
    obj = DataManager(path, CLUTTER_EXT).load()
    assert isinstance(obj, Clutter)
    return obj


def parse_graph(path: str) -> MixedGraph:
    obj = DataManager(path, GRAPH_EXT).load()
    assert isinstance(obj, MixedGraph)
    return obj