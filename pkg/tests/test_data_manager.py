import pytest

from src.clutter.clutter_logic import Clutter
from src.common.data_manager import (
    DataManager, dumps, extension_for, parse_clutter, parse_clutter_text, parse_graph,
    parse_graph_text, parse_set_system, parse_set_system_text,
)
from src.common.errors import ArgumentError, ParseError
from src.graphs.mixed_graph import MixedGraph


def test_set_system_with_comments(chain3):
    text = "# chain\nn 3\n000\n100  # e1\n\n110\n111\n"
    assert parse_set_system_text(text) == chain3


@pytest.mark.parametrize('text, line, column', [
    ("n 3\n102\n", 2, 2),
    ("n 3\n10\n", 2, 1),
    ("n 3\n100\n  100\n", 3, 3),
    ("n 3\n100 010\n", 2, 5),
    ("m 3\n", 1, 1),
    ("n x\n", 1, 3),
])
def test_set_system_errors_carry_locations(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_set_system_text(text, 'bad.ss')
    assert (err.value.line, err.value.column) == (line, column)
    assert err.value.location() == f'bad.ss:{line}:{column}'


def test_missing_header():
    with pytest.raises(ParseError) as err:
        parse_set_system_text("# nothing here\n")
    assert err.value.line is None


def test_clutter_format():
    C = parse_clutter_text("ground 3\n1 2\n1 3\n2 3\n")
    assert C.sets() == [(1, 2), (1, 3), (2, 3)]
    assert parse_clutter_text("ground 2\n-\n").has_empty_member
    assert parse_clutter_text("ground 2\n").has_no_members


@pytest.mark.parametrize('text, line', [
    ("ground 3\n1 4\n", 2),
    ("ground 3\n1 2\n1 2\n", 3),
    ("ground 3\n1\n1 2\n", 3),
    ("ground 3\n2 2\n", 2),
    ("ground 3\na\n", 2),
])
def test_clutter_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_clutter_text(text)
    assert err.value.line == line


def test_graph_format():
    G = parse_graph_text("vertices 3\na 1 2\ne 2 3\ne 3 1\ne 2 1\n")
    assert G == MixedGraph(3, ((1, 2),), ((2, 3), (3, 1), (2, 1)))


@pytest.mark.parametrize('text, line, column', [
    ("vertices 3\nx 1 2\n", 2, 1),
    ("vertices 3\ne 1\n", 2, 1),
    ("vertices 3\ne 1 4\n", 2, 5),
    ("vertices 3\na 2 2\n", 2, 3),
])
def test_graph_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_graph_text(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_save_and_load(tmp_path, chain3):
    path = tmp_path / 'chain.ss'
    DataManager(str(path)).save(chain3)
    assert path.read_text() == "n 3\n000\n100\n110\n111\n"
    assert parse_set_system(str(path)) == chain3


def test_dumps_each_kind():
    assert dumps(Clutter.from_sets(2, [()])) == "ground 2\n-\n"
    assert dumps(MixedGraph(2, (), ((1, 2),))) == "vertices 2\ne 1 2\n"
    assert extension_for(Clutter(1)) == '.cl'
    with pytest.raises(ArgumentError):
        dumps('not a system')


def test_unknown_extension_and_missing_file(tmp_path):
    with pytest.raises(ArgumentError):
        DataManager(str(tmp_path / 'x.txt'))
    with pytest.raises(ParseError):
        DataManager(str(tmp_path / 'missing.ss')).load()


def test_shipped_fixtures_load(fixture_path, chain3):
    assert parse_set_system(fixture_path('chain.ss')) == chain3
    assert len(parse_clutter(fixture_path('triangle.cl'))) == 3
    assert parse_graph(fixture_path('k22-dijoin.mg')).is_digraph
    assert len(parse_set_system(fixture_path('cycle-space-k4.ss'))) == 8
