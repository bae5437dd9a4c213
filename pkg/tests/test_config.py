import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexdrop.config import example_config, parse_config, serialize_config
from hexdrop.errors import ConfigError, ParityError, ParseError
from hexdrop.geometry import LatticeIndex
from hexdrop.network import CellSpec, NetworkConfig


def test_minimal_config():
    cfg = parse_config("lattice L0=1.0\ncell m=0 n=0 sectors=1 nodes=100")
    assert cfg.L0 == 1.0
    assert len(cfg.cells) == 1
    cell = cfg.cells[0]
    assert cell.idx == LatticeIndex(0, 0)
    assert cell.L == 1.0  # defaults to L0
    assert cfg.total == 100


def test_comments_blank_lines_and_explicit_L():
    text = """
    # header
    lattice L0=2.5   # reference size

    cell m=1 n=-1 L=2 sectors=3 nodes=1,2,3
    """
    cfg = parse_config(text)
    assert cfg.cells[0].L == 2.0
    assert cfg.cells[0].nodes_per_sector == (1, 2, 3)


def test_parity_violation():
    with pytest.raises(ParityError, match="line 2"):
        parse_config("lattice L0=1\ncell m=2 n=1 sectors=1 nodes=5")


def test_node_list_length_mismatch():
    with pytest.raises(ConfigError, match="expected 3 node counts"):
        parse_config("lattice L0=1\ncell m=0 n=0 sectors=3 nodes=10,20")


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=5 colour=red", 2),
        ("lattice L0=1\ncell m=0 n=0 sectors=1", 2),
        ("cell m=0 n=0 sectors=1 nodes=1\nlattice L0=1", 1),
        ("lattice L0=1\nlattice L0=2", 2),
        ("lattice L0=abc", 1),
        ("lattice L0=1\n\n\nnode m=0", 4),
        ("lattice L0=1\ncell m=0.5 n=0 sectors=1 nodes=1", 2),
        ("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=x", 2),
        ("lattice L0=1\ncell m=0 m=0 n=0 sectors=1 nodes=1", 2),
        ("lattice L0=1\ncell m0 n=0 sectors=1 nodes=1", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_config(text)
    assert info.value.lineno == lineno


def test_missing_lattice_line():
    with pytest.raises(ParseError):
        parse_config("# nothing here\n")


@pytest.mark.parametrize(
    "text",
    [
        "lattice L0=1\ncell m=0 n=0 sectors=1 nodes=1\ncell m=0 n=0 sectors=1 nodes=2",
        "lattice L0=1\ncell m=0 n=0 sectors=4 nodes=1,1,1,1",
        "lattice L0=1\ncell m=0 n=0 L=2 sectors=1 nodes=1",
        "lattice L0=-1\ncell m=0 n=0 sectors=1 nodes=1",
        "lattice L0=1\ncell m=0 n=0 sectors=1 nodes=-4",
    ],
)
def test_semantic_errors(text):
    with pytest.raises(ConfigError):
        parse_config(text)


cells = st.builds(
    lambda m, k, L, sectors, counts: CellSpec((m, m + 2 * k), L, sectors, counts[:sectors] + [0] * (sectors - len(counts[:sectors]))),
    st.integers(-20, 20),
    st.integers(-20, 20),
    st.floats(0.01, 1.0),
    st.sampled_from([1, 3, 6]),
    st.lists(st.integers(0, 10_000), max_size=6),
)


@given(st.lists(cells, max_size=12, unique_by=lambda c: c.idx))
def test_round_trip(cell_list):
    cfg = NetworkConfig(1.0, cell_list)
    assert parse_config(serialize_config(cfg)) == cfg


def test_example_config():
    cfg = example_config()
    assert len(cfg.cells) == 19
    assert cfg.total == 3920
    assert {c.idx.ring() for c in cfg.cells} == {0, 1, 2}
    assert parse_config(serialize_config(cfg)) == cfg
