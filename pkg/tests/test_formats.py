import pytest

from tolfca import formats
from tolfca.blocks import factor_lattice
from tolfca.corpus import generate_corpus
from tolfca.errors import FormatError
from tolfca.fca import FormalContext, concepts, tolerance_context
from tolfca.relations import enumerate_tolerances, order

from conftest import le_plus, sym

LATTICE_FILES = ["c2.json", "c3.json", "b2.json", "n5.json", "m3.json"]
CXT_FILES = ["c3_order.cxt", "c3_r1.cxt", "living.cxt"]


@pytest.mark.parametrize("name", LATTICE_FILES)
def test_lattice_json_round_trip(fixtures, name):
    L = formats.load_lattice(fixtures / name)
    text = formats.dumps_lattice(L)
    again = formats.lattice_from_dict(__import__("json").loads(text))
    assert again == L and again.name == L.name
    assert formats.dumps_lattice(again) == text


def test_corpus_round_trip(tmp_path):
    for L in generate_corpus(6):
        p = tmp_path / f"{L.name}.json"
        formats.save_lattice(L, p)
        assert formats.load_lattice(p) == L


@pytest.mark.parametrize("name", ["glued.json", "t0m.json", "r1.json"])
def test_relation_json_round_trip(fixtures, tmp_path, name):
    L = formats.load_lattice(fixtures / "c3.json")
    R = formats.load_relation(fixtures / name, L)
    formats.save_relation(R, tmp_path / "r.json")
    assert formats.load_relation(tmp_path / "r.json", L) == R


def test_relation_fixtures(fixtures):
    L = formats.load_lattice(fixtures / "c3.json")
    assert formats.load_relation(fixtures / "glued.json", L) == sym(L, ("0", "m"), ("m", "1"))
    assert formats.load_relation(fixtures / "r1.json", L) == le_plus(L, ("m", "0"))
    for T in enumerate_tolerances(L):
        assert formats.relation_from_dict(formats.relation_to_dict(T), L) == T


def test_relation_for_other_lattice(fixtures):
    B2 = formats.load_lattice(fixtures / "b2.json")
    with pytest.raises(FormatError):
        formats.load_relation(fixtures / "glued.json", B2)


@pytest.mark.parametrize("name", CXT_FILES)
def test_cxt_round_trip(fixtures, name):
    text = (fixtures / name).read_text()
    K = formats.parse_cxt(text)
    assert formats.dumps_cxt(K) == text
    assert formats.parse_cxt(formats.dumps_cxt(K)) == K


def test_cxt_contents(fixtures):
    L = formats.load_lattice(fixtures / "c3.json")
    K = formats.load_cxt(fixtures / "c3_r1.cxt")
    assert K == FormalContext(L.elem_names, L.elem_names, le_plus(L, ("m", "0")).matrix)
    assert formats.load_cxt(fixtures / "c3_order.cxt") == FormalContext(
        L.elem_names, L.elem_names, order(L).matrix)


def test_cxt_without_attributes():
    K = FormalContext(["a", "b"], [], [[], []])
    assert formats.parse_cxt(formats.dumps_cxt(K)) == K


@pytest.mark.parametrize("text", [
    "", "A\n\n1\n1\n\ng\nm\nX\n", "B\n\nx\n1\n\ng\nm\nX\n", "B\n\n1\n1\nz\ng\nm\nX\n",
    "B\n\n1\n1\n\ng\nm\nXX\n", "B\n\n1\n1\n\ng\nm\nQ\n", "B\n\n2\n1\n\ng\nm\nX\n",
])
def test_cxt_rejects_malformed(text):
    with pytest.raises(FormatError):
        formats.parse_cxt(text)


@pytest.mark.parametrize("data", [
    {}, {"elements": "abc"}, {"elements": ["a"], "covers": [["a"]]}, [],
])
def test_lattice_json_rejects_malformed(data):
    with pytest.raises(FormatError):
        formats.lattice_from_dict(data)


def test_invalid_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(FormatError):
        formats.load_lattice(p)


def count_dot(text):
    nodes = [ln for ln in text.splitlines() if "[label=" in ln]
    edges = [ln for ln in text.splitlines() if "->" in ln]
    return len(nodes), len(edges)


def test_dot_examples(fixtures, tmp_path):
    C2 = formats.load_lattice(fixtures / "c2.json")
    B2 = formats.load_lattice(fixtures / "b2.json")
    C3 = formats.load_lattice(fixtures / "c3.json")
    assert count_dot(formats.to_dot(C2)) == (2, 1)
    assert count_dot(formats.to_dot(B2)) == (4, 4)
    CL = concepts(formats.load_cxt(fixtures / "c3_r1.cxt"))
    text = formats.to_dot(CL)
    assert count_dot(text) == (2, 1)
    assert '"{0,m}|{0,m,1}"' in text
    F = factor_lattice(C3, sym(C3, ("0", "m"), ("m", "1")))
    assert '"[0,m]"' in formats.to_dot(F)
    formats.export_dot(B2, tmp_path / "b2.dot")
    assert (tmp_path / "b2.dot").read_text() == formats.to_dot(B2)
    assert "rankdir=BT" in formats.to_dot(B2)


def test_dot_is_stable(fixtures):
    L = formats.load_lattice(fixtures / "n5.json")
    T = enumerate_tolerances(L)[2]
    CL = concepts(tolerance_context(L, T))
    assert formats.to_dot(CL) == formats.to_dot(CL)
    with pytest.raises(TypeError):
        formats.to_dot("nope")
