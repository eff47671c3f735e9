import json

import pytest

from gradedpi import fileio
from gradedpi.catalogue import full_catalogue
from gradedpi.errors import GradingViolation, ParseError
from gradedpi.scalars import FieldSpec


def test_round_trip_full_catalogue():
    for name, A in full_catalogue(FieldSpec.cyclotomic(12)):
        text = fileio.render(A)
        B = fileio.loads(text)
        assert B.same_data(A), name
        assert fileio.render(B) == text


def test_save_load_names_from_file_stem(tmp_path, simple):
    A = simple["z2z2-pauli"]
    data = fileio.to_dict(A)
    data.pop("name")
    p = tmp_path / "pauli.json"
    p.write_text(json.dumps(data))
    B = fileio.load(str(p))
    assert B.name == "pauli" and B.same_data(A)
    fileio.save(A, str(tmp_path / "b.json"))
    algs, names = fileio.load_dir(str(tmp_path))
    assert names == ["b", "pauli"] and algs[0].name == "z2z2-pauli"


def test_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        fileio.loads('{\n "field": "Q",\n "group" "Z/2"\n}')
    assert exc.value.line == 3 and exc.value.column is not None


@pytest.mark.parametrize("doc,msg", [
    ({"field": "Q", "basis": [{"label": "u", "degree": []}]}, "group"),
    ({"field": "Q", "group": "trivial", "basis": []}, "nonempty"),
    ({"field": "Q", "group": "Z/2", "basis": [{"label": "u"}]}, "degree"),
    ({"field": "Q", "group": "Z/2", "basis": [{"label": "u", "degree": [0]}],
      "structure": [{"i": 0, "j": 0, "k": 3, "coeff": "1"}]}, "range"),
    ({"field": "Q", "group": "Z/2", "basis": [{"label": "u", "degree": [0]}],
      "structure": [{"i": 0, "j": 0, "k": 0, "coeff": 1.5}]}, "coefficient"),
    ({"field": "Q", "group": "Z/2", "basis": [{"label": "u", "degree": [0]}, {"label": "u", "degree": [1]}]},
     "distinct"),
    ({"field": "Q(w)", "group": "Z/2", "basis": [{"label": "u", "degree": [0]}]}, None),
])
def test_malformed_documents(doc, msg):
    with pytest.raises(ParseError, match=msg):
        fileio.loads(json.dumps(doc))


def test_grading_checked_on_load():
    doc = {"field": "Q", "group": "Z/2",
           "basis": [{"label": "a", "degree": [0]}, {"label": "b", "degree": [1]}],
           "structure": [{"i": 1, "j": 1, "k": 1, "coeff": "1"}]}
    with pytest.raises(GradingViolation):
        fileio.loads(json.dumps(doc))
    assert fileio.loads(json.dumps(doc), validate=False).dim == 2


def test_degree_spellings():
    doc = {"field": "Q(z4)", "group": "Z/2 x Z/2",
           "basis": [{"label": "u", "degree": "(0,0)"}, {"label": "v", "degree": [1, 0]}],
           "structure": [{"i": 0, "j": 0, "k": 0, "coeff": 1},
                         {"i": 0, "j": 1, "k": 1, "coeff": "z"}]}
    A = fileio.loads(json.dumps(doc))
    assert A.degrees == ((0, 0), (1, 0))
    assert fileio.loads(fileio.render(A)).same_data(A)
