"""
JSON file format tests for locmat.
"""

import json

import pytest

from locmat.errors import FileFormatError
from locmat.io.file_formats import (
    descriptor_from_json,
    descriptor_to_json,
    dump_matrix,
    load_descriptor,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    word_from_json,
    word_to_json,
)
from locmat.models.permatrix import scalar, transvection
from locmat.processors.autos import AutomorphismDescriptor
from locmat.processors.groups import DiagUnit, GroupWord, Transvection

from test_data import FROB_JSON, MATRIX_JSON, NONCANONICAL_JSON, PSI_JSON


class TestMatrixFiles:
    """{"field", "period", "block"} documents."""

    def test_load(self, gf5):
        assert matrix_from_json(MATRIX_JSON) == transvection(gf5, 2, 1, 2, 1)

    def test_canonicalized_on_load(self, gf5):
        A = matrix_from_json(NONCANONICAL_JSON)
        assert A == scalar(gf5, 3)
        assert json.loads(matrix_to_json(A)) == {"field": "GF(5)", "period": 1, "block": [["3"]]}

    def test_extension_payloads(self, gf25):
        text = '{"field": "GF(5,2)", "period": 1, "block": [["[0,1]"]]}'
        A = matrix_from_json(text)
        assert A == scalar(gf25, gf25.generator())
        assert json.loads(matrix_to_json(A))["block"] == [["[0,1]"]]

    def test_rational_payloads(self, q_field):
        A = matrix_from_json('{"field": "Q", "period": 1, "block": [["-7/2"]]}')
        assert json.loads(matrix_to_json(A))["block"] == [["-7/2"]]

    @pytest.mark.parametrize("text", [
        "{not json",
        '{"field": "GF(5)", "period": 2, "block": [[1, 0]]}',
        '{"field": "GF(5)", "period": 0, "block": []}',
        '{"field": "GF(4)", "period": 1, "block": [[1]]}',
        '{"field": "GF(5)", "period": 1, "block": [["GF(5):9"]]}',
        '{"field": "GF(5)", "period": 1, "block": [["GF(7):1"]]}',
        '{"field": "GF(5)", "period": 1, "block": [[1]], "extra": 1}',
    ])
    def test_malformed(self, text):
        with pytest.raises(FileFormatError):
            matrix_from_json(text)

    def test_file_round_trip(self, gf5, rotation, tmp_path):
        path = tmp_path / "rotation.json"
        dump_matrix(rotation, path)
        assert load_matrix(path) == rotation

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_matrix(tmp_path / "absent.json")


class TestWordFiles:
    """{"field", "period", "factors"} documents."""

    def test_load(self, gf5):
        text = '{"field": "GF(5)", "period": 2, "factors": [{"t": [1, 2, "3"]}, {"d": [2, 4]}]}'
        word = word_from_json(text)
        assert word.factors == (
            Transvection(1, 2, gf5.element(3), 2),
            DiagUnit(2, gf5.element(4), 2),
        )

    def test_dump(self, gf5):
        word = GroupWord(gf5, 2, (Transvection(2, 1, gf5.element(4), 2),))
        assert json.loads(word_to_json(word)) == {
            "field": "GF(5)",
            "period": 2,
            "factors": [{"t": [2, 1, "4"]}],
        }

    def test_bad_factor(self):
        with pytest.raises(FileFormatError):
            word_from_json('{"field": "GF(5)", "period": 2, "factors": [{"t": [1, 1, "3"]}]}')
        with pytest.raises(FileFormatError):
            word_from_json('{"field": "GF(5)", "period": 2, "factors": [{"x": [1]}]}')


class TestDescriptorFiles:
    """{"psi", "frob", "inner", "field"} documents."""

    def test_field_key(self, gf5):
        d = descriptor_from_json(PSI_JSON)
        assert d == AutomorphismDescriptor(gf5, psi=True)

    def test_field_from_context(self, gf25):
        d = descriptor_from_json('{"frob": 1}', gf25)
        assert d == AutomorphismDescriptor(gf25, frob=1)

    def test_field_from_inner(self, gf5, rotation):
        text = json.dumps({"psi": False, "frob": 0, "inner": json.loads(matrix_to_json(rotation))})
        assert descriptor_from_json(text).inner == rotation

    def test_dump_names_field(self, gf25):
        doc = json.loads(descriptor_to_json(AutomorphismDescriptor(gf25, frob=1)))
        assert doc == {"psi": False, "frob": 1, "inner": None, "field": "GF(5,2)"}

    def test_no_field(self):
        with pytest.raises(FileFormatError):
            descriptor_from_json('{"psi": true}')

    def test_conflicting_fields(self, gf5):
        with pytest.raises(FileFormatError):
            descriptor_from_json(FROB_JSON, gf5)

    def test_load(self, gf25, write_json):
        path = write_json("frob.json", FROB_JSON)
        assert load_descriptor(path) == AutomorphismDescriptor(gf25, frob=1)
