"""
JSON file formats for matrices, group words and automorphism descriptors.

Matrix:      {"field": "GF(5)", "period": 2, "block": [["1", "1"], ["0", "1"]]}
Group word:  {"field": ..., "period": q, "factors": [{"t": [i, j, "<elem>"]}, {"d": [pos, "<elem>"]}]}
Descriptor:  {"psi": false, "frob": 1, "inner": <matrix object or null>, "field": "GF(5,2)"}

Element entries may be full literals ("GF(5):3") or bare payloads ("3",
"-7/2", "[0,1]"); plain JSON integers are accepted too. The optional
descriptor "field" key is needed only when "inner" is null. Loaded matrices
are canonicalized and emitted files are always canonical.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from locmat.errors import FileFormatError, FieldError
from locmat.io.literals import format_descriptor, format_payload, parse_descriptor, parse_element
from locmat.models.fields import FieldDescriptor
from locmat.models.permatrix import PeriodicMatrix, make
from locmat.processors.autos import AutomorphismDescriptor
from locmat.processors.groups import DiagUnit, GroupWord, Transvection

logger = logging.getLogger(__name__)

Entry = Union[int, str]


# 1.  Pydantic models - structural validation


class MatrixFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    field: str
    period: int
    block: List[List[Entry]]

    @field_validator("field")
    @classmethod
    def check_field(cls, v: str) -> str:
        parse_descriptor(v)
        return v.strip()

    @field_validator("period")
    @classmethod
    def check_period(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"period must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def check_square(self) -> "MatrixFile":
        if len(self.block) != self.period or any(len(row) != self.period for row in self.block):
            raise ValueError(f"block is not {self.period} x {self.period}")
        return self

    def to_matrix(self) -> PeriodicMatrix:
        field = parse_descriptor(self.field)
        entries = [[parse_element(str(e), field) for e in row] for row in self.block]
        return make(field, self.period, entries)

    @classmethod
    def from_matrix(cls, A: PeriodicMatrix) -> "MatrixFile":
        return cls(
            field=format_descriptor(A.field),
            period=A.period,
            block=[[format_payload(e) for e in row] for row in A.rows],
        )


class TransvectionEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t: Tuple[int, int, Entry]


class DiagEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    d: Tuple[int, Entry]


class WordFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    field: str
    period: int
    factors: List[Union[TransvectionEntry, DiagEntry]] = []

    @field_validator("field")
    @classmethod
    def check_field(cls, v: str) -> str:
        parse_descriptor(v)
        return v.strip()

    def to_word(self) -> GroupWord:
        field = parse_descriptor(self.field)
        tokens = []
        for factor in self.factors:
            if isinstance(factor, TransvectionEntry):
                i, j, a = factor.t
                tokens.append(Transvection(i, j, parse_element(str(a), field), self.period))
            else:
                pos, alpha = factor.d
                tokens.append(DiagUnit(pos, parse_element(str(alpha), field), self.period))
        return GroupWord(field, self.period, tuple(tokens))

    @classmethod
    def from_word(cls, word: GroupWord) -> "WordFile":
        factors = []
        for token in word.factors:
            if isinstance(token, Transvection):
                factors.append(TransvectionEntry(t=(token.i, token.j, format_payload(token.a))))
            else:
                factors.append(DiagEntry(d=(token.position, format_payload(token.alpha))))
        return cls(field=format_descriptor(word.field), period=word.period, factors=factors)


class DescriptorFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    psi: bool = False
    frob: int = 0
    inner: Optional[MatrixFile] = None
    field: Optional[str] = None

    @field_validator("field")
    @classmethod
    def check_field(cls, v: Optional[str]) -> Optional[str]:
        if v is not None:
            parse_descriptor(v)
            return v.strip()
        return v

    def to_descriptor(self, field: Optional[FieldDescriptor] = None) -> AutomorphismDescriptor:
        """
        Build the descriptor. The field comes from "inner", then "field", then
        the ``field`` argument; all that are present must agree.
        """
        candidates = []
        if self.inner is not None:
            candidates.append(parse_descriptor(self.inner.field))
        if self.field is not None:
            candidates.append(parse_descriptor(self.field))
        if field is not None:
            candidates.append(field)
        if not candidates:
            raise FieldError("descriptor names no field and has no inner matrix")
        if any(c != candidates[0] for c in candidates[1:]):
            raise FieldError("descriptor field does not match its context")
        inner = self.inner.to_matrix() if self.inner is not None else None
        return AutomorphismDescriptor(candidates[0], psi=self.psi, frob=self.frob, inner=inner)

    @classmethod
    def from_descriptor(cls, d: AutomorphismDescriptor) -> "DescriptorFile":
        return cls(
            psi=d.psi,
            frob=d.frob,
            inner=MatrixFile.from_matrix(d.inner) if d.inner is not None else None,
            field=format_descriptor(d.field),
        )


# 2.  Text and file helpers


def _validate(model, text: str, source: str):
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise FileFormatError(f"{source}: invalid JSON ({e.msg} at line {e.lineno})") from e
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "document"
        raise FileFormatError(f"{source}: {where}: {first['msg']}") from e


def _convert(convert, source: str):
    # Element literals and shapes are checked only when building domain values
    try:
        return convert()
    except FileFormatError:
        raise
    except (ValueError, IndexError) as e:
        raise FileFormatError(f"{source}: {e}") from e


def _dump(model: BaseModel) -> str:
    return json.dumps(model.model_dump(exclude_none=False), indent=2) + "\n"


def _read(path: Union[str, Path]) -> str:
    path = Path(path).expanduser()
    if not path.exists():
        raise FileNotFoundError(path)
    return path.read_text(encoding="utf-8")


def matrix_from_json(text: str, source: str = "<matrix>") -> PeriodicMatrix:
    model = _validate(MatrixFile, text, source)
    return _convert(model.to_matrix, source)


def matrix_to_json(A: PeriodicMatrix) -> str:
    return _dump(MatrixFile.from_matrix(A))


def load_matrix(path: Union[str, Path]) -> PeriodicMatrix:
    """
    Load a matrix file and canonicalize it.

    Raises
    ------
    FileNotFoundError
        If the path does not exist.
    FileFormatError
        On malformed JSON, schema violations or bad element literals.
    """
    A = matrix_from_json(_read(path), str(path))
    logger.debug(f"Loaded {path}: period {A.period} over {A.field}")
    return A


def dump_matrix(A: PeriodicMatrix, path: Union[str, Path]) -> None:
    Path(path).write_text(matrix_to_json(A), encoding="utf-8")


def word_from_json(text: str, source: str = "<word>") -> GroupWord:
    model = _validate(WordFile, text, source)
    return _convert(model.to_word, source)


def word_to_json(word: GroupWord) -> str:
    return _dump(WordFile.from_word(word))


def load_word(path: Union[str, Path]) -> GroupWord:
    return word_from_json(_read(path), str(path))


def dump_word(word: GroupWord, path: Union[str, Path]) -> None:
    Path(path).write_text(word_to_json(word), encoding="utf-8")


def descriptor_from_json(
    text: str, field: Optional[FieldDescriptor] = None, source: str = "<descriptor>"
) -> AutomorphismDescriptor:
    model = _validate(DescriptorFile, text, source)
    return _convert(lambda: model.to_descriptor(field), source)


def descriptor_to_json(d: AutomorphismDescriptor) -> str:
    return _dump(DescriptorFile.from_descriptor(d))


def load_descriptor(
    path: Union[str, Path], field: Optional[FieldDescriptor] = None
) -> AutomorphismDescriptor:
    return descriptor_from_json(_read(path), field, str(path))


def dump_descriptor(d: AutomorphismDescriptor, path: Union[str, Path]) -> None:
    Path(path).write_text(descriptor_to_json(d), encoding="utf-8")
