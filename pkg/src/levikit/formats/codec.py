"""
Reading and writing levikit files.

Output is canonical: sorted keys, two-space indentation, rationals in lowest terms as strings,
components and roots in lexicographic degree order. ``dump_*(read(...))`` is therefore
byte-identical for canonical files. Readers append a note to ``notes`` for every value that was
accepted but is not canonical (``"2/4"``, bare integers).
"""

import hashlib
import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Type, TypeVar, Union

from loguru import logger
from pydantic import BaseModel, ValidationError

from levikit.algebra import LieAlgebra
from levikit.errors import FormatError, StaleCertificate
from levikit.formats.schemas import (
    AlgebraFile,
    BracketEntry,
    BracketTerm,
    CertificateFile,
    DerivationFile,
    GradingComponentEntry,
    GradingFile,
    SplitEntry,
    SplitFile,
    TraceEntry,
)
from levikit.gradings import DerivationFamily, Grading
from levikit.levi import CaseLabel, CaseStep, LeviCertificate
from levikit.linalg import Matrix, Subspace, Vector
from levikit.split import DerivationSplit, SplitResult

Model = TypeVar("Model", bound=BaseModel)
PathLike = Union[str, Path]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value: Any, where: str, notes: Optional[List[str]] = None) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an integer; floats and malformed strings are rejected."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise FormatError(f"{where}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        result = Fraction(value)
    else:
        if not _RATIONAL.match(value.strip()):
            raise FormatError(f"{where}: {value!r} is not a rational of the form p or p/q")
        try:
            result = Fraction(value.strip())
        except ZeroDivisionError:
            raise FormatError(f"{where}: zero denominator in {value!r}")
    canonical = format_rational(result)
    if notes is not None and (not isinstance(value, str) or value != canonical):
        notes.append(f"{where}: non-canonical rational {value!r} normalized to {canonical!r}")
    return result


def _vector(values: Sequence[Any], where: str, notes: Optional[List[str]]) -> Vector:
    return tuple(parse_rational(v, f"{where}[{k}]", notes) for k, v in enumerate(values))


def _rows(rows: Sequence[Sequence[Any]], where: str, notes: Optional[List[str]]) -> List[Vector]:
    return [_vector(row, f"{where}[{i}]", notes) for i, row in enumerate(rows)]


def _text_vector(v: Sequence[Fraction]) -> List[str]:
    return [format_rational(x) for x in v]


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def content_sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _dump(model: BaseModel) -> str:
    return canonical_json(model.model_dump(exclude_none=True))


_WHITESPACE = re.compile(r"\s*")


def _skip(text: str, pos: int) -> int:
    """Skip whitespace and one separating comma."""
    pos = _WHITESPACE.match(text, pos).end()
    if text[pos : pos + 1] == ",":
        pos = _WHITESPACE.match(text, pos + 1).end()
    return pos


def _locate(text: str, loc: Sequence[Any]) -> int:
    """Offset of the deepest value on the path ``loc`` that is present in ``text`` (valid JSON)."""
    decoder = json.JSONDecoder()
    pos = _WHITESPACE.match(text, 0).end()
    for key in loc:
        opener = text[pos : pos + 1]
        found: Optional[int] = None
        cursor = _WHITESPACE.match(text, pos + 1).end()
        if opener == "{" and isinstance(key, str):
            while text[cursor : cursor + 1] == '"':
                name, cursor = decoder.raw_decode(text, cursor)
                cursor = _WHITESPACE.match(text, cursor).end() + 1
                cursor = _WHITESPACE.match(text, cursor).end()
                if name == key:
                    found = cursor
                    break
                _, cursor = decoder.raw_decode(text, cursor)
                cursor = _skip(text, cursor)
        elif opener == "[" and isinstance(key, int):
            index = 0
            while cursor < len(text) and text[cursor] != "]":
                if index == key:
                    found = cursor
                    break
                _, cursor = decoder.raw_decode(text, cursor)
                cursor = _skip(text, cursor)
                index += 1
        if found is None:
            break
        pos = found
    return pos


def _load(text: str, model: Type[Model], source: str) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}: line {e.lineno} column {e.colno}: {e.msg}")
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(p) for p in first["loc"]) or "<root>"
        pos = _locate(text, first["loc"])
        line = text.count("\n", 0, pos) + 1
        column = pos - text.rfind("\n", 0, pos)
        raise FormatError(f"{source}: line {line} column {column}: field {location}: {first['msg']}")


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"{path}: cannot read file: {e.strerror or e}")


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"Wrote {path}")
    return path


# Algebras


def dump_algebra(g: LieAlgebra) -> str:
    entries: Dict[tuple, List[BracketTerm]] = {}
    for i, j, k, c in g.structure:
        entries.setdefault((i, j), []).append(BracketTerm(k=k, c=format_rational(c)))
    brackets = [BracketEntry(i=i, j=j, terms=terms) for (i, j), terms in sorted(entries.items())]
    return _dump(AlgebraFile(dim=g.dim, names=list(g.names), brackets=brackets))


def parse_algebra(text: str, source: str = "<algebra>", notes: Optional[List[str]] = None) -> LieAlgebra:
    data = _load(text, AlgebraFile, source)
    if len(data.names) != data.dim:
        raise FormatError(f"{source}: field names: {len(data.names)} names for dim {data.dim}")
    seen = set()
    entries = []
    for b, bracket in enumerate(data.brackets):
        where = f"{source}: brackets[{b}]"
        if not (0 <= bracket.i < bracket.j < data.dim):
            raise FormatError(f"{where}: indices must satisfy 0 <= i < j < dim, got ({bracket.i}, {bracket.j})")
        if (bracket.i, bracket.j) in seen:
            raise FormatError(f"{where}: pair ({bracket.i}, {bracket.j}) listed twice")
        seen.add((bracket.i, bracket.j))
        for t, term in enumerate(bracket.terms):
            if not 0 <= term.k < data.dim:
                raise FormatError(f"{where}.terms[{t}]: index k={term.k} out of range")
            entries.append((bracket.i, bracket.j, term.k, parse_rational(term.c, f"{where}.terms[{t}].c", notes)))
    return LieAlgebra(data.dim, tuple(data.names), tuple(entries))


def read_algebra(path: PathLike, notes: Optional[List[str]] = None) -> LieAlgebra:
    return parse_algebra(read_text(path), str(path), notes)


def write_algebra(path: PathLike, g: LieAlgebra) -> Path:
    return write_text(path, dump_algebra(g))


# Gradings


def dump_grading(grading: Grading) -> str:
    degrees = grading.basis_degrees()
    if degrees is not None:
        return _dump(GradingFile(rank=grading.rank, degrees=[list(d) for d in degrees]))
    components = [
        GradingComponentEntry(degree=list(d), basis=[_text_vector(v) for v in s.vectors])
        for d, s in grading.components
    ]
    return _dump(GradingFile(rank=grading.rank, components=components))


def parse_grading(text: str, source: str = "<grading>", notes: Optional[List[str]] = None, dim: Optional[int] = None) -> Grading:
    data = _load(text, GradingFile, source)
    if data.degrees is not None:
        if dim is not None and len(data.degrees) != dim:
            raise FormatError(f"{source}: field degrees: {len(data.degrees)} degrees for a {dim}-dimensional algebra")
        for i, d in enumerate(data.degrees):
            if len(d) != data.rank:
                raise FormatError(f"{source}: field degrees[{i}]: length {len(d)} for rank {data.rank}")
        return Grading.from_degrees(data.rank, data.degrees)
    components = []
    for c, entry in enumerate(data.components):
        where = f"{source}: components[{c}]"
        if len(entry.degree) != data.rank:
            raise FormatError(f"{where}.degree: length {len(entry.degree)} for rank {data.rank}")
        rows = _rows(entry.basis, f"{where}.basis", notes)
        ambient = dim if dim is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ambient for r in rows):
            raise FormatError(f"{where}.basis: vectors must have length {ambient}")
        components.append((tuple(entry.degree), Subspace.span(ambient, rows)))
    return Grading(data.rank, tuple(components))


def write_grading(path: PathLike, grading: Grading) -> Path:
    return write_text(path, dump_grading(grading))


# Derivation families


def dump_family(family: DerivationFamily) -> str:
    matrices = [[_text_vector(row) for row in m.rows] for m in family.matrices]
    return _dump(DerivationFile(matrices=matrices, labels=list(family.labels)))


def parse_family(text: str, g: LieAlgebra, source: str = "<derivations>", notes: Optional[List[str]] = None) -> DerivationFamily:
    data = _load(text, DerivationFile, source)
    if data.labels and len(data.labels) != len(data.matrices):
        raise FormatError(f"{source}: field labels: {len(data.labels)} labels for {len(data.matrices)} matrices")
    matrices = []
    for m, rows in enumerate(data.matrices):
        parsed = _rows(rows, f"{source}: matrices[{m}]", notes)
        if len(parsed) != g.dim or any(len(r) != g.dim for r in parsed):
            raise FormatError(f"{source}: matrices[{m}]: expected a {g.dim}x{g.dim} matrix")
        matrices.append(Matrix(parsed, ncols=g.dim))
    return DerivationFamily(g, tuple(matrices), tuple(data.labels))


def write_family(path: PathLike, family: DerivationFamily) -> Path:
    return write_text(path, dump_family(family))


# Certificates


def family_hash(g: LieAlgebra, family: Optional[DerivationFamily]) -> str:
    return content_sha256(dump_family(family if family is not None else DerivationFamily.empty(g)))


def certificate_model(g: LieAlgebra, cert: LeviCertificate) -> CertificateFile:
    trace = [
        TraceEntry(
            case=step.case_label.value,
            dim=step.algebra_dim,
            depth=step.depth,
            ideal_basis=[_text_vector(v) for v in step.ideal_used.vectors] if step.ideal_used is not None else None,
            generic_H=_text_vector(step.generic_H) if step.generic_H is not None else None,
            detail=step.detail,
        )
        for step in cert.trace
    ]
    return CertificateFile(
        algebra_sha256=content_sha256(dump_algebra(g)),
        family_sha256=family_hash(g, cert.family),
        family_size=len(cert.matrices),
        levi_basis=[_text_vector(v) for v in cert.levi.vectors],
        radical_basis=[_text_vector(v) for v in cert.radical.vectors],
        trace=trace,
        checks=dict(cert.checks),
    )


def dump_certificate(g: LieAlgebra, cert: LeviCertificate) -> str:
    return _dump(certificate_model(g, cert))


def parse_certificate(
    text: str,
    g: LieAlgebra,
    family: Optional[DerivationFamily] = None,
    source: str = "<certificate>",
    notes: Optional[List[str]] = None,
) -> LeviCertificate:
    """Certificate for ``g`` and ``family``.

    Raises:
        StaleCertificate: The certificate was issued for a different algebra or family.
    """
    data = _load(text, CertificateFile, source)
    if data.algebra_sha256 != content_sha256(dump_algebra(g)):
        raise StaleCertificate(f"{source}: certificate was issued for a different algebra")
    if data.family_sha256 != family_hash(g, family):
        raise StaleCertificate(f"{source}: certificate was issued for a different derivation family")

    def subspace(rows: List[List[Any]], where: str, ambient: int) -> Subspace:
        parsed = _rows(rows, f"{source}: {where}", notes)
        if any(len(r) != ambient for r in parsed):
            raise FormatError(f"{source}: {where}: vectors must have length {ambient}")
        return Subspace.span(ambient, parsed)

    trace = []
    for s, entry in enumerate(data.trace):
        try:
            label = CaseLabel(entry.case)
        except ValueError:
            raise FormatError(f"{source}: trace[{s}].case: unknown case {entry.case!r}")
        ideal = subspace(entry.ideal_basis, f"trace[{s}].ideal_basis", entry.dim) if entry.ideal_basis is not None else None
        generic = _vector(entry.generic_H, f"{source}: trace[{s}].generic_H", notes) if entry.generic_H is not None else None
        trace.append(CaseStep(label, entry.dim, entry.depth, ideal, generic, entry.detail))
    return LeviCertificate(
        levi=subspace(data.levi_basis, "levi_basis", g.dim),
        radical=subspace(data.radical_basis, "radical_basis", g.dim),
        family=family if family is not None else DerivationFamily.empty(g),
        trace=tuple(trace),
        checks=dict(data.checks),
    )


def read_certificate(
    path: PathLike,
    g: LieAlgebra,
    family: Optional[DerivationFamily] = None,
    notes: Optional[List[str]] = None,
) -> LeviCertificate:
    return parse_certificate(read_text(path), g, family, str(path), notes)


def write_certificate(path: PathLike, g: LieAlgebra, cert: LeviCertificate) -> Path:
    return write_text(path, dump_certificate(g, cert))


# Splits


def dump_split(result: SplitResult) -> str:
    splits = [
        SplitEntry(label=s.label, H_l=_text_vector(s.H_l), residual=[_text_vector(row) for row in s.residual.rows])
        for s in result.splits
    ]
    return _dump(SplitFile(splits=splits, inner_span=[_text_vector(v) for v in result.inner_span.vectors]))


def parse_split(text: str, dim: int, source: str = "<split>", notes: Optional[List[str]] = None) -> SplitResult:
    data = _load(text, SplitFile, source)
    splits = []
    for s, entry in enumerate(data.splits):
        H_l = _vector(entry.H_l, f"{source}: splits[{s}].H_l", notes)
        residual = _rows(entry.residual, f"{source}: splits[{s}].residual", notes)
        if len(H_l) != dim or len(residual) != dim or any(len(r) != dim for r in residual):
            raise FormatError(f"{source}: splits[{s}]: expected dimension {dim}")
        splits.append(DerivationSplit(entry.label, H_l, Matrix(residual, ncols=dim)))
    inner = _rows(data.inner_span, f"{source}: inner_span", notes)
    return SplitResult(tuple(splits), Subspace.span(dim, inner))


def write_split(path: PathLike, result: SplitResult) -> Path:
    return write_text(path, dump_split(result))
