"""JSON documents for instances, witnesses, codes and reports."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError, ParseError
from .field import FpVector, PrimeField
from .instances import (ColoredMldInstance, MldInstance, NcpInstance, Pick,
                        Witness)


def _vec(v: FpVector) -> list:
    return list(v.entries)


def witness_to_json(w: Witness) -> dict:
    return {"type": "witness",
            "picks": [{"class": pk.cls, "index": pk.index, "coeff": pk.coeff} for pk in w.picks]}


def to_json(obj) -> dict:
    from .codes import Code
    from .gap import ReductionReport
    from .oracles import GapReportCard

    if isinstance(obj, ColoredMldInstance):
        return {"type": "colored_mld", "p": obj.p, "d": obj.d, "k": obj.k,
                "classes": [[_vec(v) for v in c] for c in obj.classes],
                "target": _vec(obj.target)}
    if isinstance(obj, MldInstance):
        return {"type": "mld", "p": obj.p, "d": obj.d, "k": obj.k,
                "vectors": [_vec(v) for v in obj.vectors], "target": _vec(obj.target)}
    if isinstance(obj, NcpInstance):
        return {"type": "ncp", "p": obj.p, "m": obj.m,
                "generators": [_vec(v) for v in obj.generators],
                "target": _vec(obj.target), "k": obj.k}
    if isinstance(obj, Witness):
        return witness_to_json(obj)
    if isinstance(obj, Code):
        return {"type": "code", "sigma": obj.sigma, "m": obj.m,
                "words": [list(w) for w in obj.words]}
    if isinstance(obj, ReductionReport):
        return obj.to_json()
    if isinstance(obj, GapReportCard):
        return {"type": "certificate", "instance_id": obj.instance_id, "k": obj.k,
                "gamma": obj.gamma, "exact_min": obj.exact_min, "class": obj.classification,
                "witness": None if obj.witness is None else witness_to_json(obj.witness),
                "size_cap": obj.size_cap, "exhaustive": obj.exhaustive}
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise InputError(f"cannot serialize {type(obj).__name__}")


def _field(doc: dict, name: str, kind=int):
    if name not in doc:
        raise ParseError(f"missing field '{name}'")
    val = doc[name]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise ParseError(f"field '{name}' must be an integer")
    if kind is list and not isinstance(val, list):
        raise ParseError(f"field '{name}' must be a list")
    return val


def _parse_field(doc: dict) -> PrimeField:
    p = _field(doc, "p")
    try:
        return PrimeField(p)
    except InputError:
        raise ParseError(f"field 'p': p must be prime, got {p}") from None


def _parse_vec(field: PrimeField, raw, where: str, dim=None) -> FpVector:
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of integers")
    out = []
    for j, x in enumerate(raw):
        if not isinstance(x, int) or isinstance(x, bool):
            raise ParseError(f"{where}[{j}]: expected an integer")
        if not 0 <= x < field.p:
            raise ParseError(f"{where}[{j}]: entry out of field range (got {x}, p={field.p})")
        out.append(x)
    if dim is not None and len(out) != dim:
        raise ParseError(f"{where}: length {len(out)}, expected {dim}")
    return FpVector(field, tuple(out))


def _parse_witness(doc: dict) -> Witness:
    picks = []
    for i, raw in enumerate(_field(doc, "picks", list)):
        if not isinstance(raw, dict):
            raise ParseError(f"picks[{i}]: expected an object")
        cls = raw.get("class")
        if cls is not None and (not isinstance(cls, int) or isinstance(cls, bool)):
            raise ParseError(f"picks[{i}].class: expected an integer or null")
        idx = raw.get("index")
        coeff = raw.get("coeff")
        if not isinstance(idx, int) or isinstance(idx, bool):
            raise ParseError(f"picks[{i}].index: expected an integer")
        if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff <= 0:
            raise ParseError(f"picks[{i}].coeff: expected a positive integer")
        picks.append(Pick(cls, idx, coeff))
    try:
        return Witness(tuple(picks))
    except InputError as e:
        raise ParseError(f"picks: {e}") from None


def from_json(doc):
    from .codes import Code
    from .gap import ReductionReport
    from .oracles import GapReportCard

    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("type")
    try:
        if kind == "colored_mld":
            field = _parse_field(doc)
            d = _field(doc, "d")
            k = _field(doc, "k")
            classes = []
            for i, cls in enumerate(_field(doc, "classes", list)):
                if not isinstance(cls, list):
                    raise ParseError(f"classes[{i}]: expected a list")
                classes.append(tuple(_parse_vec(field, v, f"classes[{i}][{j}]", d)
                                     for j, v in enumerate(cls)))
            target = _parse_vec(field, _field(doc, "target", list), "target", d)
            return ColoredMldInstance(field, d, k, tuple(classes), target)
        if kind == "mld":
            field = _parse_field(doc)
            d = _field(doc, "d")
            vecs = tuple(_parse_vec(field, v, f"vectors[{j}]", d)
                         for j, v in enumerate(_field(doc, "vectors", list)))
            target = _parse_vec(field, _field(doc, "target", list), "target", d)
            return MldInstance(field, d, _field(doc, "k"), vecs, target)
        if kind == "ncp":
            field = _parse_field(doc)
            m = _field(doc, "m")
            gens = tuple(_parse_vec(field, v, f"generators[{j}]", m)
                         for j, v in enumerate(_field(doc, "generators", list)))
            target = _parse_vec(field, _field(doc, "target", list), "target", m)
            return NcpInstance(field, m, gens, target, _field(doc, "k"))
        if kind == "witness":
            return _parse_witness(doc)
        if kind == "code":
            sigma = _field(doc, "sigma")
            m = _field(doc, "m")
            words = []
            for i, w in enumerate(_field(doc, "words", list)):
                if not isinstance(w, list) or not all(
                        isinstance(x, int) and not isinstance(x, bool) for x in w):
                    raise ParseError(f"words[{i}]: expected a list of integers")
                words.append(tuple(w))
            return Code(sigma, m, tuple(words))
        if kind == "gap_report":
            return ReductionReport.from_json(doc)
        if kind == "certificate":
            wit = doc.get("witness")
            return GapReportCard(
                instance_id=doc.get("instance_id", ""), k=_field(doc, "k"), gamma=doc["gamma"],
                exact_min=doc.get("exact_min"), classification=doc["class"],
                witness=None if wit is None else _parse_witness(wit),
                size_cap=_field(doc, "size_cap"), exhaustive=bool(doc["exhaustive"]))
    except ParseError:
        raise
    except KeyError as e:
        raise ParseError(f"missing field {e}") from None
    except InputError as e:
        raise ParseError(str(e)) from None
    raise ParseError(f"field 'type': unknown document type {kind!r}")


def dumps(obj, indent=None) -> str:
    doc = obj if isinstance(obj, dict) else to_json(obj)
    if indent is None:
        return json.dumps(doc, separators=(",", ":")) + "\n"
    return json.dumps(doc, indent=indent) + "\n"


def canonical_bytes(obj) -> bytes:
    return dumps(obj).encode()


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_json(doc)


def write_instance(obj, path, indent=None) -> None:
    Path(path).write_text(dumps(obj, indent))


def read_instance(path):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return loads(text)
