"""The JSON instance file format and sparse tensor (de)serialization.

An instance file is a JSON object::

    {
      "format": "strongconn-instance",
      "name": "...",
      "field": {"kind": "rationals"}
               or {"kind": "number_field", "min_poly": [1, 1, 1]},
      "spaces": {"A": 2, "C": 2},
      "tensors": {
        "mul": {"domain": ["A", "A"], "codomain": ["A"],
                "entries": [[0, 0, 0, "1"], [0, 1, 1, "2"], ...]},
        ...
      },
      "designations": {"mul": "mul", "unit": "unit", ...},
      "grouplike": ["1", "0"],                       # optional, in C
      "coinvariant_subalgebra": [["1","0","1","0"]]  # optional, in A
    }

A sparse entry lists the codomain indices, then the domain indices,
then the scalar text, with zero-based indices flattened row-major;
unlisted entries are zero and duplicates are rejected.  Scalars use the
shared grammar of the scalar parser.  The total space A and the
structure space C must be named "A" and "C".

Designation roles and their required shapes:

    mul:    A(x)A -> A        unit:    k -> A
    comul:  C -> C(x)C        counit:  C -> k
    psi:    C(x)A -> A(x)C    rho:     A -> A(x)C
    c_mul:  C(x)C -> C        c_unit:  k -> C
    c_antipode, c_antipode_inv: C -> C      (optional Hopf data on C)
    a_comul: A -> A(x)A       a_counit: A -> k
    a_antipode, a_antipode_inv: A -> A      (optional Hopf data on A)
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, TooLarge
from .linmaps import LinMap, SpaceLabel, Subspace, vector
from .scalars import Field, parse_scalar


FORMAT_NAME = "strongconn-instance"

ROLE_SHAPES = {
    "mul": (("A", "A"), ("A",)),
    "unit": ((), ("A",)),
    "comul": (("C",), ("C", "C")),
    "counit": (("C",), ()),
    "psi": (("C", "A"), ("A", "C")),
    "rho": (("A",), ("A", "C")),
    "c_mul": (("C", "C"), ("C",)),
    "c_unit": ((), ("C",)),
    "c_antipode": (("C",), ("C",)),
    "c_antipode_inv": (("C",), ("C",)),
    "a_comul": (("A",), ("A", "A")),
    "a_counit": (("A",), ()),
    "a_antipode": (("A",), ("A",)),
    "a_antipode_inv": (("A",), ("A",)),
}


@dataclass
class InstanceFile:
    name: str
    field: Field
    spaces: dict[str, int]
    tensors: dict[str, LinMap]
    designations: dict[str, str]
    grouplike: LinMap | None = None
    b_subspace: Subspace | None = None

    def designated(self, role: str) -> LinMap | None:
        tname = self.designations.get(role)
        return self.tensors[tname] if tname is not None else None

    @property
    def has_entwined_data(self) -> bool:
        return self.designated("psi") is not None and \
            self.designated("rho") is not None

    @property
    def has_c_hopf_data(self) -> bool:
        return all(self.designated(r) is not None
                   for r in ("c_mul", "c_unit", "c_antipode", "comul", "counit"))

    @property
    def has_a_hopf_data(self) -> bool:
        return all(self.designated(r) is not None
                   for r in ("mul", "unit", "a_comul", "a_counit", "a_antipode"))


def _space_label(names, spaces: dict[str, int], where: str) -> SpaceLabel:
    factors = []
    for n in names:
        if n not in spaces:
            raise ParseError(f"{where}: unknown space {n!r}")
        factors.append((n, spaces[n]))
    return SpaceLabel(factors)


def parse_tensor(name: str, obj: dict, spaces: dict[str, int],
                 fld: Field) -> LinMap:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError(f"tensor {name!r}: expected an object with entries")
    dom = _space_label(obj.get("domain", []), spaces, f"tensor {name!r}")
    cod = _space_label(obj.get("codomain", []), spaces, f"tensor {name!r}")
    n_idx = len(dom.factors) + len(cod.factors)
    z = fld.zero
    rows = [[z] * dom.dim for _ in range(cod.dim)]
    seen = set()
    for pos, entry in enumerate(obj["entries"]):
        if not isinstance(entry, list) or len(entry) != n_idx + 1:
            raise ParseError(
                f"tensor {name!r} entry {pos}: expected {n_idx} indices "
                f"and one scalar")
        idx, text = entry[:n_idx], entry[n_idx]
        if not all(isinstance(i, int) for i in idx):
            raise ParseError(f"tensor {name!r} entry {pos}: indices must be integers")
        try:
            r = cod.flatten(idx[: len(cod.factors)])
            c = dom.flatten(idx[len(cod.factors):])
        except IndexError as exc:
            raise ParseError(f"tensor {name!r} entry {pos}: {exc}") from exc
        if (r, c) in seen:
            raise ParseError(f"tensor {name!r} entry {pos}: duplicate index")
        seen.add((r, c))
        try:
            rows[r][c] = parse_scalar(text, fld)
        except ParseError as exc:
            raise ParseError(f"tensor {name!r} entry {pos}: {exc}") from exc
    return LinMap(fld, dom, cod, rows)


def parse_instance_dict(doc: dict, dim_cap: int = 32) -> InstanceFile:
    if not isinstance(doc, dict):
        raise ParseError("instance file must be a JSON object")
    if doc.get("format", FORMAT_NAME) != FORMAT_NAME:
        raise ParseError(f"unknown format {doc.get('format')!r}")
    fdesc = doc.get("field")
    if not isinstance(fdesc, dict) or "kind" not in fdesc:
        raise ParseError("missing or malformed field descriptor")
    min_poly = fdesc.get("min_poly")
    try:
        fld = Field(fdesc["kind"],
                    tuple(min_poly) if min_poly is not None else None)
    except Exception as exc:
        raise ParseError(f"field descriptor: {exc}") from exc
    spaces = doc.get("spaces")
    if not isinstance(spaces, dict) or not spaces:
        raise ParseError("missing spaces")
    for nm, d in spaces.items():
        if not isinstance(d, int) or d < 1:
            raise ParseError(f"space {nm!r}: dimension must be a positive integer")
        if d > dim_cap:
            raise TooLarge(f"space {nm!r} has dimension {d} > cap {dim_cap}")
    tensors_doc = doc.get("tensors", {})
    if not isinstance(tensors_doc, dict):
        raise ParseError("tensors must be an object")
    tensors = {nm: parse_tensor(nm, obj, spaces, fld)
               for nm, obj in tensors_doc.items()}
    desig = doc.get("designations", {})
    if not isinstance(desig, dict):
        raise ParseError("designations must be an object")
    for role, tname in desig.items():
        if role not in ROLE_SHAPES:
            raise ParseError(f"unknown designation {role!r}")
        if tname not in tensors:
            raise ParseError(f"designation {role!r} names missing tensor {tname!r}")
        want_dom, want_cod = ROLE_SHAPES[role]
        t = tensors[tname]
        got_dom = tuple(n for n, _ in t.domain.factors)
        got_cod = tuple(n for n, _ in t.codomain.factors)
        if (got_dom, got_cod) != (want_dom, want_cod):
            raise ParseError(
                f"designation {role!r}: tensor {tname!r} has shape "
                f"{got_dom} -> {got_cod}, expected {want_dom} -> {want_cod}")
    for role in ("mul", "unit"):
        if role not in desig:
            raise ParseError(f"missing required designation {role!r}")
    grouplike = None
    if "grouplike" in doc:
        if "C" not in spaces:
            raise ParseError("grouplike given but no C space declared")
        texts = doc["grouplike"]
        if not isinstance(texts, list) or len(texts) != spaces["C"]:
            raise ParseError("grouplike must list one scalar per C basis element")
        grouplike = vector(fld, SpaceLabel.base("C", spaces["C"]),
                           [parse_scalar(t, fld) for t in texts])
    b_subspace = None
    if "coinvariant_subalgebra" in doc:
        rows = doc["coinvariant_subalgebra"]
        if not isinstance(rows, list) or not rows:
            raise ParseError("coinvariant_subalgebra must be a nonempty list of vectors")
        a_label = SpaceLabel.base("A", spaces["A"])
        vecs = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != spaces["A"]:
                raise ParseError(f"coinvariant_subalgebra row {i}: expected "
                                 f"{spaces['A']} scalars")
            vecs.append([parse_scalar(t, fld) for t in row])
        b_subspace = Subspace.from_vectors(fld, a_label, vecs)
    return InstanceFile(str(doc.get("name", "")), fld, dict(spaces), tensors,
                        dict(desig), grouplike, b_subspace)


def parse_instance(path: str, dim_cap: int = 32) -> InstanceFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return parse_instance_dict(doc, dim_cap)


# -- serialization -------------------------------------------------------


def field_to_dict(fld: Field) -> dict:
    if fld.kind == "rationals":
        return {"kind": "rationals"}
    return {"kind": "number_field", "min_poly": list(fld.min_poly)}


def serialize_linmap(m: LinMap) -> dict:
    """Sparse form using the same entry grammar as the input format."""
    entries = []
    ncod = len(m.codomain.factors)
    for r in range(m.nrows):
        for c in range(m.ncols):
            s = m.entries[r][c]
            if s:
                idx = list(m.codomain.unflatten(r)) + list(m.domain.unflatten(c))
                entries.append(idx + [str(s)])
    return {"domain": [n for n, _ in m.domain.factors],
            "codomain": [n for n, _ in m.codomain.factors],
            "entries": entries}


def instance_to_dict(inst: InstanceFile) -> dict:
    doc = {
        "format": FORMAT_NAME,
        "name": inst.name,
        "field": field_to_dict(inst.field),
        "spaces": dict(sorted(inst.spaces.items())),
        "tensors": {nm: serialize_linmap(m)
                    for nm, m in sorted(inst.tensors.items())},
        "designations": dict(sorted(inst.designations.items())),
    }
    if inst.grouplike is not None:
        doc["grouplike"] = [str(row[0]) for row in inst.grouplike.entries]
    if inst.b_subspace is not None:
        doc["coinvariant_subalgebra"] = [[str(c) for c in v]
                                         for v in inst.b_subspace.basis]
    return doc


def write_instance(inst: InstanceFile, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=2, sort_keys=True)
        fh.write("\n")
