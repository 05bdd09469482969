"""JSON document format and the command-line surface.

Document kinds: prelie, representation, derivation, derpair, cochain,
deformation, extension. All scalars are exact rationals written as
strings "p/q" or "n" (plain JSON integers are accepted on input and
canonicalized to strings on output).

A derpair document without explicit rho/mu is a regular pair: the
algebra acts on itself by left and right multiplication and D is a
square matrix on it.

Cochain documents come in two formats: "full" for multilinear maps on
the total space (field `entries`, used by the bracket command) and
"two-slot" for (f, theta) elements of the regular or module-coefficient
complex (fields `f` and `theta`; an extension cocycle is the degree-2,
target-"v" case).

Exit codes: 0 success / mathematically true, 1 mathematically false,
2 malformed input or usage. Reports are deterministic; --json swaps the
human text for a machine-readable object including equation tags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cochain import Cochain, MixedMap, MixedShape, SplitDims
from .cohomology import (
    TwoSlotCochain,
    cohomology_dim,
    les_check,
)
from .deformation import (
    DeformationDatum,
    is_infinitesimal_deformation,
    same_cohomology_class,
)
from .exact_linalg import Matrix
from .extension import (
    AbelianExtension,
    DerPairRepresentation,
    ExtensionCocycle,
    build_extension,
    canonical_section,
    classify,
    derpair_representation_report,
    extract_cocycle,
    validate_extension,
)
from .linfty import MCCandidate, mc_check
from .mn_bracket import mn_bracket
from .prelie import (
    DerPair,
    PreLieAlgebra,
    RegularPair,
    Representation,
    is_derivation,
    is_prelie,
    representation_report,
)

KINDS = (
    "prelie",
    "representation",
    "derivation",
    "derpair",
    "cochain",
    "deformation",
    "extension",
)


class ParseError(Exception):
    """Malformed document; message carries the field path."""


# ---------------------------------------------------------------------------
# scalar, matrix and table helpers


def parse_scalar(x, path: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"{path}: expected a rational string, got {type(x).__name__}")
    if isinstance(x, int):
        return Fraction(x)
    try:
        f = Fraction(x.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{path}: invalid rational {x!r}") from None
    return f


def emit_scalar(f: Fraction) -> str:
    return str(f)


def _expect_dict(obj, path, keys):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    extra = set(obj) - set(keys)
    if extra:
        raise ParseError(f"{path}: unknown field {sorted(extra)[0]!r}")
    return obj


def _expect_list(obj, path, length=None):
    if not isinstance(obj, list):
        raise ParseError(f"{path}: expected a list")
    if length is not None and len(obj) != length:
        raise ParseError(f"{path}: expected length {length}, got {len(obj)}")
    return obj


def _get(obj, key, path):
    if key not in obj:
        raise ParseError(f"{path}: missing field {key!r}")
    return obj[key]


def _int(x, path) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{path}: expected an integer")
    return x


def parse_vector(obj, length, path) -> tuple:
    row = _expect_list(obj, path, length)
    return tuple(parse_scalar(v, f"{path}[{k}]") for k, v in enumerate(row))


def parse_matrix(obj, rows, cols, path) -> Matrix:
    m = _expect_list(obj, path, rows)
    return Matrix(rows, cols, [parse_vector(r, cols, f"{path}[{i}]") for i, r in enumerate(m)])


def emit_vector(v) -> list:
    return [emit_scalar(x) for x in v]


def emit_matrix(m: Matrix) -> list:
    return [emit_vector(row) for row in m.entries]


# ---------------------------------------------------------------------------
# per-kind payloads


def _parse_algebra(obj, path) -> PreLieAlgebra:
    obj = _expect_dict(obj, path, ("dim", "table"))
    dim = _int(_get(obj, "dim", path), f"{path}.dim")
    if dim < 1:
        raise ParseError(f"{path}.dim: must be positive")
    tab = _expect_list(_get(obj, "table", path), f"{path}.table", dim)
    table = []
    for i, row in enumerate(tab):
        row = _expect_list(row, f"{path}.table[{i}]", dim)
        table.append(
            [parse_vector(v, dim, f"{path}.table[{i}][{j}]") for j, v in enumerate(row)]
        )
    return PreLieAlgebra(dim, table)


def _emit_algebra(a: PreLieAlgebra) -> dict:
    return {
        "dim": a.dim,
        "table": [[emit_vector(a.prod_basis(i, j)) for j in range(a.dim)] for i in range(a.dim)],
    }


def _parse_mats(obj, count, dim, path):
    lst = _expect_list(obj, path, count)
    return [parse_matrix(m, dim, dim, f"{path}[{i}]") for i, m in enumerate(lst)]


class Document:
    """Parsed document: kind plus the constructed domain object."""

    def __init__(self, kind: str, obj):
        assert kind in KINDS
        self.kind = kind
        self.obj = obj


def parse(data: bytes) -> Document:
    try:
        raw = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"$: not valid JSON ({e})") from None
    if not isinstance(raw, dict):
        raise ParseError("$: expected a JSON object")
    kind = raw.get("kind")
    if kind not in KINDS:
        raise ParseError(f"$.kind: expected one of {', '.join(KINDS)}")
    return Document(kind, _PARSERS[kind](raw, "$"))


def _parse_prelie(raw, path) -> PreLieAlgebra:
    raw = _expect_dict(raw, path, ("kind", "dim", "table"))
    return _parse_algebra({"dim": raw.get("dim"), "table": raw.get("table")}, path)


def _parse_representation(raw, path):
    raw = _expect_dict(raw, path, ("kind", "algebra", "dim_v", "rho", "mu", "K"))
    a = _parse_algebra(_get(raw, "algebra", path), f"{path}.algebra")
    dim_v = _int(_get(raw, "dim_v", path), f"{path}.dim_v")
    if dim_v < 1:
        raise ParseError(f"{path}.dim_v: must be positive")
    rho = _parse_mats(_get(raw, "rho", path), a.dim, dim_v, f"{path}.rho")
    mu = _parse_mats(_get(raw, "mu", path), a.dim, dim_v, f"{path}.mu")
    K = None
    if "K" in raw:
        K = parse_matrix(raw["K"], dim_v, dim_v, f"{path}.K")
    return (a, Representation(dim_v, rho, mu), K)


def _parse_derivation(raw, path) -> Matrix:
    raw = _expect_dict(raw, path, ("kind", "rows", "cols", "matrix"))
    rows = _int(_get(raw, "rows", path), f"{path}.rows")
    cols = _int(_get(raw, "cols", path), f"{path}.cols")
    if rows < 0 or cols < 0:
        raise ParseError(f"{path}: negative shape")
    return parse_matrix(_get(raw, "matrix", path), rows, cols, f"{path}.matrix")


def _parse_derpair(raw, path):
    raw = _expect_dict(raw, path, ("kind", "algebra", "D", "dim_v", "rho", "mu"))
    a = _parse_algebra(_get(raw, "algebra", path), f"{path}.algebra")
    if ("rho" in raw) != ("mu" in raw):
        raise ParseError(f"{path}: rho and mu must appear together")
    if "rho" in raw:
        dim_v = _int(_get(raw, "dim_v", path), f"{path}.dim_v")
        if dim_v < 1:
            raise ParseError(f"{path}.dim_v: must be positive")
        rho = _parse_mats(raw["rho"], a.dim, dim_v, f"{path}.rho")
        mu = _parse_mats(raw["mu"], a.dim, dim_v, f"{path}.mu")
        D = parse_matrix(_get(raw, "D", path), dim_v, a.dim, f"{path}.D")
        return DerPair(a, Representation(dim_v, rho, mu), D)
    if "dim_v" in raw:
        raise ParseError(f"{path}.dim_v: only allowed with explicit rho and mu")
    D = parse_matrix(_get(raw, "D", path), a.dim, a.dim, f"{path}.D")
    return RegularPair(a, D)


def _parse_entries(obj, path, keyspec):
    """keyspec: list of (field, kind) with kind 'wedge' or 'tail'."""
    entries = _expect_list(obj, path)
    out = []
    for k, e in enumerate(entries):
        epath = f"{path}[{k}]"
        e = _expect_dict(e, epath, tuple(f for f, _ in keyspec) + ("value",))
        key = {}
        for field, fkind in keyspec:
            v = _get(e, field, epath)
            if fkind == "wedge":
                v = _expect_list(v, f"{epath}.{field}")
                idx = tuple(_int(x, f"{epath}.{field}[{i}]") for i, x in enumerate(v))
                if any(x < 0 for x in idx):
                    raise ParseError(f"{epath}.{field}: negative index")
                if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
                    raise ParseError(f"{epath}.{field}: must be strictly increasing")
                key[field] = idx
            else:
                iv = _int(v, f"{epath}.{field}")
                if iv < 0:
                    raise ParseError(f"{epath}.{field}: negative index")
                key[field] = iv
        out.append((key, _get(e, "value", epath), epath))
    return out


def _parse_cochain_full(raw, path):
    raw = _expect_dict(raw, path, ("kind", "format", "dim_g", "dim_v", "arity", "entries"))
    dim_g = _int(_get(raw, "dim_g", path), f"{path}.dim_g")
    dim_v = _int(_get(raw, "dim_v", path), f"{path}.dim_v")
    if dim_g < 1 or dim_v < 0:
        raise ParseError(f"{path}: bad dimensions")
    arity = _int(_get(raw, "arity", path), f"{path}.arity")
    if arity < 1:
        raise ParseError(f"{path}.arity: must be at least 1")
    dims = SplitDims(dim_g, dim_v)
    total = dims.total
    coeffs = {}
    for key, value, epath in _parse_entries(
        _get(raw, "entries", path), f"{path}.entries", [("wedge", "wedge"), ("tail", "tail")]
    ):
        wedge, tail = key["wedge"], key["tail"]
        if len(wedge) != arity - 1:
            raise ParseError(f"{epath}.wedge: expected {arity - 1} indices")
        if any(x >= total for x in wedge) or tail >= total:
            raise ParseError(f"{epath}: index out of range for total dimension {total}")
        if (wedge, tail) in coeffs:
            raise ParseError(f"{epath}: duplicate key")
        coeffs[(wedge, tail)] = parse_vector(value, total, f"{epath}.value")
    return Cochain(dims, arity, coeffs)


def _parse_component(obj, dims, shape, target, path) -> MixedMap:
    coeffs = {}
    for key, value, epath in _parse_entries(obj, path, [("wedge", "wedge"), ("tail", "tail")]):
        wedge, tail = key["wedge"], key["tail"]
        if shape.degenerate or len(wedge) != shape.g_wedge:
            raise ParseError(f"{epath}.wedge: expected {max(shape.g_wedge, 0)} indices")
        if any(x >= dims.dim_g for x in wedge):
            raise ParseError(f"{epath}.wedge: index out of range")
        if tail >= dims.dim_g:
            raise ParseError(f"{epath}.tail: index out of range")
        full_key = (wedge, (), tail)
        if full_key in coeffs:
            raise ParseError(f"{epath}: duplicate key")
        tdim = dims.dim_g if target == "g" else dims.dim_v
        coeffs[full_key] = parse_vector(value, tdim, f"{epath}.value")
    return MixedMap(dims, shape, target, coeffs)


def _parse_cochain_two_slot(raw, path):
    raw = _expect_dict(
        raw, path, ("kind", "format", "dim_g", "dim_v", "degree", "target", "f", "theta")
    )
    dim_g = _int(_get(raw, "dim_g", path), f"{path}.dim_g")
    dim_v = _int(_get(raw, "dim_v", path), f"{path}.dim_v")
    if dim_g < 1 or dim_v < 1:
        raise ParseError(f"{path}: bad dimensions")
    degree = _int(_get(raw, "degree", path), f"{path}.degree")
    if degree < 1:
        raise ParseError(f"{path}.degree: must be at least 1")
    target = _get(raw, "target", path)
    if target not in ("g", "v"):
        raise ParseError(f"{path}.target: expected 'g' or 'v'")
    dims = SplitDims(dim_g, dim_v)
    f = _parse_component(
        _get(raw, "f", path), dims, MixedShape(degree - 1, 0, "g"), target, f"{path}.f"
    )
    theta_shape = MixedShape(degree - 2, 0, "g")
    theta_raw = _get(raw, "theta", path)
    if theta_shape.degenerate:
        if _expect_list(theta_raw, f"{path}.theta"):
            raise ParseError(f"{path}.theta: must be empty at degree 1")
        theta = MixedMap(dims, theta_shape, target)
    else:
        theta = _parse_component(theta_raw, dims, theta_shape, target, f"{path}.theta")
    return TwoSlotCochain(dims, degree, target, f, theta)


def _parse_cochain(raw, path):
    fmt = raw.get("format")
    if fmt == "full":
        return _parse_cochain_full(raw, path)
    if fmt == "two-slot":
        return _parse_cochain_two_slot(raw, path)
    raise ParseError(f"{path}.format: expected 'full' or 'two-slot'")


def _parse_deformation(raw, path) -> DeformationDatum:
    raw = _expect_dict(
        raw, path, ("kind", "dim_g", "dim_v", "omega", "sigma", "tau", "dhat")
    )
    dim_g = _int(_get(raw, "dim_g", path), f"{path}.dim_g")
    dim_v = _int(_get(raw, "dim_v", path), f"{path}.dim_v")
    if dim_g < 1 or dim_v < 1:
        raise ParseError(f"{path}: bad dimensions")
    dims = SplitDims(dim_g, dim_v)
    om = _expect_list(_get(raw, "omega", path), f"{path}.omega", dim_g)
    omega_table = []
    for i, row in enumerate(om):
        row = _expect_list(row, f"{path}.omega[{i}]", dim_g)
        omega_table.append(
            [parse_vector(v, dim_g, f"{path}.omega[{i}][{j}]") for j, v in enumerate(row)]
        )
    sigma = _parse_mats(_get(raw, "sigma", path), dim_g, dim_v, f"{path}.sigma")
    tau = _parse_mats(_get(raw, "tau", path), dim_g, dim_v, f"{path}.tau")
    dhat = parse_matrix(_get(raw, "dhat", path), dim_v, dim_g, f"{path}.dhat")
    return DeformationDatum.from_matrices(dims, omega_table, sigma, tau, dhat)


def _parse_extension(raw, path) -> AbelianExtension:
    raw = _expect_dict(raw, path, ("kind", "total", "iota", "proj"))
    total_raw = _expect_dict(_get(raw, "total", path), f"{path}.total", ("algebra", "D"))
    a = _parse_algebra(_get(total_raw, "algebra", f"{path}.total"), f"{path}.total.algebra")
    D = parse_matrix(_get(total_raw, "D", f"{path}.total"), a.dim, a.dim, f"{path}.total.D")
    total = RegularPair(a, D)
    iota_raw = _expect_list(_get(raw, "iota", path), f"{path}.iota", a.dim)
    dim_v = len(_expect_list(iota_raw[0], f"{path}.iota[0]")) if a.dim else 0
    if dim_v < 1 or dim_v >= a.dim:
        raise ParseError(f"{path}.iota: needs between 1 and {a.dim - 1} columns")
    iota = parse_matrix(iota_raw, a.dim, dim_v, f"{path}.iota")
    proj = parse_matrix(_get(raw, "proj", path), a.dim - dim_v, a.dim, f"{path}.proj")
    return AbelianExtension(total, iota, proj)


_PARSERS = {
    "prelie": _parse_prelie,
    "representation": _parse_representation,
    "derivation": _parse_derivation,
    "derpair": _parse_derpair,
    "cochain": _parse_cochain,
    "deformation": _parse_deformation,
    "extension": _parse_extension,
}


def emit(doc: Document) -> bytes:
    payload = _EMITTERS[doc.kind](doc.obj)
    payload = {"kind": doc.kind, **payload}
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _emit_prelie_doc(a: PreLieAlgebra) -> dict:
    return _emit_algebra(a)


def _emit_representation_doc(obj) -> dict:
    a, rep, K = obj
    out = {
        "algebra": _emit_algebra(a),
        "dim_v": rep.dim_v,
        "rho": [emit_matrix(m) for m in rep.rho],
        "mu": [emit_matrix(m) for m in rep.mu],
    }
    if K is not None:
        out["K"] = emit_matrix(K)
    return out


def _emit_derivation_doc(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "matrix": emit_matrix(m)}


def _emit_derpair_doc(p) -> dict:
    if isinstance(p, RegularPair):
        return {"algebra": _emit_algebra(p.algebra), "D": emit_matrix(p.D)}
    return {
        "algebra": _emit_algebra(p.algebra),
        "dim_v": p.rep.dim_v,
        "rho": [emit_matrix(m) for m in p.rep.rho],
        "mu": [emit_matrix(m) for m in p.rep.mu],
        "D": emit_matrix(p.D),
    }


def _emit_full_entries(c: Cochain) -> list:
    return [
        {"wedge": list(w), "tail": t, "value": emit_vector(v)}
        for (w, t), v in sorted(c.coeffs.items())
    ]


def _emit_component_entries(m: MixedMap) -> list:
    return [
        {"wedge": list(gt), "tail": t, "value": emit_vector(v)}
        for (gt, vt, t), v in sorted(m.coeffs.items())
    ]


def _emit_cochain_doc(c) -> dict:
    if isinstance(c, Cochain):
        return {
            "format": "full",
            "dim_g": c.dims.dim_g,
            "dim_v": c.dims.dim_v,
            "arity": c.arity,
            "entries": _emit_full_entries(c),
        }
    assert isinstance(c, TwoSlotCochain)
    return {
        "format": "two-slot",
        "dim_g": c.dims.dim_g,
        "dim_v": c.dims.dim_v,
        "degree": c.n,
        "target": c.target,
        "f": _emit_component_entries(c.f),
        "theta": _emit_component_entries(c.theta),
    }


def _emit_deformation_doc(d: DeformationDatum) -> dict:
    dg = d.dims.dim_g
    return {
        "dim_g": dg,
        "dim_v": d.dims.dim_v,
        "omega": [[emit_vector(d.omega_vec(i, j)) for j in range(dg)] for i in range(dg)],
        "sigma": [emit_matrix(d.sigma_mat(i)) for i in range(dg)],
        "tau": [emit_matrix(d.tau_mat(j)) for j in range(dg)],
        "dhat": emit_matrix(d.dhat_mat()),
    }


def _emit_extension_doc(e: AbelianExtension) -> dict:
    return {
        "total": {"algebra": _emit_algebra(e.total.algebra), "D": emit_matrix(e.total.D)},
        "iota": emit_matrix(e.iota),
        "proj": emit_matrix(e.proj),
    }


_EMITTERS = {
    "prelie": _emit_prelie_doc,
    "representation": _emit_representation_doc,
    "derivation": _emit_derivation_doc,
    "derpair": _emit_derpair_doc,
    "cochain": _emit_cochain_doc,
    "deformation": _emit_deformation_doc,
    "extension": _emit_extension_doc,
}


# ---------------------------------------------------------------------------
# validation by kind


def validate_document(doc: Document) -> dict:
    """Mathematical validation; structural checks already ran in parse."""
    failed = []
    if doc.kind == "prelie":
        if not is_prelie(doc.obj):
            failed.append("prelie-left-symmetry")
    elif doc.kind == "representation":
        a, rep, K = doc.obj
        if not is_prelie(a):
            failed.append("prelie-left-symmetry")
        failed.extend(representation_report(a, rep)["failed"])
    elif doc.kind == "derpair":
        p = doc.obj
        if not is_prelie(p.algebra):
            failed.append("prelie-left-symmetry")
        pair = p.to_derpair() if isinstance(p, RegularPair) else p
        if isinstance(p, DerPair):
            failed.extend(representation_report(p.algebra, p.rep)["failed"])
        if not is_derivation(pair):
            failed.append("derivation-axiom")
    elif doc.kind == "extension":
        rep = validate_extension(doc.obj)
        failed.extend(rep["failed"])
    # derivation, cochain, deformation: structural validity only
    return {"ok": not failed, "failed": failed}


# ---------------------------------------------------------------------------
# CLI


class CliError(Exception):
    """Bad input at the command level; exits 2."""


def _load(path: str) -> Document:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise CliError(f"{path}: {e.strerror or e}") from None
    try:
        return parse(data)
    except ParseError as e:
        raise CliError(f"{path}: {e}") from None


def _load_kind(path: str, *kinds: str) -> Document:
    doc = _load(path)
    if doc.kind not in kinds:
        raise CliError(f"{path}: expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc


def _as_pair(doc: Document, path: str) -> DerPair:
    p = doc.obj
    return p.to_derpair() if isinstance(p, RegularPair) else p


def _require_regular(doc: Document, path: str) -> RegularPair:
    if not isinstance(doc.obj, RegularPair):
        raise CliError(f"{path}: this command needs a regular pair (no explicit rho/mu)")
    return doc.obj


def _module_from_doc(doc: Document, path: str) -> DerPairRepresentation:
    a, rep, K = doc.obj
    if K is None:
        raise CliError(f"{path}: module documents need the field K")
    return DerPairRepresentation(rep.dim_v, K, rep.rho, rep.mu)


def _print(args, payload: dict, text_lines):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _cmd_validate(args) -> int:
    doc = _load(args.file)
    rep = validate_document(doc)
    _print(
        args,
        {"command": "validate", "kind": doc.kind, "ok": rep["ok"], "failed": rep["failed"]},
        [
            f"kind: {doc.kind}",
            "valid" if rep["ok"] else "invalid: " + ", ".join(rep["failed"]),
        ],
    )
    return 0 if rep["ok"] else 1


def _cmd_bracket(args) -> int:
    f = _load_kind(args.f, "cochain").obj
    g = _load_kind(args.g, "cochain").obj
    if not isinstance(f, Cochain) or not isinstance(g, Cochain):
        raise CliError("bracket needs two full-format cochains")
    if f.dims != g.dims:
        raise CliError("cochains live over different spaces")
    out = mn_bracket(f, g)
    payload = _emit_cochain_doc(out)
    _print(
        args,
        {"command": "bracket", "result": payload},
        [json.dumps(payload, indent=2, sort_keys=True)],
    )
    return 0


def _cmd_cohomology(args) -> int:
    doc = _load_kind(args.pair, "derpair")
    n = args.degree
    if n < 1:
        raise CliError("--degree must be at least 1")
    cid = args.complex
    if cid in ("coeffs", "prelie", "pair"):
        pair = _as_pair(doc, args.pair)
        report = validate_document(doc)
        if not report["ok"]:
            _print(
                args,
                {"command": "cohomology", "ok": False, "failed": report["failed"]},
                ["input is not a valid pair: " + ", ".join(report["failed"])],
            )
            return 1
        data = pair
    elif cid == "regular":
        regp = _require_regular(doc, args.pair)
        report = validate_document(doc)
        if not report["ok"]:
            _print(
                args,
                {"command": "cohomology", "ok": False, "failed": report["failed"]},
                ["input is not a valid pair: " + ", ".join(report["failed"])],
            )
            return 1
        data = regp
    else:  # rep
        regp = _require_regular(doc, args.pair)
        if not args.rep:
            raise CliError("--complex rep needs --rep <module.json>")
        module = _module_from_doc(_load_kind(args.rep, "representation"), args.rep)
        if module.dim_g != regp.algebra.dim:
            raise CliError("module and pair dimensions do not match")
        rep_report = derpair_representation_report(regp, module)
        if not is_prelie(regp.algebra) or not is_derivation(regp.to_derpair()):
            _print(
                args,
                {"command": "cohomology", "ok": False, "failed": ["pair-invalid"]},
                ["input is not a valid pair"],
            )
            return 1
        if not rep_report["ok"]:
            _print(
                args,
                {"command": "cohomology", "ok": False, "failed": rep_report["failed"]},
                ["input is not a valid module: " + ", ".join(rep_report["failed"])],
            )
            return 1
        data = (regp, module)
    z, b, h = cohomology_dim(cid, n, data)
    _print(
        args,
        {"command": "cohomology", "complex": cid, "degree": n, "z": z, "b": b, "h": h},
        [f"complex {cid}, degree {n}: cocycles {z}, coboundaries {b}, cohomology {h}"],
    )
    return 0


def _cmd_mc(args) -> int:
    doc = _load_kind(args.candidate, "derpair")
    p = doc.obj
    if isinstance(p, RegularPair):
        a = p.algebra
        cand = MCCandidate(
            a,
            [a.left_mult(i) for i in range(a.dim)],
            [a.right_mult(i) for i in range(a.dim)],
            p.D,
        )
    else:
        cand = MCCandidate(p.algebra, p.rep.rho, p.rep.mu, p.D)
    res = mc_check(cand)
    sh, hp = res["residual"]
    payload = {
        "command": "mc",
        "is_mc": res["is_mc"],
        "residual": {
            "structure": _emit_full_entries(sh),
            "mixing": _emit_component_entries(hp),
        },
    }
    lines = ["maurer-cartan: " + ("yes" if res["is_mc"] else "no")]
    if not res["is_mc"]:
        which = []
        if not sh.is_zero():
            which.append("structure self-bracket")
        if not hp.is_zero():
            which.append("derivation mixing bracket")
        lines.append("nonzero residual: " + ", ".join(which))
    _print(args, payload, lines)
    return 0 if res["is_mc"] else 1


def _deformation_inputs(args):
    base_doc = _load_kind(args.base, "derpair")
    base = _as_pair(base_doc, args.base)
    vrep = validate_document(base_doc)
    if not vrep["ok"]:
        raise CliError(f"{args.base}: not a valid pair ({', '.join(vrep['failed'])})")
    datum = _load_kind(args.datum, "deformation").obj
    if datum.dims != base.dims:
        raise CliError("datum dimensions do not match the base pair")
    return base, datum


def _cmd_deform_check(args) -> int:
    base, datum = _deformation_inputs(args)
    res = is_infinitesimal_deformation(base, datum)
    _print(
        args,
        {"command": "deform-check", "ok": res["ok"], "failed": res["failed"]},
        [
            "infinitesimal deformation: " + ("yes" if res["ok"] else "no"),
        ]
        + ([] if res["ok"] else ["failed: " + ", ".join(res["failed"])]),
    )
    return 0 if res["ok"] else 1


def _cmd_deform_class(args) -> int:
    base, d1 = _deformation_inputs(args)
    d2 = _load_kind(args.datum2, "deformation").obj
    if d2.dims != base.dims:
        raise CliError("second datum dimensions do not match the base pair")
    try:
        w = same_cohomology_class(base, d1, d2)
    except ValueError as e:
        _print(
            args,
            {"command": "deform-class", "same_class": False, "error": str(e)},
            [f"error: {e}"],
        )
        return 1
    if w is None:
        _print(
            args,
            {"command": "deform-class", "same_class": False, "witness": None},
            ["distinct cohomology classes"],
        )
        return 1
    _print(
        args,
        {
            "command": "deform-class",
            "same_class": True,
            "witness": {"N": emit_matrix(w.N), "S": emit_matrix(w.S)},
        },
        ["same cohomology class", f"N = {emit_matrix(w.N)}", f"S = {emit_matrix(w.S)}"],
    )
    return 0


def _ext_module_inputs(args):
    base = _require_regular(_load_kind(args.base, "derpair"), args.base)
    if not is_prelie(base.algebra) or not is_derivation(base.to_derpair()):
        raise CliError(f"{args.base}: not a valid regular pair")
    module = _module_from_doc(_load_kind(args.module, "representation"), args.module)
    if module.dim_g != base.algebra.dim:
        raise CliError("module and pair dimensions do not match")
    report = derpair_representation_report(base, module)
    if not report["ok"]:
        raise CliError(f"{args.module}: not a module ({', '.join(report['failed'])})")
    return base, module


def _load_ext_cocycle(path: str, base, module) -> ExtensionCocycle:
    c = _load_kind(path, "cochain").obj
    if not isinstance(c, TwoSlotCochain) or c.target != "v" or c.n != 2:
        raise CliError(f"{path}: expected a two-slot cochain of degree 2 with target v")
    if c.dims != SplitDims(base.algebra.dim, module.dim_v):
        raise CliError(f"{path}: dimensions do not match base and module")
    return ExtensionCocycle(c.dims, c.f, c.theta)


def _cmd_ext_build(args) -> int:
    base, module = _ext_module_inputs(args)
    c = _load_ext_cocycle(args.cocycle, base, module)
    try:
        ext = build_extension(base, module, c)
    except ValueError as e:
        _print(args, {"command": "ext-build", "ok": False, "error": str(e)}, [f"error: {e}"])
        return 1
    payload = _emit_extension_doc(ext)
    _print(
        args,
        {"command": "ext-build", "ok": True, "extension": payload},
        [json.dumps({"kind": "extension", **payload}, indent=2, sort_keys=True)],
    )
    return 0


def _cmd_ext_extract(args) -> int:
    ext = _load_kind(args.extension, "extension").obj
    vrep = validate_extension(ext)
    if not vrep["ok"]:
        _print(
            args,
            {"command": "ext-extract", "ok": False, "failed": vrep["failed"]},
            ["not a valid abelian extension: " + ", ".join(vrep["failed"])],
        )
        return 1
    if args.section:
        s = _load_kind(args.section, "derivation").obj
        if s.rows != ext.total.algebra.dim or s.cols != ext.dim_g:
            raise CliError("section has the wrong shape")
    else:
        s = canonical_section(ext)
    try:
        cocycle, module = extract_cocycle(ext, s)
    except ValueError as e:
        _print(args, {"command": "ext-extract", "ok": False, "error": str(e)}, [f"error: {e}"])
        return 1
    payload = {
        "command": "ext-extract",
        "ok": True,
        "cocycle": _emit_cochain_doc(cocycle.two_slot()),
        "module": {
            "dim_v": module.dim_v,
            "K": emit_matrix(module.K),
            "rho": [emit_matrix(m) for m in module.rho_t],
            "mu": [emit_matrix(m) for m in module.mu_t],
        },
    }
    _print(
        args,
        payload,
        [json.dumps({k: v for k, v in payload.items() if k != "command"}, indent=2, sort_keys=True)],
    )
    return 0


def _cmd_ext_classify(args) -> int:
    base, module = _ext_module_inputs(args)
    c1 = _load_ext_cocycle(args.c1, base, module)
    c2 = _load_ext_cocycle(args.c2, base, module)
    try:
        zeta = classify(base, module, c1, c2)
    except ValueError as e:
        _print(
            args,
            {"command": "ext-classify", "same_class": False, "error": str(e)},
            [f"error: {e}"],
        )
        return 1
    if zeta is None:
        _print(
            args,
            {"command": "ext-classify", "same_class": False, "zeta": None},
            ["distinct extension classes"],
        )
        return 1
    _print(
        args,
        {"command": "ext-classify", "same_class": True, "zeta": emit_matrix(zeta)},
        ["isomorphic extensions", f"zeta = {emit_matrix(zeta)}"],
    )
    return 0


def _cmd_les(args) -> int:
    doc = _load_kind(args.pair, "derpair")
    pair = _as_pair(doc, args.pair)
    vrep = validate_document(doc)
    if not vrep["ok"]:
        raise CliError(f"{args.pair}: not a valid pair ({', '.join(vrep['failed'])})")
    if args.max < 1:
        raise CliError("--max must be at least 1")
    report = les_check(pair, args.max)
    lines = []
    for node in report["nodes"]:
        lines.append(
            f"degree {node['degree']} {node['node']}: h={node['h']} "
            f"in={node['rank_in']} out={node['rank_out']} "
            + ("exact" if node["exact"] else "NOT EXACT")
        )
    lines.append("all exact" if report["all_exact"] else "exactness fails")
    _print(args, {"command": "les", **report}, lines)
    return 0 if report["all_exact"] else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    top = argparse.ArgumentParser(
        prog="prelieder",
        description="Exact cohomology and deformation computations for pre-Lie pairs with derivations.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the axioms of a document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("bracket", parents=[common], help="matching bracket of two cochains")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("cohomology", parents=[common], help="cocycle/coboundary/cohomology dimensions")
    p.add_argument("pair")
    p.add_argument(
        "--complex",
        required=True,
        choices=["coeffs", "prelie", "pair", "regular", "rep"],
    )
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rep", help="module document for --complex rep")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("mc", parents=[common], help="Maurer-Cartan test for a candidate pair")
    p.add_argument("candidate")
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("deform", help="infinitesimal deformation commands")
    dsub = p.add_subparsers(dest="subcommand", required=True)
    q = dsub.add_parser("check", parents=[common], help="validate a deformation datum")
    q.add_argument("base")
    q.add_argument("datum")
    q.set_defaults(func=_cmd_deform_check)
    q = dsub.add_parser("class", parents=[common], help="compare two data in cohomology")
    q.add_argument("base")
    q.add_argument("datum")
    q.add_argument("datum2")
    q.set_defaults(func=_cmd_deform_class)

    p = sub.add_parser("ext", help="abelian extension commands")
    esub = p.add_subparsers(dest="subcommand", required=True)
    q = esub.add_parser("build", parents=[common], help="extension from a cocycle")
    q.add_argument("base")
    q.add_argument("module")
    q.add_argument("cocycle")
    q.set_defaults(func=_cmd_ext_build)
    q = esub.add_parser("extract", parents=[common], help="cocycle and module from an extension")
    q.add_argument("extension")
    q.add_argument("--section", help="derivation document with an explicit section matrix")
    q.set_defaults(func=_cmd_ext_extract)
    q = esub.add_parser("classify", parents=[common], help="compare two extension cocycles")
    q.add_argument("base")
    q.add_argument("module")
    q.add_argument("c1")
    q.add_argument("c2")
    q.set_defaults(func=_cmd_ext_classify)

    p = sub.add_parser("les", parents=[common], help="long exact sequence exactness report")
    p.add_argument("pair")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_les)
    return top


def cli_run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
