"""Command-line front end: file I/O, batch verification, dimension sweeps,
Hecke reports, catalog browsing, equivalence transforms, presentation export.

The on-disk format is JSON.  Tensor entries are nested arrays of scalar
literals, indexed output-slots-first: ``A[al][i][j]`` is the coefficient
of ``y_al`` in ``A(x_i (x) x_j)``, ``a[i][j][al]`` the coefficient of
``x_i (x) x_j`` in ``a(y_al)``, and so on down to the 3x3 interface
tensors.  Scalar literals round-trip through the scalars grammar, so a
saved file reloads to an equal datum in either mode.

Exit codes: 0 all checks pass, 1 mathematical failure, 2 usage or I/O
error.  Reports are emitted as text, JSON (schema "bqd-report/1"), or
CSV; JSON output is deterministic.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .bqd import (
    AxiomViolation,
    Bqd,
    Report,
    SingularMatrix,
    TENSOR_NAMES,
    ZeroScale,
    apply_base_change,
    apply_rescale,
    dynkin_flip,
    export_presentation,
    verify_all,
)
from .bqd import _SIGS as _TENSOR_SIGS
from .catalog import (
    CASES,
    CaseConditionViolated,
    DegeneratePairing,
    NormalizationFailed,
    NotABqdQ,
    UnknownCase,
    all_case_ids,
    detect_Q_type,
    instantiate,
)
from .hecke import (
    AmbiguousSolution,
    IndexOutOfRange,
    NoSolution,
    build_context,
    solve_P,
    verify_P_properties,
    verify_hecke_suite,
)
from .linalg import Mat, TMap
from .scalars import (
    ModeMismatch,
    ParseError,
    RootOfUnityQ,
    format_scalar,
    one,
    omega,
    parse_scalar,
)
from .shape import DegreeBoundExceeded, ShapeTower, expected_dim

__all__ = [
    "FormatError",
    "RunConfig",
    "load_bqd",
    "main",
    "save_bqd",
]

SCHEMA = "bqd-report/1"


class FormatError(ValueError):
    """A bqd file does not conform to the JSON format."""


@dataclass
class RunConfig:
    command: str
    paths: list = field(default_factory=list)
    mode: str = None            # None: take the file's word for it
    max_total: int = 6
    fmt: str = "text"
    jobs: int = 1
    output: str = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_total < 0:
            raise ValueError("--max-total must be nonnegative")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def _tensor_to_lists(tmap: TMap):
    """Nested scalar-literal arrays, output slots first."""
    ncod, ndom = len(tmap.cod), len(tmap.dom)
    mat = tmap.mat

    def entry(codidx, domidx):
        r = 0
        for x in codidx:
            r = 3 * r + x
        c = 0
        for x in domidx:
            c = 3 * c + x
        return format_scalar(mat.entry(r, c))

    def build(codidx, domidx):
        if len(codidx) < ncod:
            return [build(codidx + (x,), domidx) for x in range(3)]
        if len(domidx) < ndom:
            return [build(codidx, domidx + (x,)) for x in range(3)]
        return entry(codidx, domidx)

    return build((), ())


def _tensor_from_lists(name: str, data, mode: str) -> TMap:
    dom, cod = _TENSOR_SIGS[name]
    mat = Mat(3 ** len(cod), 3 ** len(dom), mode)

    def fill(codidx, domidx, node, path):
        depth = len(codidx) + len(domidx)
        if depth < len(cod) + len(dom):
            if not isinstance(node, list) or len(node) != 3:
                raise FormatError(f"{path} must be an array of length 3")
            for x, sub in enumerate(node):
                if len(codidx) < len(cod):
                    fill(codidx + (x,), domidx, sub, f"{path}[{x}]")
                else:
                    fill(codidx, domidx + (x,), sub, f"{path}[{x}]")
            return
        if not isinstance(node, str):
            raise FormatError(f"{path} must be a scalar literal string")
        try:
            v = parse_scalar(node, mode)
        except ParseError as ex:
            raise FormatError(f"{path}: {ex}") from None
        r = 0
        for x in codidx:
            r = 3 * r + x
        c = 0
        for x in domidx:
            c = 3 * c + x
        if v:
            mat.set_entry(r, c, v)

    fill((), (), data, name)
    return TMap(dom, cod, mat)


def save_bqd(L: Bqd, path: str) -> None:
    if L.omega == one(L.mode):
        om = "1"
    elif L.omega == omega(L.mode):
        om = "w"
    else:
        raise FormatError("omega is not 1 or w; the file format cannot hold it")
    doc = {
        "name": L.name,
        "mode": L.mode,
        "q": format_scalar(L.q),
        "omega": om,
    }
    for name in TENSOR_NAMES:
        doc[name] = _tensor_to_lists(getattr(L, name))
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_bqd(path: str, mode: str = None) -> Bqd:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as ex:
            raise FormatError(f"{path}: not valid JSON ({ex})") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    for key in ("name", "mode", "q", "omega", *TENSOR_NAMES):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    fmode = doc["mode"]
    if fmode not in ("numeric", "symbolic"):
        raise FormatError(f"mode must be numeric or symbolic, not {fmode!r}")
    if mode is not None and fmode != mode:
        raise ModeMismatch(f"file is {fmode}, session wants {mode}")
    if doc["omega"] not in ("1", "w"):
        raise FormatError(f"omega must be \"1\" or \"w\", not {doc['omega']!r}")
    try:
        q = parse_scalar(doc["q"], fmode)
    except ParseError as ex:
        raise FormatError(f"q: {ex}") from None
    om = one(fmode) if doc["omega"] == "1" else omega(fmode)
    tensors = {n: _tensor_from_lists(n, doc[n], fmode) for n in TENSOR_NAMES}
    name = doc["name"]
    if not isinstance(name, str):
        raise FormatError("name must be a string")
    return Bqd(q, om, name=name, **tensors)


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

def _report_records(rep: Report):
    return [
        {"check": c.law, "status": "pass" if c.ok else "fail",
         "witness": c.detail}
        for c in rep.checks
    ]


def _emit(cfg: RunConfig, payload: dict) -> None:
    if cfg.fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=1))
        return
    records = payload.get("checks", [])
    if cfg.fmt == "csv":
        writer = csv.writer(sys.stdout)
        cols = sorted({k for rec in records for k in rec})
        writer.writerow(cols)
        for rec in records:
            writer.writerow([rec.get(c, "") for c in cols])
        return
    # text
    title = payload.get("title", payload.get("command", ""))
    if title:
        print(title)
    width = max((len(rec["check"]) for rec in records), default=0)
    for rec in records:
        line = f"  {rec['status']:<8} {rec['check']:<{width}}"
        extra = rec.get("witness") or ""
        for key in sorted(rec):
            if key in ("check", "status", "witness"):
                continue
            extra += f"  {key}={rec[key]}"
        print(line + ("  " + extra if extra else ""))
    for key, value in payload.items():
        if key in ("checks", "title", "command"):
            continue
        print(f"{key}: {value}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def command_verify(cfg: RunConfig) -> int:
    L = load_bqd(cfg.paths[0], cfg.mode)
    rep = verify_all(L)
    qt = detect_Q_type(L)
    payload = {
        "command": "verify",
        "subject": L.name,
        "title": f"verify {L.name or cfg.paths[0]}",
        "checks": _report_records(rep),
        "q_type": qt.letter,
        "summary": f"{sum(c.ok for c in rep.checks)}/{len(rep.checks)} passed",
    }
    _emit(cfg, payload)
    return 0 if rep.ok else 1


def command_dims(cfg: RunConfig) -> int:
    L = load_bqd(cfg.paths[0], cfg.mode)
    tower = ShapeTower.for_M(L)
    records = []
    for total in range(cfg.max_total + 1):
        for k in range(total, -1, -1):
            l = total - k
            got = tower.dim(k, l)
            want = expected_dim(k, l)
            ambient = 3 ** (k + l)
            records.append({
                "check": f"dims/({k},{l})",
                "status": "pass" if got == want else "evidence",
                "witness": "",
                "ambient": ambient,
                "ideal_rank": ambient - got,
                "quotient": got,
                "expected": want,
                "match": got == want,
            })
    payload = {
        "command": "dims",
        "subject": L.name,
        "title": f"dims {L.name or cfg.paths[0]} (k+l <= {cfg.max_total})",
        "checks": records,
        "summary": f"{sum(r['match'] for r in records)}/{len(records)} match",
    }
    _emit(cfg, payload)
    return 0


def command_hecke(cfg: RunConfig) -> int:
    L = load_bqd(cfg.paths[0], cfg.mode)
    k, l = cfg.extra["k"], cfg.extra["l"]
    ctx = build_context(L, k, l)
    rep = verify_hecke_suite(ctx)
    result = solve_P(ctx)
    prep = verify_P_properties(ctx, result)
    rep = rep.merge(prep)
    payload = {
        "command": "hecke",
        "subject": L.name,
        "title": f"hecke {L.name or cfg.paths[0]} at ({k},{l})",
        "checks": _report_records(rep),
        "alphas": [format_scalar(a) for a in result.alphas],
        "rank": result.rank,
        "expected_rank": expected_dim(k, l),
        "complement_rank": ctx.dim - result.rank,
        "summary": f"{sum(c.ok for c in rep.checks)}/{len(rep.checks)} passed",
    }
    _emit(cfg, payload)
    return 0 if rep.ok else 1


def command_catalog(cfg: RunConfig) -> int:
    sub = cfg.extra["subcommand"]
    if sub == "list":
        records = []
        for cid in all_case_ids():
            cd = CASES[cid]
            records.append({
                "check": f"case/{cid}",
                "status": "pass",
                "witness": "",
                "q_type": cd.qtype,
                "params": " ".join(cd.params) or "-",
                "elliptic": cd.elliptic,
                "summary": cd.summary,
            })
        _emit(cfg, {"command": "catalog list", "title": "catalog",
                    "checks": records})
        return 0
    # catalog make
    case_id = cfg.extra["case"]
    params = dict(cfg.extra["params"])
    mode = cfg.mode or "numeric"
    L = instantiate(case_id, params=params or None, mode=mode)
    save_bqd(L, cfg.output)
    print(f"wrote {cfg.output} ({L.name}, q = {format_scalar(L.q)})")
    return 0


def command_transform(cfg: RunConfig) -> int:
    L = load_bqd(cfg.paths[0], cfg.mode)
    if cfg.extra.get("flip"):
        out = dynkin_flip(L)
    elif cfg.extra.get("rescale"):
        mu_text, sigma_text = cfg.extra["rescale"]
        mu = parse_scalar(mu_text, L.mode)
        sigma = parse_scalar(sigma_text, L.mode)
        out = apply_rescale(L, mu, sigma)
    else:
        gpath = cfg.extra["basechange"]
        with open(gpath) as fh:
            try:
                gdoc = json.load(fh)
            except json.JSONDecodeError as ex:
                raise FormatError(f"{gpath}: not valid JSON ({ex})") from None
        mats = {}
        for key in ("gV", "gW"):
            rows = gdoc.get(key)
            if not (isinstance(rows, list) and len(rows) == 3
                    and all(isinstance(r, list) and len(r) == 3 for r in rows)):
                raise FormatError(f"{key} must be a 3x3 array")
            m = Mat(3, 3, L.mode)
            for r, row in enumerate(rows):
                for c, lit in enumerate(row):
                    v = parse_scalar(lit, L.mode) if isinstance(lit, str) \
                        else parse_scalar(str(lit), L.mode)
                    if v:
                        m.set_entry(r, c, v)
            mats[key] = m
        out = apply_base_change(L, mats["gV"], mats["gW"])
    save_bqd(out, cfg.output)
    print(f"wrote {cfg.output} ({out.name})")
    return 0


def _relation_records(doc):
    records = []
    for kind, rels in (("relation", doc.relations), ("alt", doc.alt_relations)):
        for rel in rels:
            quad = {
                f"{g1}^{u1}_{d1}*{g2}^{u2}_{d2}": format_scalar(v)
                for ((g1, u1, d1), (g2, u2, d2)), v in sorted(rel.quad.items())
            }
            lin = {
                f"{g}^{u}_{d}": format_scalar(v)
                for (g, u, d), v in sorted(rel.lin.items())
            }
            records.append({
                "kind": kind,
                "family": rel.family,
                "index": list(rel.index),
                "quad": quad,
                "lin": lin,
                "const": format_scalar(rel.const),
            })
    return records


def command_export(cfg: RunConfig) -> int:
    L = load_bqd(cfg.paths[0], cfg.mode)
    doc = export_presentation(L)
    payload = {
        "schema": "bqd-presentation/1",
        "subject": L.name,
        "generators": doc.generators,
        "relations": _relation_records(doc),
        "antipode_t": [
            [{f"u^{al}_{be}": format_scalar(v) for (al, be), v in sorted(cell.items())}
             for cell in row]
            for row in doc.antipode_t
        ],
        "antipode_u": [
            [{f"t^{i}_{j}": format_scalar(v) for (i, j), v in sorted(cell.items())}
             for cell in row]
            for row in doc.antipode_u
        ],
        "counit": doc.counit,
    }
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["kind", "family", "index", "term", "coefficient"])
        for rec in payload["relations"]:
            idx = ",".join(str(x) for x in rec["index"])
            for term, coeff in rec["quad"].items():
                writer.writerow([rec["kind"], rec["family"], idx, term, coeff])
            for term, coeff in rec["lin"].items():
                writer.writerow([rec["kind"], rec["family"], idx, term, coeff])
            if rec["const"] != "0":
                writer.writerow([rec["kind"], rec["family"], idx, "1", rec["const"]])
        text = buf.getvalue()
    elif cfg.fmt == "text":
        lines = [f"presentation of {L.name or cfg.paths[0]}"]
        for rec in payload["relations"]:
            terms = [f"({v})*{t}" for t, v in rec["quad"].items()]
            terms += [f"({v})*{t}" for t, v in rec["lin"].items()]
            if rec["const"] != "0":
                terms.append(f"({rec['const']})")
            idx = ",".join(str(x) for x in rec["index"])
            lines.append(
                f"[{rec['kind']}] {rec['family']}({idx}): "
                + (" + ".join(terms) if terms else "0") + " = 0"
            )
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(payload, indent=1) + "\n"
    with open(cfg.output, "w") as fh:
        fh.write(text)
    print(f"wrote {cfg.output} ({len(payload['relations'])} relations)")
    return 0


_COMMANDS = {
    "verify": command_verify,
    "dims": command_dims,
    "hecke": command_hecke,
    "catalog": command_catalog,
    "transform": command_transform,
    "export": command_export,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    # the shared flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        dest="fmt", default=argparse.SUPPRESS)
    common.add_argument("--mode", choices=("numeric", "symbolic"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="parallelism hint (report order is unaffected)")

    parser = argparse.ArgumentParser(
        prog="bqd",
        description="exact verification toolkit for basic quantum sl(3) data",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run every axiom check on a file")
    p.add_argument("file")

    p = sub.add_parser("dims", parents=[common],
                       help="dimension sweep of the reduced model")
    p.add_argument("file")
    p.add_argument("--max-total", type=int, default=6)

    p = sub.add_parser("hecke", parents=[common],
                       help="relation suite and projector at (k,l)")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--json", action="store_true",
                   help="shorthand for --format json")

    p = sub.add_parser("catalog", parents=[common],
                       help="browse or instantiate the case list")
    casesub = p.add_subparsers(dest="subcommand", required=True)
    casesub.add_parser("list", parents=[common])
    pm = casesub.add_parser("make", parents=[common])
    pm.add_argument("case")
    pm.add_argument("--param", action="append", default=[],
                    metavar="NAME=VALUE")
    pm.add_argument("-o", "--output", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="apply an equivalence and save")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--flip", action="store_true")
    group.add_argument("--rescale", nargs=2, metavar=("MU", "SIGMA"))
    group.add_argument("--basechange", metavar="GFILE")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("export", parents=[common],
                       help="write the generator/relation document")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)

    return parser


def _config_from(ns: argparse.Namespace) -> RunConfig:
    extra = {}
    paths = []
    output = getattr(ns, "output", None)
    if ns.command in ("verify", "dims", "hecke", "transform", "export"):
        paths = [ns.file]
    fmt = getattr(ns, "fmt", "text")
    mode = getattr(ns, "mode", None) or os.environ.get("BQD_MODE") or None
    if mode not in (None, "numeric", "symbolic"):
        raise ValueError(f"BQD_MODE must be numeric or symbolic, not {mode!r}")
    if ns.command == "hecke":
        extra["k"], extra["l"] = ns.k, ns.l
        if ns.json:
            fmt = "json"
    if ns.command == "catalog":
        extra["subcommand"] = ns.subcommand
        if ns.subcommand == "make":
            extra["case"] = ns.case
            params = {}
            for item in ns.param:
                if "=" not in item:
                    raise ValueError(f"--param wants NAME=VALUE, got {item!r}")
                name, _, value = item.partition("=")
                params[name.strip()] = value.strip()
            extra["params"] = params
    if ns.command == "transform":
        extra["flip"] = ns.flip
        extra["rescale"] = ns.rescale
        extra["basechange"] = ns.basechange
    return RunConfig(
        command=ns.command,
        paths=paths,
        mode=mode,
        max_total=getattr(ns, "max_total", 6),
        fmt=fmt,
        jobs=getattr(ns, "jobs", 1),
        output=output,
        extra=extra,
    )


_MATH_ERRORS = (
    AxiomViolation,
    AmbiguousSolution,
    CaseConditionViolated,
    DegeneratePairing,
    NoSolution,
    NormalizationFailed,
    NotABqdQ,
    RootOfUnityQ,
    SingularMatrix,
    ZeroScale,
)

_USAGE_ERRORS = (
    DegreeBoundExceeded,
    FormatError,
    IndexOutOfRange,
    ModeMismatch,
    OSError,
    ParseError,
    UnknownCase,
    ValueError,
    ZeroDivisionError,
)


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        cfg = _config_from(ns)
        return _COMMANDS[cfg.command](cfg)
    except _MATH_ERRORS as ex:
        print(f"failure: {ex}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
