"""Command line interface: ``pfrigid <subcommand> ...``.

Exit codes: 0 computed, 1 usage or parse error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import __version__
from .errors import ParseError, PfError
from .fpgroups import (
    abelianization,
    build_catalog_group,
    catalog_version,
    compare_fingerprints,
    epimorphism_count,
    find_epimorphism,
    parse_presentation,
    quotient_fingerprint,
)
from .fpgroups.finite import max_order_from_env
from .gl2z import Mat2Z, classify, enumerate_classes, is_conjugate_z, local_conjugacy, nielsen_decompose
from .mapping_torus import (
    DEFAULT_DEPTH,
    b1_profile,
    completion_compatible,
    fingerprint,
    h1,
    identify_b1_one,
    presentation_of,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def json_schema() -> dict:
    """The JSON schema every ``--json`` document conforms to."""
    return json.loads(resources.files(__package__).joinpath("schema.json").read_text())


def _num(x) -> str:
    return str(x)


def _h1_payload(s):
    return {"b1": _num(s.b1), "torsion": [_num(t) for t in s.torsion], "group": str(s)}


def _class_payload(c):
    return {"kind": c.kind.value, "order": None if c.order is None else _num(c.order)}


def _cycles(perm) -> str:
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j))
            j = perm[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def _images_payload(pres, grp, images):
    return {g: _cycles(grp.elements[i]) for g, i in zip(pres.generators, images)}


def _max_order(args) -> int:
    return args.max_order if args.max_order is not None else max_order_from_env()


# -- subcommands: each returns (inputs, result) --------------------------------


def cmd_classify(args):
    m = Mat2Z.parse(args.mat)
    return {"mat": str(m)}, _class_payload(classify(m))


def cmd_h1(args):
    m = Mat2Z.parse(args.mat)
    return {"mat": str(m)}, _h1_payload(h1(m))


def cmd_profile(args):
    m = Mat2Z.parse(args.mat)
    prof = b1_profile(m, args.depth)
    return {"mat": str(m), "depth": _num(args.depth)}, {"b1_profile": [_num(x) for x in prof]}


def cmd_fingerprint(args):
    m = Mat2Z.parse(args.mat)
    f = fingerprint(m, args.depth)
    return {"mat": str(m), "depth": _num(args.depth)}, {
        "det": _num(f.det),
        "trace": _num(f.trace),
        "h1": _h1_payload(f.h1),
        "class": _class_payload(f.mat_class),
        "b1_profile": [_num(x) for x in f.b1_profile],
    }


def cmd_compatible(args):
    a, b = Mat2Z.parse(args.mat1), Mat2Z.parse(args.mat2)
    v = completion_compatible(a, b)
    return {"mat1": str(a), "mat2": str(b)}, {
        "compatible": v.compatible,
        "verdict": "compatible" if v.compatible else "distinguished",
        "reasons": list(v.reasons),
    }


def cmd_identify(args):
    m = Mat2Z.parse(args.mat)
    return {"mat": str(m)}, {"identity": identify_b1_one(m).value}


def cmd_conj(args):
    a, b = Mat2Z.parse(args.mat1), Mat2Z.parse(args.mat2)
    v = is_conjugate_z(a, b)
    return {"mat1": str(a), "mat2": str(b)}, {
        "conjugate": v.conjugate,
        "witness": None if v.witness is None else str(v.witness),
    }


def cmd_localconj(args):
    a, b = Mat2Z.parse(args.mat1), Mat2Z.parse(args.mat2)
    rep = local_conjugacy(a, b, args.bound)
    return {"mat1": str(a), "mat2": str(b), "bound": _num(args.bound)}, {
        "all_pass": rep.all_pass,
        "failures": [_num(m) for m in rep.failures],
    }


def cmd_census(args):
    reps = enumerate_classes(args.tr, args.det)
    return {"tr": _num(args.tr), "det": _num(args.det)}, {
        "count": _num(len(reps)),
        "classes": [str(m) for m in reps],
    }


def cmd_present(args):
    m = Mat2Z.parse(args.mat)
    p = presentation_of(m)
    return {"mat": str(m)}, {
        "nielsen_word": " ".join(nielsen_decompose(m)),
        "presentation": str(p),
        "abelianization": _h1_payload(abelianization(p)),
    }


def cmd_abel(args):
    p = parse_presentation(args.pres)
    return {"pres": str(p)}, _h1_payload(abelianization(p))


def cmd_epi(args):
    p = parse_presentation(args.pres)
    grp = build_catalog_group(args.target)
    inputs = {"pres": str(p), "target": grp.name, "mode": "count" if args.count else "exists"}
    if args.count:
        res = epimorphism_count(p, grp, max_witnesses=1)
        witness = res.witnesses[0] if res.witnesses else None
        result = {"exists": res.count > 0, "count": _num(res.count)}
    else:
        witness = find_epimorphism(p, grp)
        result = {"exists": witness is not None}
    result["witness"] = None if witness is None else _images_payload(p, grp, witness)
    return inputs, result


def cmd_quotients(args):
    p = parse_presentation(args.pres)
    n = _max_order(args)
    fp = quotient_fingerprint(p, max_order=n, jobs=args.jobs)
    return {"pres": str(p), "max_order": _num(n)}, {
        "catalog_version": fp.catalog_version,
        "quotients": list(fp.catalog_ids),
    }


def cmd_compare(args):
    p1, p2 = parse_presentation(args.pres1), parse_presentation(args.pres2)
    n = _max_order(args)
    f1 = quotient_fingerprint(p1, max_order=n, jobs=args.jobs)
    f2 = quotient_fingerprint(p2, max_order=n, jobs=args.jobs)
    d = compare_fingerprints(f1, f2)
    return {"pres1": str(p1), "pres2": str(p2), "max_order": _num(n)}, {
        "catalog_version": d.catalog_version,
        "distinguished": d.distinguished,
        "difference": list(d.difference),
        "only_first": list(d.only_first),
        "only_second": list(d.only_second),
        "min_order": None if d.min_order is None else _num(d.min_order),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfrigid", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pfrigid {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(func=func)
        return sp

    add("classify", cmd_classify, "elliptic / parabolic / hyperbolic", "mat")
    add("h1", cmd_h1, "first homology of the mapping torus", "mat")
    sp = add("profile", cmd_profile, "b1 of the mapping tori of phi^r", "mat")
    sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    sp = add("fingerprint", cmd_fingerprint, "invariant tuple of a monodromy", "mat")
    sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    add("compatible", cmd_compatible, "compare two monodromies by necessary conditions", "mat1", "mat2")
    add("identify", cmd_identify, "name the groups with H1 = Z", "mat")
    add("conj", cmd_conj, "conjugacy in GL(2,Z)", "mat1", "mat2")
    sp = add("localconj", cmd_localconj, "conjugacy in GL(2,Z/m) for 2 <= m <= bound", "mat1", "mat2")
    sp.add_argument("--bound", type=int, required=True)
    sp = add("census", cmd_census, "conjugacy classes with given trace and det")
    sp.add_argument("--tr", type=int, required=True)
    sp.add_argument("--det", type=int, required=True)
    add("present", cmd_present, "presentation of the mapping torus", "mat")
    add("abel", cmd_abel, "abelianization of a presentation", "pres")
    sp = add("epi", cmd_epi, "epimorphisms onto a catalog group", "pres")
    sp.add_argument("--target", required=True, metavar="FAMILY:PARAM")
    sp.add_argument("--count", action="store_true", help="count all epimorphisms")
    for name, func, positionals in (
        ("quotients", cmd_quotients, ("pres",)),
        ("compare", cmd_compare, ("pres1", "pres2")),
    ):
        sp = add(name, func, f"{name} over the default catalog", *positionals)
        sp.add_argument("--max-order", type=int, default=None)
        sp.add_argument("--jobs", type=int, default=1)
    return parser


def _render_text(doc) -> str:
    rows = [("command", doc["command"])]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list):
            rows.append((prefix, ", ".join(map(str, value)) if value else "-"))
        elif value is None:
            rows.append((prefix, "-"))
        elif isinstance(value, bool):
            rows.append((prefix, "yes" if value else "no"))
        else:
            rows.append((prefix, str(value)))

    walk("", doc["inputs"])
    walk("", doc["result"])
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        inputs, result = args.func(args)
    except UsageError as e:
        print(e, file=stderr)
        return 1
    except ParseError as e:
        print(f"parse error: {e}", file=stderr)
        return 1
    except PfError as e:
        print(f"{type(e).__name__}: {e}", file=stderr)
        return 2
    except SystemExit as e:
        # --help and --version
        return 0 if e.code in (0, None) else 1
    max_order = getattr(args, "max_order", None)
    if max_order is None:
        try:
            max_order = max_order_from_env()
        except PfError as e:
            print(f"{type(e).__name__}: {e}", file=stderr)
            return 2
    doc = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "version": {"tool": __version__, "catalog": catalog_version(max_order)},
    }
    if args.json:
        stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(_render_text(doc) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
