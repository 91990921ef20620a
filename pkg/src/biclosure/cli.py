"""Command-line surface.

One verb per invocation. Posets come in as JSON, either inline or as a
file path; everything going out is JSON with sorted keys, so identical
input and flags produce byte-identical output. DOT is write-only.

Exit codes: 0 all checks passed, 1 a check failed (the report carries
the witness), 2 usage or input error, 3 a bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitops import bits
from .dualspace import DUAL_POINT_CAP, dual_space
from .errors import BiclosureError, BoundExceeded
from .poset import (
    MAX_CATALOG_N,
    Poset,
    _dot_quote,
    find_orthocomplementations,
    poset_from_json,
    poset_of_family,
    poset_to_json,
)
from .represent import (
    SUITES,
    SWEEP_CAP,
    check_poset,
    ortho_correspondence,
    represent,
    represent_distributive,
    represent_orthoposet,
    stone,
    sweep_catalog,
)


def _load_poset(arg: str) -> Poset:
    if arg.lstrip().startswith("{"):
        text, source = arg, "<inline json>"
    else:
        source = arg
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return poset_from_json(data)


def _emit_json(payload, out_path) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _side_by_side_dot(poset: Poset, family) -> str:
    """The input Hasse diagram next to its represented family."""
    fam = poset_of_family(family)
    lines = ["digraph representation {", "  rankdir=BT;"]
    lines.append("  subgraph cluster_input {")
    lines.append('    label="input order";')
    for i, lab in enumerate(poset.labels):
        lines.append(f'    p{i} [label="{_dot_quote(lab)}"];')
    for i in range(poset.n):
        for j in bits(poset.covers[i]):
            lines.append(f"    p{i} -> p{j};")
    lines.append("  }")
    lines.append("  subgraph cluster_family {")
    lines.append('    label="closed-open family";')
    for i, lab in enumerate(fam.labels):
        lines.append(f'    f{i} [label="{_dot_quote(lab)}"];')
    for i in range(fam.n):
        for j in bits(fam.covers[i]):
            lines.append(f"    f{i} -> f{j};")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _maybe_dot(args, poset: Poset, family) -> None:
    if getattr(args, "dot", None):
        _emit_text(_side_by_side_dot(poset, family), args.dot)


# --- verbs -------------------------------------------------------------------


def _cmd_dual(args) -> int:
    poset = _load_poset(args.poset)
    star = dual_space(poset, args.dual_cap)
    payload = {
        "poset": poset_to_json(poset),
        "point_count": star.size,
        "points": star.to_json(),
    }
    _emit_json(payload, args.out)
    return 0


def _cmd_represent(args) -> int:
    poset = _load_poset(args.poset)
    if args.kind == "general":
        _, family, report = represent(poset, args.dual_cap)
    elif args.kind == "distributive":
        _, family, report = represent_distributive(poset)
    else:
        orthos = find_orthocomplementations(poset)
        if not orthos:
            raise BiclosureError("poset admits no orthocomplementation")
        if not 0 <= args.ortho_index < len(orthos):
            raise BiclosureError(
                f"ortho index {args.ortho_index} out of range, "
                f"{len(orthos)} found"
            )
        space, report = represent_orthoposet(poset, orthos[args.ortho_index])
        family = space.clopen
    payload = {"kind": args.kind, "report": report.to_json()}
    _emit_json(payload, args.out)
    _maybe_dot(args, poset, family)
    return 0 if report.isomorphism else 1


def _cmd_ortho(args) -> int:
    poset = _load_poset(args.poset)
    orthos = find_orthocomplementations(poset)
    payload = {
        "poset": poset_to_json(poset),
        "count": len(orthos),
        "orthocomplementations": [f.to_json() for f in orthos],
    }
    code = 0
    star = dual_space(poset, args.dual_cap)
    if poset.is_bounded() and star.size <= args.s_cap:
        ok, detail = ortho_correspondence(poset, args.s_cap)
        payload["correspondence"] = detail
        if not ok:
            code = 1
    else:
        payload["correspondence"] = None
    _emit_json(payload, args.out)
    return code


def _cmd_stone(args) -> int:
    poset = _load_poset(args.poset)
    space = stone(poset)
    labels = poset.labels
    payload = {
        "poset": poset_to_json(poset),
        "point_count": space.subspace.size,
        "points": space.subspace.to_json(),
        "clopen_count": len(space.clopen),
        "clopen": [sorted(bits(x)) for x in space.clopen],
        "kernels": [sorted(labels[i] for i in bits(k)) for k in space.kernels],
    }
    _emit_json(payload, args.out)
    _maybe_dot(args, poset, space.clopen)
    return 0


def _cmd_check(args) -> int:
    poset = _load_poset(args.poset)
    report = check_poset(
        poset, suite=args.suite, sweep_cap=args.s_cap, dual_cap=args.dual_cap
    )
    _emit_json(report.to_json(), args.out)
    return 0 if report.all_passed else 1


def _cmd_catalog(args) -> int:
    reports = sweep_catalog(
        args.max_n,
        suite=args.suite,
        sweep_cap=args.s_cap,
        catalog_bound=MAX_CATALOG_N,
    )
    failed = [r for r in reports if not r.all_passed]
    payload = {
        "max_n": args.max_n,
        "suite": args.suite,
        "classes": len(reports),
        "all_passed": not failed,
        "reports": [r.to_json() for r in reports],
    }
    _emit_json(payload, args.out)
    return 0 if not failed else 1


def _cmd_export_dot(args) -> int:
    poset = _load_poset(args.poset)
    star = dual_space(poset, args.dual_cap)
    from .closure import closed_open_family, induced_closures

    c1, c2 = induced_closures(star)
    family = closed_open_family(c1, c2)
    _emit_text(_side_by_side_dot(poset, family), args.out)
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biclosure",
        description="dual spaces, induced closures, and order representations",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, dot=True):
        p.add_argument("poset", help="poset JSON, inline or a file path")
        p.add_argument("--out", default=None, help="write the report here")
        p.add_argument(
            "--dual-cap",
            type=_positive_int,
            default=DUAL_POINT_CAP,
            help="abort if the dual space would exceed this many points",
        )
        if dot:
            p.add_argument(
                "--dot",
                default=None,
                help="also write a side-by-side DOT diagram here",
            )

    p = sub.add_parser("dual", help="enumerate the dual space")
    common(p, dot=False)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("represent", help="represent the poset in a closed-open family")
    common(p)
    p.add_argument(
        "--kind",
        choices=("general", "distributive", "ortho"),
        default="general",
        help="which construction to run",
    )
    p.add_argument(
        "--ortho-index",
        type=int,
        default=0,
        help="which orthocomplementation to use with --kind ortho",
    )
    p.set_defaults(func=_cmd_represent)

    p = sub.add_parser("ortho", help="list orthocomplementations, match subspaces")
    common(p, dot=False)
    p.add_argument(
        "--s-cap",
        type=_positive_int,
        default=SWEEP_CAP,
        help="skip the subspace sweep above this many dual points",
    )
    p.set_defaults(func=_cmd_ortho)

    p = sub.add_parser("stone", help="point space of a Boolean lattice")
    common(p)
    p.set_defaults(func=_cmd_stone)

    p = sub.add_parser("check", help="run the law checks on one poset")
    common(p, dot=False)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--s-cap", type=_positive_int, default=SWEEP_CAP)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("catalog", help="sweep every class up to --max-n")
    p.add_argument("--max-n", type=_positive_int, default=MAX_CATALOG_N)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--s-cap", type=_positive_int, default=SWEEP_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("export-dot", help="input order and represented family, DOT")
    common(p, dot=False)
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BiclosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
