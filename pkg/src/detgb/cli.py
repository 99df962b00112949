"""Command-line front end.

    detgb schubert {ess,rothe,fulton,elusive,redgb,wchar} PERM... [--order new] [--stats]
    detgb verify {gb,minimal,reduced,normality,strongpair} (--schubert W | --elusive W |
                 --redgb W | --ladder FILE) [--order new]
    detgb ladder {onesided,twosided,tovex,criteria} SPECFILE [--order nwe]
    detgb selftest [--seed N]

Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 unsupported order,
4 internal assertion, 5 input too large for the exhaustive checks.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Any

from . import blockwise as bw
from .minor_term import Minor, expand_minor
from .oracle import (ScaleError, inter_reduce, is_groebner, is_minimal_gb, is_reduced_gb,
                     normal_form)
from .permutation import (EssentialBox, Permutation, essential_set, is_vexillary,
                          parse_permutation, rothe_diagram)
from .polynomial import Polynomial, parse_polynomial
from .schubert import (UnsupportedOrderError, elusive_minors, fulton_generators,
                       reduced_gb_schubert, schubert_stats)
from .term_order import VARIANTS, TermOrder
from .trichar import (is_normal, leading_variable, normality_violations,
                      strong_pair_partial_check, w_characteristic_set)

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_INTERNAL, EXIT_SCALE = range(6)

ORDER_CHOICES = sorted(v.lower() for v in VARIANTS)


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- JSON codecs

def dump_permutation(w: Permutation) -> list[int]:
    return list(w.word)


def load_permutation(data) -> Permutation:
    return Permutation(tuple(data))


def dump_minor(m: Minor) -> dict:
    return m.to_json()


def load_minor(data) -> Minor:
    return Minor.from_json(data)


def dump_polynomial(p: Polynomial, order: TermOrder | None = None) -> str:
    return p.format(order)


def load_polynomial(text: str) -> Polynomial:
    return parse_polynomial(text)


def dump_ladder(lad: bw.Ladder) -> dict:
    return lad.to_json()


def load_ladder(data) -> bw.Ladder:
    return bw.Ladder.from_json(data)


def cell_name(c) -> str:
    return f"x[{c[0]},{c[1]}]"


# ---------------------------------------------------------------- helpers

def _perm(tokens: list[str]) -> Permutation:
    text = " ".join(tokens)
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _order(name: str, size: int) -> TermOrder:
    return TermOrder.scanning(name.upper(), size)


def _emit(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        print(text)


def _box_text(b: EssentialBox) -> str:
    return f"({b.p},{b.q}) rank {b.rank}"


def _rothe_text(w: Permutation) -> str:
    d = rothe_diagram(w)
    rows = []
    for i in range(1, w.n + 1):
        rows.append("".join("#" if (i, j) in d else ("*" if w(i) == j else ".")
                            for j in range(1, w.n + 1)))
    return "\n".join(rows)


# ---------------------------------------------------------------- schubert

def cmd_schubert(args) -> int:
    w = _perm(args.perm)
    order = _order(args.order, w.n)
    payload: dict[str, Any] = {"command": f"schubert {args.sub}", "permutation": dump_permutation(w)}
    t0 = time.perf_counter()
    lines: list[str] = []
    basis = None
    if args.sub == "ess":
        ess = essential_set(w)
        payload["essential"] = [list(b) for b in ess]
        lines.append("; ".join(_box_text(b) for b in ess))
    elif args.sub == "rothe":
        d = sorted(rothe_diagram(w))
        payload["diagram"] = [list(c) for c in d]
        lines.append(_rothe_text(w))
    elif args.sub in ("fulton", "elusive"):
        gens = fulton_generators(w) if args.sub == "fulton" else elusive_minors(w)
        payload["generators"] = [{"minor": dump_minor(g.minor), "box": list(g.box)} for g in gens]
        if not args.stats:
            lines.extend(f"{g.minor}  from ({g.box.p},{g.box.q})" for g in gens)
    elif args.sub in ("redgb", "wchar"):
        basis = reduced_gb_schubert(w, order)
        polys = [e.poly for e in basis]
        if args.sub == "redgb":
            payload["order"] = order.variant
            payload["basis"] = [{"source": dump_minor(e.source), "poly": dump_polynomial(e.poly, order),
                                 "removed": e.removed} for e in basis]
            if not args.stats:
                lines.extend(dump_polynomial(p, order) for p in polys)
        else:
            C = w_characteristic_set(polys, order, check=False)
            payload["order"] = order.variant
            payload["triangular_set"] = [
                {"lv": list(leading_variable(p, order)), "poly": dump_polynomial(p, order)} for p in C]
            payload["normal"] = is_normal(C)
            payload["violations"] = [[k, list(v)] for k, v in normality_violations(C)]
            if not args.stats:
                for p in C:
                    lines.append(f"{cell_name(leading_variable(p, order))}: {dump_polynomial(p, order)}")
                lines.append(f"normal: {'yes' if payload['normal'] else 'no'}")
    if args.stats:
        stats = schubert_stats(w, basis)
        stats["seconds"] = round(time.perf_counter() - t0, 4)
        payload["stats"] = stats
        lines.extend(f"{k}: {v}" for k, v in stats.items())
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- verify

def _ladder_from_file(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read ladder spec {path}: {exc}") from None
    if "lower" not in data or "r" not in data:
        raise InputError("ladder spec needs 'lower' and 'r'")
    return data


def _ladder_polys(data) -> tuple[list[Polynomial], int]:
    lad = load_ladder(data)
    r = list(data["r"])
    if len(lad.upper) == 1 and len(r) == len(lad.lower) and len(r) > 1:
        spec = bw.one_sided_ideal([a for a, _ in lad.lower], [b for _, b in lad.lower], r, lad.m, lad.n)
        return spec.polynomials(), max(lad.m, lad.n)
    groups = bw.two_sided_generators(lad, r)
    return [expand_minor(m) for g in groups for m in g], max(lad.m, lad.n)


def cmd_verify(args) -> int:
    targets = [t for t in ("schubert", "elusive", "redgb", "ladder") if getattr(args, t)]
    if len(targets) != 1:
        raise InputError("give exactly one of --schubert, --elusive, --redgb, --ladder")
    kind = targets[0]
    report: dict[str, Any] = {"command": f"verify {args.sub}", "target": kind}
    if kind == "ladder":
        polys, size = _ladder_polys(_ladder_from_file(args.ladder))
        order = _order(args.order, size)
        reduced = polys
    else:
        w = _perm([getattr(args, kind)])
        order = _order(args.order, w.n)
        report["permutation"] = dump_permutation(w)
        if kind == "schubert":
            polys = list({expand_minor(g.minor): None for g in fulton_generators(w)})
        elif kind == "elusive":
            polys = [expand_minor(g.minor) for g in elusive_minors(w)]
        else:
            polys = [e.poly for e in reduced_gb_schubert(w, order)]
        reduced = None
    report["order"] = order.variant
    report["size"] = len(polys)
    limits = {}
    if args.max_polys:
        limits["max_polys"] = args.max_polys
    if args.max_vars:
        limits["max_vars"] = args.max_vars

    if args.sub == "gb":
        ok = is_groebner(polys, order, **limits)
    elif args.sub == "minimal":
        ok = is_groebner(polys, order, **limits) and is_minimal_gb(polys, order)
    elif args.sub == "reduced":
        ok = is_groebner(polys, order, **limits) and is_reduced_gb(polys, order)
    else:
        if reduced is None:
            if not is_groebner(polys, order, **limits):
                raise InputError("target is not a Groebner basis under this order")
            reduced = inter_reduce(polys, order)
        C = w_characteristic_set(reduced, order)
        report["leading_variables"] = [list(v) for v in C.leading_variables]
        if args.sub == "normality":
            ok = is_normal(C)
            report["violations"] = [{"index": k, "lv": list(C.leading_variables[k]),
                                     "variable": list(v)} for k, v in normality_violations(C)]
        else:
            ok = strong_pair_partial_check(reduced, C)
    report["pass"] = bool(ok)
    print(json.dumps({"schema": SCHEMA, **report}, indent=2, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- ladder

def cmd_ladder(args) -> int:
    data = _ladder_from_file(args.specfile)
    r = list(data["r"])
    lower = [tuple(c) for c in data["lower"]]
    m, n = data.get("m"), data.get("n")
    payload: dict[str, Any] = {"command": f"ladder {args.sub}"}
    lines: list[str] = []
    ok = True
    if args.sub in ("onesided", "tovex"):
        spec = bw.one_sided_ideal([a for a, _ in lower], [b for _, b in lower], r, m, n)
        if args.sub == "onesided":
            groups = spec.generators()
            payload["groups"] = [[dump_minor(x) for x in g] for g in groups]
            payload["counts"] = [len(g) for g in groups]
            lines.append("counts: " + " ".join(map(str, payload["counts"])))
            lines.append(f"total: {sum(payload['counts'])}")
        else:
            nn = data.get("n_perm")
            w = bw.ladder_to_vexillary(spec, nn)
            got = sorted(tuple(e) for e in essential_set(w))
            want = sorted((p, q, ri - 1) for (p, q), ri in zip(lower, r))
            ok = got == want
            payload["permutation"] = dump_permutation(w)
            payload["ess_match"] = ok
            lines.append(f"permutation: {w}")
            lines.append(f"ess match: {'yes' if ok else 'no'}")
    else:
        lad = bw.Ladder(tuple(lower), tuple(tuple(c) for c in data.get("upper") or [[1, 1]]), m, n)
        payload["ladder"] = dump_ladder(lad)
        if args.sub == "twosided":
            groups = bw.two_sided_generators(lad, r, literal=args.literal)
            payload["groups"] = [[dump_minor(x) for x in g] for g in groups]
            payload["counts"] = [len(g) for g in groups]
            for k, g in enumerate(groups):
                lines.append(f"L{k + 1} (r={r[k]}): {len(g)} minors")
                lines.extend(f"  {x}" for x in g)
        else:
            if len(lad.upper) == 1 and len(r) == len(lower):
                spec = bw.one_sided_ideal([a for a, _ in lower], [b for _, b in lower], r, m, n)
            else:
                spec = bw.two_sided_spec(lad, r)
            order = _order(args.order, max(lad.m, lad.n))
            results = {"disjoint_blocks": bw.criterion_disjoint_blocks(spec)}
            for name, fn in (("disjoint_leading_vars", lambda: bw.criterion_disjoint_leading_vars(spec, order)),
                             ("attend_or_lcm", lambda: bw.criterion_attend_or_lcm(spec, order)),
                             ("rowcolumn", lambda: bw.criterion_rowcolumn(spec)),
                             ("fewer_rows", lambda: bw.criterion_fewer_rows(spec))):
                try:
                    results[name] = fn()
                except (bw.BlockKindError, ScaleError) as exc:
                    results[name] = exc
            payload["order"] = order.variant
            payload["criteria"] = {k: (v.to_json() if isinstance(v, bw.CriterionResult)
                                       else {"skipped": str(v)}) for k, v in results.items()}
            for k, v in results.items():
                lines.append(f"{k}: " + (("yes" if v else "no") if isinstance(v, bw.CriterionResult)
                                         else f"skipped ({v})"))
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- selftest

def cmd_selftest(args) -> int:
    """Formula-versus-division comparison on random small permutations."""
    rng = random.Random(args.seed)
    failures = []
    for _ in range(args.count):
        n = rng.choice([4, 5])
        w = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        order = TermOrder.scanning("NEW", n)
        formula = [e.poly for e in reduced_gb_schubert(w, order)]
        oracle = inter_reduce([expand_minor(g.minor) for g in elusive_minors(w)], order)
        if sorted(map(str, formula)) != sorted(map(str, oracle)):
            failures.append(dump_permutation(w))
    report = {"command": "selftest", "seed": args.seed, "count": args.count,
              "failures": failures, "pass": not failures}
    _emit(report, args.format, f"selftest seed={args.seed}: "
          + ("ok" if not failures else f"{len(failures)} failures"))
    return EXIT_OK if not failures else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="detgb", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_order):
        sp.add_argument("--order", choices=ORDER_CHOICES, default=default_order, type=str.lower)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("schubert", help="Schubert determinantal ideals")
    s.add_argument("sub", choices=("ess", "rothe", "fulton", "elusive", "redgb", "wchar"))
    s.add_argument("perm", nargs="+", help="2143, [10,9,2,...] or 1 2 3")
    s.add_argument("--stats", action="store_true")
    common(s, "new")
    s.set_defaults(func=cmd_schubert)

    v = sub.add_parser("verify", help="classical Groebner checks (small inputs)")
    v.add_argument("sub", choices=("gb", "minimal", "reduced", "normality", "strongpair"))
    v.add_argument("--schubert", metavar="W", help="Fulton generators of W")
    v.add_argument("--elusive", metavar="W", help="elusive minors of W")
    v.add_argument("--redgb", metavar="W", help="formula reduced basis of W")
    v.add_argument("--ladder", metavar="FILE", help="ladder spec JSON")
    v.add_argument("--max-polys", type=int)
    v.add_argument("--max-vars", type=int)
    v.add_argument("--order", choices=ORDER_CHOICES, default="new", type=str.lower)
    v.set_defaults(func=cmd_verify)

    lad = sub.add_parser("ladder", help="ladder and one-sided ideals")
    lad.add_argument("sub", choices=("onesided", "twosided", "tovex", "criteria"))
    lad.add_argument("specfile")
    lad.add_argument("--literal", action="store_true",
                     help="two-sided filter without the equal-size tie rule")
    common(lad, "nwe")
    lad.set_defaults(func=cmd_ladder)

    st = sub.add_parser("selftest", help="randomised formula-vs-oracle comparison")
    st.add_argument("--seed", type=int, default=2024)
    st.add_argument("--count", type=int, default=20)
    st.add_argument("--format", choices=("text", "json"), default="text")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedOrderError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ScaleError as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
