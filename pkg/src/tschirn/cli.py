"""Command-line front end.

Subcommands map one-to-one onto library operations: invariants, resolvent,
factor, decide-iso, classify, transform, reduce, family, scan, and a
selftest driver.  Output is deterministic for identical argv; --json emits
a stable schema-1 document.  Exit codes: 0 success, 1 mathematical
precondition failure, 2 usage error.

Cubic inputs: --a a1,a2,a3 encodes X^3 - a1 X^2 + a2 X - a3 (the sign
convention used throughout); --monic-a c2,c1,c0 encodes the plain monic
X^3 + c2 X^2 + c1 X + c0 as an alternative.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

# Lets option values like "-1,-2,1" or "-27/8" parse as arguments rather
# than being mistaken for option names.
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,.*)?$")

from .decide import (
    all_rational_transformations,
    classify_subfield,
    decide_same_splitting,
    galois_type,
    verify_transformation,
)
from .factorq import factor_over_Q
from .families import (
    family_c3,
    family_s3,
    rationals_by_height,
    reduce_depressed,
    reduce_one_param,
    reduce_shanks,
    scan_equal_splitting,
)
from .fields import QQ, MathDomainError
from .poly import RootTuple, UniPoly
from .resolvent import (
    CubicTriple,
    cubic_invariants,
    degeneracy_indicator,
    oracle_resolvent,
    resolvent_F0,
    resolvent_F1,
    resolvent_F2,
    shanks_triple,
    tschirn_image,
)

_SEED_ENV = "TSCHIRN_SEED"
_JOBS_ENV = "TSCHIRN_JOBS"


# --------------------------------------------------------------------------
# Argument parsing.
# --------------------------------------------------------------------------


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _rat_list(text: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty coefficient list")
    return tuple(_rat(p) for p in parts)


def _rat_triple(text: str) -> tuple:
    values = _rat_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(
            f"expected three comma-separated rationals, got {text!r}"
        )
    return values


def _resolve_triple(parser: argparse.ArgumentParser, ns, name: str) -> CubicTriple:
    paper = getattr(ns, name)
    monic = getattr(ns, f"monic_{name}")
    if (paper is None) == (monic is None):
        parser.error(f"give exactly one of --{name} or --monic-{name}")
    if paper is not None:
        return CubicTriple(*paper)
    c2, c1, c0 = monic
    return CubicTriple(-c2, c1, -c0)


def _add_triple(sub: argparse.ArgumentParser, name: str, required_help: str):
    sub.add_argument(
        f"--{name}",
        type=_rat_triple,
        metavar="a1,a2,a3",
        help=f"{required_help} as X^3 - a1 X^2 + a2 X - a3",
    )
    sub.add_argument(
        f"--monic-{name}",
        dest=f"monic_{name}",
        type=_rat_triple,
        metavar="c2,c1,c0",
        help=f"{required_help} as the monic X^3 + c2 X^2 + c1 X + c0",
    )


# --------------------------------------------------------------------------
# Rendering.
# --------------------------------------------------------------------------


def _s(x) -> str:
    return str(x)


def _triple_str(t: CubicTriple) -> str:
    return ",".join(str(v) for v in t.values())


def _emit(ns, command: str, inputs: dict, result, witness=None,
          has_witness: bool = False, diagnostics=(), text_lines=()) -> None:
    if ns.json:
        doc = {
            "schema": 1,
            "command": command,
            "inputs": inputs,
            "result": result,
            "diagnostics": list(diagnostics),
        }
        if has_witness:
            doc["witness"] = witness
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    for line in text_lines:
        print(line)
    for diag in diagnostics:
        print(f"warning: {diag}")


def _witness_list(coeffs):
    return [str(c) for c in coeffs.as_tuple()] if coeffs is not None else None


def _witness_str(coeffs):
    return ",".join(str(c) for c in coeffs.as_tuple()) if coeffs is not None else "none"


# --------------------------------------------------------------------------
# Subcommand handlers.
# --------------------------------------------------------------------------


def _cmd_invariants(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    inv = cubic_invariants(a)
    diagnostics = []
    gtype = None
    if inv.D == 0:
        diagnostics.append("D = 0: inseparable (repeated roots)")
    else:
        gtype = galois_type(a).tag
    result = {
        "A": _s(inv.A), "B": _s(inv.B), "C": _s(inv.C),
        "D": _s(inv.D), "E": _s(inv.E), "galois_type": gtype,
    }
    lines = [f"{k} = {inv_val}" for k, inv_val in
             (("A", inv.A), ("B", inv.B), ("C", inv.C), ("D", inv.D), ("E", inv.E))]
    lines.append(f"galois_type = {gtype if gtype else 'undefined'}")
    _emit(ns, "invariants", {"a": _triple_str(a)}, result,
          diagnostics=diagnostics, text_lines=lines)
    return 0


def _cmd_resolvent(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    b = _resolve_triple(parser, ns, "b")
    builder = {0: resolvent_F0, 1: resolvent_F1, 2: resolvent_F2}[ns.index]
    poly = builder(a, b)
    diagnostics = []
    if degeneracy_indicator(a, b) == 0:
        diagnostics.append("degenerate locus: the sextic has a multiple root")
    result = {
        "index": ns.index,
        "poly": str(poly),
        "coeffs": [_s(poly[i]) for i in range(7)],
    }
    _emit(ns, "resolvent", {"a": _triple_str(a), "b": _triple_str(b),
                            "index": str(ns.index)},
          result, diagnostics=diagnostics,
          text_lines=[f"F{ns.index} = {poly}"])
    return 0


def _cmd_factor(parser, ns) -> int:
    f = UniPoly(QQ, ns.coeffs)
    fac = factor_over_Q(f)
    result = {
        "input": str(f),
        "unit": _s(fac.unit),
        "factors": [[str(g), m] for g, m in fac.factors],
        "degree_pattern": list(fac.degree_pattern()),
    }
    lines = [f"input = {f}", f"unit = {fac.unit}"]
    lines += [f"factor = ({g})^{m}" if m > 1 else f"factor = {g}"
              for g, m in fac.factors]
    lines.append(
        "degree_pattern = " + ",".join(str(d) for d in fac.degree_pattern())
    )
    _emit(ns, "factor", {"coeffs": [_s(c) for c in ns.coeffs]}, result,
          text_lines=lines)
    return 0


def _cmd_decide_iso(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    b = _resolve_triple(parser, ns, "b")
    equal, witness = decide_same_splitting(a, b)
    lines = [f"equal = {str(equal).lower()}"]
    if witness is not None:
        lines.append(f"witness = {_witness_str(witness)}")
    _emit(ns, "decide-iso", {"a": _triple_str(a), "b": _triple_str(b)},
          {"equal": equal}, witness=_witness_list(witness), has_witness=True,
          text_lines=lines)
    return 0


def _cmd_classify(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    b = _resolve_triple(parser, ns, "b")
    report = classify_subfield(a, b)
    doc = report.to_dict()
    witness = doc.pop("witness")
    diagnostics = []
    if report.degenerate:
        diagnostics.append(
            "degenerate locus: factorization pattern observed, not predicted"
        )
    if report.swapped:
        diagnostics.append("inputs swapped so that #G_a >= #G_b")
    lines = [f"{key} = {_render_plain(value)}" for key, value in doc.items()]
    lines.append(f"witness = {_witness_str(report.witness)}")
    _emit(ns, "classify", {"a": _triple_str(a), "b": _triple_str(b)}, doc,
          witness=witness, has_witness=True, diagnostics=diagnostics,
          text_lines=lines)
    return 0


def _render_plain(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _cmd_transform(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    image = tschirn_image(a, ns.coeffs)
    diagnostics = []
    if cubic_invariants(image).D == 0:
        diagnostics.append("image is inseparable: the transformation "
                           "collapses roots")
    result = {"image": _triple_str(image), "poly": str(image.poly())}
    _emit(ns, "transform",
          {"a": _triple_str(a), "c": ",".join(_s(c) for c in ns.coeffs)},
          result, diagnostics=diagnostics,
          text_lines=[f"image = {_triple_str(image)}",
                      f"poly = {image.poly()}"])
    return 0


def _form_dict(nf) -> dict:
    return {
        "kind": nf.kind,
        "params": [_s(p) for p in nf.params],
        "target": _triple_str(nf.target),
        "target_poly": str(nf.target.poly()),
        "witness": _witness_list(nf.witness),
    }


def _cmd_reduce(parser, ns) -> int:
    a = _resolve_triple(parser, ns, "a")
    if ns.to == "depressed":
        forms = (reduce_depressed(a),)
    elif ns.to == "one-param":
        forms = (reduce_one_param(a),)
    else:
        forms = reduce_shanks(a)
    lines = []
    for nf in forms:
        lines += [
            f"kind = {nf.kind}",
            f"params = {','.join(_s(p) for p in nf.params)}",
            f"target = {_triple_str(nf.target)}",
            f"target_poly = {nf.target.poly()}",
            f"witness = {_witness_str(nf.witness)}",
        ]
    _emit(ns, "reduce", {"a": _triple_str(a), "to": ns.to},
          {"forms": [_form_dict(nf) for nf in forms]}, text_lines=lines)
    return 0


def _cmd_family(parser, ns) -> int:
    if ns.kind == "s3":
        if ns.a is None:
            parser.error("--kind s3 needs --a")
        if (ns.u is None) == (ns.height is None):
            parser.error("give exactly one of --u or --height")
        if ns.a * (4 * ns.a + 27) == 0:
            raise MathDomainError("a(4a + 27) = 0: parameter outside the family")
        params = [ns.u] if ns.u is not None else rationals_by_height(ns.height)
        rows, lines = [], []
        for u in params:
            try:
                b = family_s3(ns.a, u)
            except MathDomainError:
                if ns.u is not None:
                    raise
                continue
            rows.append([_s(u), _s(b)])
            lines.append(f"u = {u} -> b = {b}")
        result = {"kind": "s3", "a": _s(ns.a), "values": rows}
        inputs = {"kind": "s3", "a": _s(ns.a),
                  "u": None if ns.u is None else _s(ns.u),
                  "height": ns.height}
    else:
        if ns.m is None:
            parser.error("--kind c3 needs --m")
        if (ns.z is None) == (ns.height is None):
            parser.error("give exactly one of --z or --height")
        params = [ns.z] if ns.z is not None else rationals_by_height(ns.height)
        rows, lines = [], []
        for z in params:
            try:
                n1, n2 = family_c3(ns.m, z)
            except MathDomainError:
                if ns.z is not None:
                    raise
                continue
            rows.append([_s(z), _s(n1), _s(n2)])
            lines.append(f"z = {z} -> n = {n1}, {n2}")
        result = {"kind": "c3", "m": _s(ns.m), "values": rows}
        inputs = {"kind": "c3", "m": _s(ns.m),
                  "z": None if ns.z is None else _s(ns.z),
                  "height": ns.height}
    _emit(ns, "family", inputs, result, text_lines=lines)
    return 0


def _cmd_scan(parser, ns) -> int:
    jobs = ns.jobs if ns.jobs is not None else int(os.environ.get(_JOBS_ENV, "1"))
    res = scan_equal_splitting((ns.m_min, ns.m_max), ns.n_max, jobs=jobs)
    lines = [f"pair = {m},{n}" for m, n in res.pairs]
    lines += [f"class = {','.join(str(x) for x in cls)}" for cls in res.classes]
    lines.append(f"pairs = {len(res.pairs)}")
    lines.append(f"classes = {len(res.classes)}")
    _emit(ns, "scan",
          {"m_min": ns.m_min, "m_max": ns.m_max, "n_max": ns.n_max},
          res.to_dict(), text_lines=lines)
    return 0


# --------------------------------------------------------------------------
# Self-test suite.
# --------------------------------------------------------------------------


def _random_triple(rng) -> CubicTriple:
    return CubicTriple(
        *(Fraction(rng.randint(-40, 40), rng.randint(1, 6)) for _ in range(3))
    )


def _random_split_pair(rng):
    pool = [Fraction(n, d) for n in range(-10, 11) for d in (1, 2, 3)]
    while True:
        xs = tuple(rng.sample(pool, 3))
        ys = tuple(rng.sample(pool, 3))
        s, t = CubicTriple.from_roots(xs), CubicTriple.from_roots(ys)
        js, jt = cubic_invariants(s), cubic_invariants(t)
        if js.D and jt.D and js.B and degeneracy_indicator(s, t):
            return RootTuple(xs=xs, ys=ys), s, t


def _check_invariant_identity(rng) -> bool:
    for _ in range(100):
        a = _random_triple(rng)
        inv = cubic_invariants(a)
        if 4 * inv.A**3 - inv.B**2 != 27 * inv.D:
            return False
    return True


def _check_oracle(rng) -> bool:
    builders = (resolvent_F0, resolvent_F1, resolvent_F2)
    for _ in range(5):
        rt, s, t = _random_split_pair(rng)
        for index in (0, 1, 2):
            if oracle_resolvent(rt, index) != builders[index](s, t):
                return False
    return True


def _check_degenerate_example() -> bool:
    a, b = CubicTriple(0, 3, -2), CubicTriple(3, -3, 3)
    ja, jb = cubic_invariants(a), cubic_invariants(b)
    if (ja.A, ja.B, ja.C, ja.D) != (-9, -54, 9, -216):
        return False
    if (jb.A, jb.B, jb.D) != (18, 216, -864):
        return False
    if degeneracy_indicator(a, b) != 0:
        return False
    equal, witness = decide_same_splitting(a, b)
    return equal and witness.as_tuple() == (3, -1, 1)


def _check_cyclic_example() -> bool:
    a, b = CubicTriple(-3, -4, -1), CubicTriple(-1, -2, 1)
    ja, jb = cubic_invariants(a), cubic_invariants(b)
    if (ja.A, ja.B, ja.C, ja.D) != (21, -189, 259, 49):
        return False
    if (jb.A, jb.B, jb.D) != (7, 7, 49):
        return False
    found = tuple(w.as_tuple() for w in all_rational_transformations(a, b))
    return found == ((-3, 3, 1), (-2, 4, 1), (4, -7, -2))


def _check_family_list() -> bool:
    for a_par, b_par in ((-7, -189), (-9, -27), (-6, 54)):
        equal, witness = decide_same_splitting(
            CubicTriple(0, a_par, -a_par), CubicTriple(0, b_par, -b_par)
        )
        if not equal or not verify_transformation(
            CubicTriple(0, a_par, -a_par), CubicTriple(0, b_par, -b_par), witness
        ):
            return False
    return True


def _check_perturbation_detected() -> bool:
    """The oracle comparison must flag a deliberately corrupted resolvent."""
    xs, ys = (1, 2, 3), (0, 1, -1)
    rt = RootTuple(xs=xs, ys=ys)
    s, t = CubicTriple.from_roots(xs), CubicTriple.from_roots(ys)
    honest = resolvent_F2(s, t)
    corrupted = honest + UniPoly(QQ, (0, 1))
    oracle = oracle_resolvent(rt, 2)
    return honest == oracle and corrupted != oracle


_TABLE_CASES = (
    ((0, 3, -2), (0, -1, 1), ("S3", "S3", "TrivialMeet"), (6,)),
    ((0, 0, 2), (0, 0, 3), ("S3", "S3", "QuadraticMeet"), (3, 3)),
    ((0, -1, -1), (2, 3, 1), ("S3", "S3", "Equal"), (1, 2, 3)),
    ((0, 3, -2), (0, -3, 1), ("S3", "C3", "TrivialMeet"), (6,)),
    ((0, 0, 2), (0, -2, 0), ("S3", "C2", "NotContains"), (6,)),
    ((0, 0, 2), (1, 3, 3), ("S3", "C2", "ContainsQuadratic"), (3, 3)),
    ((0, 3, -2), (6, 11, 6), ("S3", "Id", "ProperContains"), (6,)),
    ((0, -3, 1), (1, -4, 1), ("C3", "C3", "TrivialMeet"), (3, 3)),
    ((-1, -2, 1), (5, -8, 1), ("C3", "C3", "Equal"), (1, 1, 1, 3)),
    ((0, -3, 1), (1, 3, 3), ("C3", "C2", "TrivialMeet"), (6,)),
    ((0, -3, 1), (6, 11, 6), ("C3", "Id", "ProperContains"), (3, 3)),
)


def _check_table_rows() -> bool:
    for a_vals, b_vals, key, pattern in _TABLE_CASES:
        report = classify_subfield(CubicTriple(*a_vals), CubicTriple(*b_vals))
        if (report.g_a.tag, report.g_b.tag, report.relation) != key:
            return False
        if report.degenerate or report.predicted_pattern != pattern:
            return False
        if report.observed_pattern != pattern:
            return False
    return True


_SCAN_PAIRS = ((-1, 5), (-1, 12), (-1, 1259), (0, 3), (0, 54), (1, 66),
               (2, 2389), (3, 54), (5, 12), (5, 1259), (12, 1259))
_SCAN_CLASSES = ((-1, 5, 12, 1259), (0, 3, 54), (1, 66), (2, 2389))


def _check_scan(jobs: int) -> bool:
    res = scan_equal_splitting((-1, 12), 2500, jobs=jobs)
    return res.pairs == _SCAN_PAIRS and res.classes == _SCAN_CLASSES


def _cmd_selftest(parser, ns) -> int:
    seed = int(os.environ.get(_SEED_ENV, "0"))
    rng = random.Random(seed)
    jobs = ns.jobs if ns.jobs is not None else int(os.environ.get(_JOBS_ENV, "1"))
    checks = [
        ("invariant-identity", lambda: _check_invariant_identity(rng)),
        ("oracle-vs-resolvents", lambda: _check_oracle(rng)),
        ("worked-example-degenerate", _check_degenerate_example),
        ("worked-example-cyclic", _check_cyclic_example),
        ("one-param-family-list", _check_family_list),
        ("harness-detects-perturbation", _check_perturbation_detected),
    ]
    if ns.level == "full":
        checks.append(("subfield-table-rows", _check_table_rows))
        checks.append(("shanks-integer-scan", lambda: _check_scan(jobs)))
    outcomes, lines = [], []
    for name, check in checks:
        ok = bool(check())
        outcomes.append({"name": name, "ok": ok})
        lines.append(f"{'ok' if ok else 'FAIL'} - {name}")
    passed = sum(1 for o in outcomes if o["ok"])
    failed = len(outcomes) - passed
    lines.append(f"passed = {passed}, failed = {failed}")
    _emit(ns, "selftest", {"level": ns.level, "seed": seed},
          {"level": ns.level, "checks": outcomes,
           "passed": passed, "failed": failed},
          text_lines=lines)
    return 0 if failed == 0 else 1


# --------------------------------------------------------------------------
# Parser wiring.
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tschirn",
        description="Exact splitting-field decisions for cubics over Q via "
                    "Tschirnhausen resolvents.",
    )
    parser._negative_number_matcher = _NEGATIVE_VALUE
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name, handler, help_text):
        p = subs.add_parser(name, help=help_text)
        p._negative_number_matcher = _NEGATIVE_VALUE
        p.add_argument("--json", action="store_true",
                       help="emit a schema-1 JSON document")
        p.set_defaults(handler=handler)
        return p

    p = sub("invariants", _cmd_invariants,
            "A, B, C, D, E and the Galois type of a cubic")
    _add_triple(p, "a", "the cubic")

    p = sub("resolvent", _cmd_resolvent,
            "the degree-6 coefficient resolvent of a pair of cubics")
    _add_triple(p, "a", "source cubic")
    _add_triple(p, "b", "target cubic")
    p.add_argument("--index", type=int, choices=(0, 1, 2), default=2,
                   help="which transformation coefficient (default 2)")

    p = sub("factor", _cmd_factor, "factor a rational polynomial")
    p.add_argument("--coeffs", type=_rat_list, required=True,
                   metavar="c0,c1,...", help="coefficients, constant first")

    p = sub("decide-iso", _cmd_decide_iso,
            "decide equality of splitting fields, with witness")
    _add_triple(p, "a", "first cubic")
    _add_triple(p, "b", "second cubic")

    p = sub("classify", _cmd_classify,
            "classify how the two splitting fields nest")
    _add_triple(p, "a", "first cubic")
    _add_triple(p, "b", "second cubic")

    p = sub("transform", _cmd_transform,
            "apply a Tschirnhausen transformation c0 + c1 x + c2 x^2")
    _add_triple(p, "a", "the cubic")
    p.add_argument("--c", dest="coeffs", type=_rat_triple, required=True,
                   metavar="c0,c1,c2", help="transformation coefficients")

    p = sub("reduce", _cmd_reduce, "map a cubic onto a normal form")
    _add_triple(p, "a", "the cubic")
    p.add_argument("--to", choices=("depressed", "one-param", "shanks"),
                   required=True, help="which normal form")

    p = sub("family", _cmd_family,
            "enumerate same-splitting-field family parameters")
    p.add_argument("--kind", choices=("s3", "c3"), required=True)
    p.add_argument("--a", type=_rat, help="parameter of X^3 + aX + a (s3)")
    p.add_argument("--m", type=_rat, help="Shanks parameter (c3)")
    p.add_argument("--u", type=_rat, help="single s3 parameter")
    p.add_argument("--z", type=_rat, help="single c3 parameter")
    p.add_argument("--height", type=int,
                   help="enumerate parameters of height up to this bound")

    p = sub("scan", _cmd_scan,
            "integer scan for equal-splitting Shanks pairs")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default ${_JOBS_ENV} or 1)")

    p = sub("selftest", _cmd_selftest, "run the built-in verification suite")
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes for the full-level scan")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.handler(parser, ns)
    except MathDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
