"""Batch command line front end with a stable JSON wire format.

Every verb reads one JSON job object (from --job PATH or stdin) and
writes one JSON result object to stdout.  Exit codes: 0 success, 1
domain error (the error name comes from the library exception), 2
malformed input.  Identical job files produce byte-identical output.

The job and result schemas are documented in docs/wire_format.md.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .errors import InvalidFrame, InvalidInput, SkewPolyError
from .evaluation import (
    check_product_rule,
    conjugate,
    divide,
    evaluate,
    fundamental,
    point_from_json,
    point_to_json,
)
from .frames import Frame, additive_map_from_json, validate_frame
from .freering import mul, poly_from_json, variable
from .geometry import (
    closure_members,
    find_p_basis,
    is_two_sided,
    matroid_check,
    points_from_json,
    points_to_json,
    rank_of,
    vandermonde,
)
from .interpolation import (
    dual_p_basis,
    lagrange_interpolate,
    lagrange_via_vandermonde,
    reduce_mod_ideal,
)
from .linalg import rank
from .rings import ring_from_json

DEFAULT_SEED = 1729


@dataclass
class Workspace:
    """Parsed job context: one ring and one frame shared by all objects."""

    ring: object
    frame: Frame


def _need(job, key):
    if key not in job:
        raise KeyError(key)
    return job[key]


def _load_workspace(job, require_valid=True):
    ring = ring_from_json(_need(job, "ring"))
    fobj = _need(job, "frame")
    if not isinstance(fobj, dict) or "n" not in fobj:
        raise ValueError("frame object needs keys n, sigma, delta")
    sigma = [[additive_map_from_json(ring, m) for m in row] for row in fobj["sigma"]]
    delta = [additive_map_from_json(ring, m) for m in fobj["delta"]]
    frame = Frame(ring, sigma, delta)
    if require_valid:
        report = validate_frame(frame)
        if not report.valid:
            raise InvalidFrame(report.summary(), report)
    return Workspace(ring=ring, frame=frame)


def _poly_out(ws, p, fmt):
    return p.to_text() if fmt == "text" else p.to_json()


def _element_out(ws, a, fmt):
    return repr(a) if fmt == "text" else ws.ring.element_to_json(a)


# ---------------------------------------------------------------------------
# Verb handlers: each takes (job, fmt, seed) and returns the result object.
# ---------------------------------------------------------------------------

def _verb_validate_frame(job, fmt, seed):
    ws = _load_workspace(job, require_valid=False)
    report = validate_frame(ws.frame)
    if not report.valid:
        raise InvalidFrame(report.summary(), report)
    return {"valid": True}


def _verb_mul(job, fmt, seed):
    ws = _load_workspace(job)
    F = poly_from_json(ws.frame, _need(job, "f"))
    G = poly_from_json(ws.frame, _need(job, "g"))
    return {"product": _poly_out(ws, mul(F, G), fmt)}


def _verb_divide(job, fmt, seed):
    ws = _load_workspace(job)
    F = poly_from_json(ws.frame, _need(job, "f"))
    a = point_from_json(ws.frame, _need(job, "point"))
    res = divide(F, a)
    return {
        "quotients": [_poly_out(ws, g, fmt) for g in res.quotients],
        "remainder": _element_out(ws, res.remainder, fmt),
    }


def _verb_eval(job, fmt, seed):
    ws = _load_workspace(job)
    F = poly_from_json(ws.frame, _need(job, "f"))
    a = point_from_json(ws.frame, _need(job, "point"))
    return {"value": _element_out(ws, evaluate(F, a), fmt)}


def _verb_norm(job, fmt, seed):
    ws = _load_workspace(job)
    word = tuple(int(i) for i in _need(job, "monomial"))
    a = point_from_json(ws.frame, _need(job, "point"))
    return {"value": _element_out(ws, fundamental(ws.frame, word, a), fmt)}


def _verb_conjugate(job, fmt, seed):
    ws = _load_workspace(job)
    a = point_from_json(ws.frame, _need(job, "point"))
    c = ws.ring.element_from_json(_need(job, "c"))
    return {"conjugate": point_to_json(ws.frame, conjugate(ws.frame, a, c))}


def _verb_vandermonde(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    d = int(_need(job, "degree"))
    V = vandermonde(ws.frame, pts, d)
    return {
        "matrix": V.to_json(),
        "row_labels": [list(w) for w in V.row_labels],
        "col_labels": points_to_json(ws.frame, V.col_labels),
        "rank": rank(V),
    }


def _verb_rank(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    return {"rank": rank_of(ws.frame, pts)}


def _verb_pbasis(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    res = find_p_basis(ws.frame, pts)
    return {
        "basis": points_to_json(ws.frame, res.basis),
        "rank": res.rank,
        "discarded": points_to_json(ws.frame, res.discarded),
    }


def _verb_closure(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    return {"closure": points_to_json(ws.frame, closure_members(ws.frame, pts))}


def _verb_two_sided(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    return {"two_sided": is_two_sided(ws.frame, pts)}


def _verb_matroid_check(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    rep = matroid_check(ws.frame, pts)
    return {
        "ok": rep.ok,
        "violations": rep.violations,
        "independent_count": rep.independent_count,
        "bases": [list(b) for b in rep.bases],
        "rank": rep.rank,
    }


def _verb_interpolate(job, fmt, seed, method="newton"):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    values = [ws.ring.element_from_json(v) for v in _need(job, "values")]
    if method == "newton":
        F = lagrange_interpolate(ws.frame, pts, values)
    elif method == "vandermonde":
        F = lagrange_via_vandermonde(ws.frame, pts, values)
    else:
        raise InvalidInput(f"unknown interpolation method {method!r}")
    return {"polynomial": _poly_out(ws, F, fmt)}


def _verb_dual_basis(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    dual = dual_p_basis(ws.frame, pts)
    return {"duals": [_poly_out(ws, f, fmt) for f in dual.duals]}


def _verb_reduce(job, fmt, seed):
    ws = _load_workspace(job)
    pts = points_from_json(ws.frame, _need(job, "points"))
    F = poly_from_json(ws.frame, _need(job, "f"))
    dual = dual_p_basis(ws.frame, pts)
    q = reduce_mod_ideal(F, dual)
    return {
        "coordinates": [_element_out(ws, c, fmt) for c in q.coords],
        "representative": _poly_out(ws, q.representative(ws.frame), fmt),
    }


# ---------------------------------------------------------------------------
# Built-in example suite
# ---------------------------------------------------------------------------

def _selftest_cases(seed):
    from .frames import conventional_frame, frobenius_frame
    from .rings import FiniteField, QuaternionRing

    rng = random.Random(seed)
    gf4 = FiniteField(2, 2)
    gf5 = FiniteField(5)
    w = gf4.gen()
    H = QuaternionRing()

    def rand_poly(frame, max_deg, max_terms):
        from .freering import from_terms, monomials_below

        monos = monomials_below(frame.n, max_deg + 1)
        pairs = []
        for _ in range(rng.randint(1, max_terms)):
            pairs.append((rng.choice(monos), frame.ring.random_element(rng)))
        return from_terms(frame, pairs)

    def case_field_arithmetic():
        return w * (w * w) == gf4.one() and gf5(2) + gf5(4) == gf5(1) and gf5(3).inv() == gf5(2)

    def case_quaternion_relations():
        i, j, k = H.i(), H.j(), H.k()
        return i * j == k and j * i == -k and (H(1, 1, 0, 0).inv() == H("1/2", "-1/2", 0, 0))

    def case_eval_reverses_plugin():
        f = conventional_frame(gf5, 2)
        F = mul(variable(f, 1), variable(f, 2))
        return evaluate(F, (gf5(2), gf5(3))) == gf5(1)

    def case_divide_reconstructs():
        f = conventional_frame(gf5, 2)
        for _ in range(20):
            F = rand_poly(f, 3, 4)
            a = (gf5.random_element(rng), gf5.random_element(rng))
            res = divide(F, a)
            if res.reconstruct(f, a) != F or evaluate(F, a) != res.remainder:
                return False
        return True

    def case_norm_recursion():
        fr1 = frobenius_frame(gf4, 1)
        return fundamental(fr1, (1, 1), (w,)) == gf4.one()

    def case_conjugacy():
        f = conventional_frame(H, 1)
        i, j = H.i(), H.j()
        return conjugate(f, (i,), H.one()) == (i,) and conjugate(f, (i,), j) == (-i,)

    def case_product_rule():
        fr = frobenius_frame(FiniteField(3, 2), 2)
        for _ in range(20):
            F = rand_poly(fr, 2, 3)
            G = rand_poly(fr, 2, 3)
            a = tuple(fr.ring.random_element(rng) for _ in range(2))
            if not check_product_rule(F, G, a).ok:
                return False
        return True

    def case_full_plane_rank():
        gf2 = FiniteField(2)
        f = conventional_frame(gf2, 2)
        pts = [(gf2(a), gf2(b)) for a in range(2) for b in range(2)]
        return rank_of(f, pts) == 4

    def case_frobenius_vanishing():
        gf3 = FiniteField(3)
        f = conventional_frame(gf3, 2)
        x1 = variable(f, 1)
        F = mul(mul(x1, x1), x1) - x1  # x^q - x with q = 3
        return all(
            evaluate(F, (gf3(a), gf3(b))).is_zero() for a in range(3) for b in range(3)
        )

    def case_dual_identity():
        fr = frobenius_frame(gf4, 1)
        pts = [(gf4(1),), (w,)]
        dual = dual_p_basis(fr, pts)
        for i, F in enumerate(dual.duals):
            for j, b in enumerate(pts):
                want = gf4.one() if i == j else gf4.zero()
                if evaluate(F, b) != want:
                    return False
        return True

    def case_interpolation_agrees():
        gf7 = FiniteField(7)
        f = conventional_frame(gf7, 1)
        pts = [(gf7(1),), (gf7(3),), (gf7(5),)]
        vals = [gf7(2), gf7(0), gf7(6)]
        F = lagrange_interpolate(f, pts, vals)
        G = lagrange_via_vandermonde(f, pts, vals)
        return all(
            evaluate(F, p) == v and evaluate(G, p) == v for p, v in zip(pts, vals)
        )

    def case_degree_additivity():
        fr = frobenius_frame(gf4, 2)
        for _ in range(20):
            F = rand_poly(fr, 3, 3)
            G = rand_poly(fr, 3, 3)
            if F.is_zero() or G.is_zero():
                continue
            if mul(F, G).degree() != F.degree() + G.degree():
                return False
        return True

    def case_one_sided_witness():
        fr1 = frobenius_frame(gf4, 1)
        return not is_two_sided(fr1, [(gf4(1),)])

    return [
        ("field-arithmetic", case_field_arithmetic),
        ("quaternion-relations", case_quaternion_relations),
        ("eval-reverses-plugin", case_eval_reverses_plugin),
        ("divide-reconstructs", case_divide_reconstructs),
        ("norm-recursion", case_norm_recursion),
        ("conjugacy", case_conjugacy),
        ("product-rule", case_product_rule),
        ("full-plane-rank", case_full_plane_rank),
        ("frobenius-vanishing", case_frobenius_vanishing),
        ("dual-identity", case_dual_identity),
        ("interpolation-agrees", case_interpolation_agrees),
        ("degree-additivity", case_degree_additivity),
        ("one-sided-witness", case_one_sided_witness),
    ]


def _verb_selftest(job, fmt, seed):
    cases = []
    passed = failed = 0
    for name, fn in _selftest_cases(seed):
        ok = bool(fn())
        cases.append({"name": name, "ok": ok})
        if ok:
            passed += 1
        else:
            failed += 1
    return {"passed": passed, "failed": failed, "cases": cases}


_VERBS = {
    "validate-frame": _verb_validate_frame,
    "mul": _verb_mul,
    "divide": _verb_divide,
    "eval": _verb_eval,
    "norm": _verb_norm,
    "conjugate": _verb_conjugate,
    "vandermonde": _verb_vandermonde,
    "rank": _verb_rank,
    "pbasis": _verb_pbasis,
    "closure": _verb_closure,
    "two-sided": _verb_two_sided,
    "matroid-check": _verb_matroid_check,
    "interpolate": _verb_interpolate,
    "dual-basis": _verb_dual_basis,
    "reduce": _verb_reduce,
    "selftest": _verb_selftest,
}


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def run(argv=None, stdin=None, stdout=None):
    """Execute one verb; returns the process exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout

    parser = argparse.ArgumentParser(
        prog="skewpoly",
        description="exact multivariate skew polynomial calculator",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in _VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--job", help="path to the JSON job file (default: stdin)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if verb == "interpolate":
            p.add_argument("--method", choices=("newton", "vandermonde"), default="newton")

    args = parser.parse_args(argv)

    job = {}
    if args.verb != "selftest":
        try:
            raw = open(args.job).read() if args.job else stdin.read()
            job = json.loads(raw)
            if not isinstance(job, dict):
                raise ValueError("job must be a JSON object")
        except (OSError, ValueError) as exc:
            _emit({"error": "MalformedInput", "message": str(exc)}, stdout)
            return 2

    handler = _VERBS[args.verb]
    kwargs = {}
    if args.verb == "interpolate":
        kwargs["method"] = args.method
    try:
        result = handler(job, args.format, args.seed, **kwargs)
    except (KeyError, ValueError, TypeError) as exc:
        _emit({"error": "MalformedInput", "message": f"{exc}"}, stdout)
        return 2
    except InvalidFrame as exc:
        payload = {"error": "InvalidFrame", "message": str(exc)}
        if exc.report is not None:
            payload["failures"] = [
                {"law": law, "a": repr(a), "b": repr(b)} for law, a, b in exc.report.failures
            ]
        _emit(payload, stdout)
        return 1
    except SkewPolyError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, stdout)
        return 1
    if args.verb == "selftest" and result["failed"]:
        _emit(result, stdout)
        return 1
    _emit(result, stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
