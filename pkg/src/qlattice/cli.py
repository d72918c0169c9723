"""Command line interface.

Results go to standard output as one JSON object per invocation,
{"ok": true, "result": ...}; an infinite lub is rendered as the string
"infinity".  Exit codes: 0 success, 1 domain error (no fraction of
positives, relation violation), 2 input/parse error.  The norm-curve
subcommand emits CSV instead (columns degree, ball_size, norm_estimate).
"""

from __future__ import annotations

import argparse
import importlib.resources
import json
import sys

from . import io as qio
from . import verify as qverify
from .factors import INFINITY, NotFiniteTypeError
from .order import (
    canonical_fraction,
    lub_general,
    phi,
    rgcd,
    is_positive,
    NotInPPInvError,
)
from .toeplitz import (
    BallSizeExceeded,
    IsometryFamily,
    check_graph_relations,
    check_toeplitz_relations,
    covariance_check,
    defect_product_diag,
    enumerate_ball,
    norm_curve,
)


class DomainError(Exception):
    def __init__(self, kind, detail):
        super().__init__(detail)
        self.kind = kind
        self.detail = detail


class InputError(DomainError):
    pass


def _load_context(spec):
    """Accept a filesystem path or a bare preset name like 'b3'."""
    candidates = [spec]
    if not spec.endswith(".json"):
        candidates.append(spec + ".json")
    for cand in candidates:
        try:
            return qio.load_graph(cand)
        except FileNotFoundError:
            pass
    for cand in candidates:
        resource = importlib.resources.files("qlattice") / "presets" / cand
        if resource.is_file():
            return qio.graph_from_json(json.loads(resource.read_text()))
    raise InputError("context", f"no context file or preset named {spec!r}")


def _read_literals(args):
    if args.infile:
        with open(args.infile) as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise InputError("parse", "--in file must hold a JSON array of words")
        return data
    return [json.loads(w) for w in args.words]


def _words(graph, args, count=None):
    literals = _read_literals(args)
    if count is not None and len(literals) != count:
        raise InputError("parse", f"expected {count} word argument(s)")
    return [qio.parse_word(graph, lit) for lit in literals]


def _result_word(graph, x):
    if x is INFINITY:
        return "infinity"
    return qio.word_to_json(graph, x)


def _emit(payload, out):
    text = json.dumps(payload, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_nf(graph, args):
    (x,) = _words(graph, args, 1)
    return _result_word(graph, x)


def cmd_eq(graph, args):
    x, y = _words(graph, args, 2)
    return graph.equal(x, y)


def cmd_len(graph, args):
    (x,) = _words(graph, args, 1)
    return len(x)


def cmd_lub(graph, args):
    x, y = _words(graph, args, 2)
    return _result_word(graph, lub_general(graph, x, y))


def cmd_rgcd(graph, args):
    x, y = _words(graph, args, 2)
    if not (is_positive(graph, x) and is_positive(graph, y)):
        raise DomainError("not-positive", "rgcd takes positive words")
    return _result_word(graph, rgcd(graph, x, y))


def cmd_fraction(graph, args):
    (x,) = _words(graph, args, 1)
    a, b = canonical_fraction(graph, x)
    return {"a": qio.word_to_json(graph, a), "b": qio.word_to_json(graph, b)}


def cmd_phi(graph, args):
    (x,) = _words(graph, args, 1)
    image = phi(graph, x)
    return {
        v: qio.element_to_json(graph, v, e) for v, e in image.components
    }


def cmd_ball(graph, args):
    ball = enumerate_ball(graph, args.max_degree, size_cap=args.max_ball)
    return {
        "size": len(ball),
        "elements": [qio.word_to_json(graph, x) for x in ball.elements],
    }


def cmd_cov_check(graph, args):
    x, y = _words(graph, args, 2)
    if not (is_positive(graph, x) and is_positive(graph, y)):
        raise DomainError("not-positive", "cov-check takes positive words")
    ball = enumerate_ball(graph, args.max_degree, size_cap=args.max_ball)
    report = covariance_check(graph, x, y, ball)
    return {
        "ok": report.ok,
        "lub": _result_word(graph, report.lub),
        "mismatches": [qio.word_to_json(graph, z) for z in report.mismatches],
    }


def cmd_defect(graph, args):
    ball = enumerate_ball(graph, args.max_degree, size_cap=args.max_ball)
    if args.words or args.infile:
        family = _words(graph, args)
    else:
        family = graph.generator_words()
    diag = defect_product_diag(graph, family, ball)
    return {
        "nonzero": bool(diag.any()),
        "delta1": int(diag[0]),
        "support_size": int(diag.sum()),
    }


def cmd_relcheck(graph, args):
    if args.rep:
        with open(args.rep) as fh:
            matrices = json.load(fh)
        family = IsometryFamily(graph, matrices)
        ball = enumerate_ball(graph, args.max_degree, size_cap=args.max_ball)
        report = check_graph_relations(
            family, tol=args.tolerance, ball=ball, seed=args.seed
        )
    else:
        ball = enumerate_ball(graph, args.max_degree, size_cap=args.max_ball)
        report = check_toeplitz_relations(graph, ball)
    payload = {
        "ok": report.ok,
        "violations": [[desc, res] for desc, res in report.violations],
    }
    if not report.ok:
        raise DomainError("relation-violation", payload)
    return payload


def cmd_norm_curve(graph, args):
    qio.parse_weights(graph, args.weights)  # validates labels and signs
    rows = norm_curve(
        graph,
        {k: v for k, v in json.loads(args.weights).items()},
        range(1, args.max_degree + 1),
        tol=args.tolerance,
        size_cap=args.max_ball,
    )
    lines = ["degree,ball_size,norm_estimate"]
    lines += [f"{d},{n},{val:.12f}" for d, n, val in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return None  # already emitted as CSV


def cmd_verify(graph, args):
    report = qverify.run_verification(
        graph, seed=args.seed, samples=args.samples, degree=args.max_degree,
        cap=min(2 * args.max_degree, args.max_degree + 3),
    )
    if not report["ok"]:
        raise DomainError("verification-failure", report)
    return report


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qlattice",
        description="Normal forms, lattice operations and truncated Toeplitz "
        "representations for graph products of quasi-lattice ordered groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, words="*", **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--ctx", required=True, help="context file or preset name")
        p.add_argument("--in", dest="infile", help="JSON file with word literals")
        p.add_argument("--out", help="write the result to a file")
        p.add_argument("--max-degree", type=int, default=4)
        p.add_argument("--max-ball", type=int, default=200_000)
        p.add_argument("--tolerance", type=float, default=1e-9)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        if words is not None:
            p.add_argument("words", nargs=words, help="word literals (JSON)")
        p.set_defaults(fn=fn)
        return p

    add("nf", cmd_nf, help="canonical normal form of a word")
    add("eq", cmd_eq, help="whether two words represent the same element")
    add("len", cmd_len, help="syllable length of the represented element")
    add("lub", cmd_lub, help="least upper bound, or infinity")
    add("rgcd", cmd_rgcd, help="greatest common right divisor of positives")
    add("fraction", cmd_fraction, help="canonical fraction a b^-1")
    add("phi", cmd_phi, help="image in the direct product of the factors")
    add("ball", cmd_ball, words=None, help="enumerate the positive cone ball")
    add("cov-check", cmd_cov_check, help="covariance identity over a ball")
    add("defect", cmd_defect, help="defect projection support over a ball")
    p = add("relcheck", cmd_relcheck, words=None,
            help="check the graph-product relations of a representation")
    p.add_argument("--rep", help="JSON file mapping generator labels to matrices")
    p = add("norm-curve", cmd_norm_curve, words=None,
            help="CSV of truncated convolution norms by ball degree")
    p.add_argument("--weights", required=True,
                   help='JSON weights by generator label, e.g. {"s":0.5,"t":0.5}')
    p = add("verify", cmd_verify, words=None,
            help="run the sampled oracle/property suite")
    p.add_argument("--samples", type=int, default=50)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print(json.dumps({"ok": False, "error": {"kind": "parse",
                                                 "detail": "--threads must be >= 1"}}))
        return 2
    try:
        graph = _load_context(args.ctx)
        result = args.fn(graph, args)
    except InputError as exc:
        print(json.dumps({"ok": False,
                          "error": {"kind": exc.kind, "detail": exc.detail}}))
        return 2
    except (qio.LiteralError, NotFiniteTypeError, json.JSONDecodeError,
            OSError) as exc:
        print(json.dumps({"ok": False,
                          "error": {"kind": "parse", "detail": str(exc)}}))
        return 2
    except DomainError as exc:
        print(json.dumps({"ok": False,
                          "error": {"kind": exc.kind, "detail": exc.detail}}))
        return 1
    except (NotInPPInvError, BallSizeExceeded, ValueError) as exc:
        print(json.dumps({"ok": False,
                          "error": {"kind": type(exc).__name__, "detail": str(exc)}}))
        return 1
    if result is not None:
        _emit({"ok": True, "result": result}, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
