"""``ulrich-kit`` command line entry point.

Exit codes: 0 success, 1 a checked statement failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .. import __version__
from ..core.parse import ParseError
from ..hilbert import HilbertError, hilbert_samuel, regularity_report
from ..modules import ModuleError, ModuleData, linkage, resolve, same_normalized_presentation
from ..ring import IdealError, RingError, loewy_length, socle_dimension
from ..ulrich import (UlrichError, check_ulrich_ideal, check_ulrich_module, freeness_probe,
                      hom_ulrich_probe, regular_iff_ulrich_probe)
from .corpus import CORPUS_IDS, load_corpus
from .session import SessionError, Workspace, parse_session

COMMANDS = ["resolve", "check-ulrich-ideal", "check-ulrich-module", "linkage", "hilbert",
            "invariants", "regularity", "probe", "verify-paper"]
PROBES = ["hom", "freeness", "regular-iff-ulrich"]


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """A checked statement came out false; reported with exit code 1."""


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ulrich-kit",
                                 description="Ulrich modules, linkage and Hilbert-Samuel checks "
                                             "over local rings")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("probe", nargs="?", choices=PROBES, help="probe kind (for 'probe')")
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--session", metavar="FILE")
    src.add_argument("--corpus", metavar="ID", help="one of: %s" % ", ".join(CORPUS_IDS))
    ap.add_argument("--module", metavar="NAME")
    ap.add_argument("--other", metavar="NAME", help="second module for 'probe hom' (default R)")
    ap.add_argument("--ideal", metavar="NAME", default=None)
    ap.add_argument("--steps", type=int, default=8)
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--char", type=int, default=None)
    ap.add_argument("--n", type=int, default=None, help="Ext range for 'probe hom' (default d)")
    ap.add_argument("--mode", choices=["i", "ii", "iii", "iv"], default="ii")
    ap.add_argument("--window", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="print the JSON report")
    return ap


def _workspace(args) -> Workspace:
    if args.session:
        try:
            with open(args.session, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError("cannot read session: %s" % e)
        sess = parse_session(text, name=args.session)
    elif args.corpus:
        try:
            sess = load_corpus(args.corpus)
        except KeyError as e:
            raise UsageError(str(e.args[0]))
    else:
        raise UsageError("need --session FILE or --corpus ID")
    return sess.build(args.char)


def _need(args, attr: str):
    v = getattr(args, attr)
    if v is None:
        raise UsageError("--%s is required for %s" % (attr, args.command))
    return v


def _matrix_json(W: Workspace, mat) -> List[List[str]]:
    return mat.format(W.ring)


def _ideal_name(args, W: Workspace) -> str:
    if args.ideal is not None:
        return args.ideal
    if len(W.session.ideals) == 1 or "I" in W.session.ideals:
        return "I" if "I" in W.session.ideals else next(iter(W.session.ideals))
    raise UsageError("--ideal is required")


def run_command(args) -> dict:
    if args.command == "verify-paper":
        from ..acceptance import run_all
        results = run_all()
        out = {"criteria": [r.as_dict() for r in results],
               "passed": sum(r.ok for r in results), "total": len(results)}
        if not all(r.ok for r in results):
            raise CheckFailed(out)
        return out
    W = _workspace(args)
    cmd = args.command
    if cmd == "resolve":
        M = W.module(_need(args, "module"))
        res = resolve(M, args.steps)
        per = {"start": res.periodic[0], "period": res.periodic[1]} if res.periodic else None
        return {"module": M.name, "betti": res.betti, "periodic": per,
                "matrices": [_matrix_json(W, m) for m in res.matrices]}
    if cmd == "check-ulrich-ideal":
        I = W.ideal(_ideal_name(args, W))
        return {"ideal": I.name, **check_ulrich_ideal(I).as_dict()}
    if cmd == "check-ulrich-module":
        M = W.module(_need(args, "module"))
        I = W.ideal(_ideal_name(args, W))
        return {"module": M.name, "ideal": I.name, **check_ulrich_module(M, I).as_dict()}
    if cmd == "linkage":
        M = W.module(_need(args, "module"))
        L = linkage(M)
        out = {"module": M.name, **L.as_dict()}
        out["lambdaPresentation"] = _matrix_json(W, L.lambdaM.minimal_presentation())
        out["lambdaSamePresentation"] = same_normalized_presentation(L.lambdaM, M)
        return out
    if cmd == "hilbert":
        M = W.module(_need(args, "module"))
        I = W.ideal(_ideal_name(args, W))
        t = hilbert_samuel(M, I, args.kmax)
        out = {"module": M.name, "ideal": I.name, **t.as_dict()}
        if t.polynomialValid and W.ring.dim >= 1:
            e1 = t.coefficients[1]
            out["chernNumber"] = e1.numerator if e1.denominator == 1 else str(e1)
        return out
    if cmd == "invariants":
        R = W.ring
        out = {"ring": {"dim": R.dim, "embeddingDimension": R.embedding_dimension(),
                        "regular": R.is_regular()}}
        if W.session.ideals:
            I = W.ideal(_ideal_name(args, W))
            out["ideal"] = {"name": I.name, "gens": I.fmt(), "length": I.length(),
                            "nu": ModuleData.from_ideal(I).num_gens,
                            "reductionExponent": I.reduction_exponent,
                            "Q": [R.fmt(q) for q in I.Q] if I.Q else None}
            if I.is_m_primary():
                out["ideal"]["socleDimension"] = socle_dimension(I)
                out["ideal"]["loewyLength"] = loewy_length(I)
        if args.module:
            M = W.module(args.module)
            out["module"] = {"name": M.name, "nu": M.num_gens, "length": M.length(),
                             "presentation": _matrix_json(W, M.minimal_presentation())}
        return out
    if cmd == "regularity":
        M = W.module(_need(args, "module"))
        I = W.ideal(_ideal_name(args, W))
        return {"module": M.name, "ideal": I.name, **regularity_report(M, I, args.kmax).as_dict()}
    if cmd == "probe":
        kind = args.probe
        if kind is None:
            raise UsageError("probe needs one of: %s" % ", ".join(PROBES))
        if kind == "regular-iff-ulrich":
            v = regular_iff_ulrich_probe(W.ring)
        elif kind == "hom":
            M = W.module(_need(args, "module"))
            N = W.module(args.other) if args.other else ModuleData.free(W.ring, 1, "R")
            I = W.ideal(_ideal_name(args, W))
            v = hom_ulrich_probe(M, N, I, args.n if args.n is not None else W.ring.dim)
        else:
            M = W.module(_need(args, "module"))
            v = freeness_probe(M, W.ideal(_ideal_name(args, W)), args.mode, args.window)
        out = v.as_dict()
        if not v.consistent:
            raise CheckFailed(out)
        return out
    raise UsageError("unknown command %r" % cmd)


def _print_text(rep: dict):
    res = rep["result"]
    for k, v in res.items():
        if k == "criteria":
            for c in v:
                print("criterion %2d %s %s" % (c["criterion"], "PASS" if c["ok"] else "FAIL",
                                               c["title"]))
        elif k in ("matrices",):
            for i, m in enumerate(v, 1):
                print("d_%d:" % i)
                for row in m:
                    print("   [" + ", ".join(row) + "]")
        else:
            print("%s: %s" % (k, json.dumps(v) if isinstance(v, (list, dict)) else v))


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    t0 = time.perf_counter()
    status = 0
    try:
        result = run_command(args)
    except CheckFailed as e:
        result, status = e.args[0], 1
    except (UsageError, SessionError, ParseError, RingError) as e:
        print("ulrich-kit: error: %s" % e, file=sys.stderr)
        return 2
    except (IdealError, ModuleError, UlrichError, HilbertError) as e:
        result, status = {"error": str(e)}, 1
    report = {"command": args.command, "probe": args.probe, "engineVersion": __version__,
              "characteristic": None, "result": result,
              "timings": {"seconds": round(time.perf_counter() - t0, 3)}}
    if args.command != "verify-paper":
        try:
            report["characteristic"] = _workspace(args).ring.p
        except Exception:
            pass
    else:
        report["characteristic"] = args.char or 32003
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_text(report)
    return status


if __name__ == "__main__":
    sys.exit(main())
