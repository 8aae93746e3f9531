"""teachdim command line.

Verbs: dimension, gadget, verify, oracle, probe, sequence-validate.

Every run produces a RunReport printed as a ``key: value`` block, or as one
JSON document with ``--machine`` (wall time is left out of machine output so
identical invocations give identical bytes).  Global flags can be set through
environment variables named TEACHDIM_<FLAG>, e.g. TEACHDIM_SEED=3.

Exit codes:
    0  success
    1  a verification check failed or an oracle mismatch was found
    2  usage error
    3  input file could not be parsed
    4  a size bound or horizon was exceeded
    5  internal assertion failed
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import oracles, rtd, td, xtd
from .classfile import ParseError, emit_class, parse_class, parse_sequence
from .core import INF, DomainOverflow
from .lab import descriptors as desc
from .lab import gadgets, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_BOUND, EXIT_INTERNAL = range(6)

MEASURES = ("td", "tdplus", "xtd", "xtdplus", "rtd", "rtdplus-seq", "rtd1plus")
ORACLE_MEASURES = ("td", "tdplus", "xtd", "xtdplus", "rtd", "rtdplus", "rtd1plus")
TAGS = ("acds", "t1", "tdplus-forall", "xtdplus", "lk", "gan", "rtd-reduction")
DEFAULT_SEED = 0
ENV_PREFIX = "TEACHDIM_"


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list
    input_digest: str | None = None
    params: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    horizons: dict = field(default_factory=dict)
    wall_time: float = 0.0
    status: str = "ok"

    def machine(self) -> str:
        doc = {"command": self.command, "input_digest": self.input_digest,
               "params": self.params, "results": self.results,
               "horizons": self.horizons, "status": self.status}
        return json.dumps(_plain(doc), sort_keys=True, indent=2)

    def text(self) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        if self.input_digest:
            lines.append(f"input_digest: {self.input_digest}")
        for k, v in sorted(self.params.items()):
            lines.append(f"param.{k}: {_render(v)}")
        for k, v in sorted(self.horizons.items()):
            lines.append(f"horizon.{k}: {_render(v)}")
        for k, v in self.results.items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"{k}:")
                for row in v:
                    lines.append("  " + "  ".join(f"{a}={_render(b)}" for a, b in row.items()))
            else:
                lines.append(f"{k}: {_render(v)}")
        lines.append(f"status: {self.status}")
        lines.append(f"wall_time: {self.wall_time:.3f}s")
        return "\n".join(lines)


def _plain(v):
    """JSON-ready copy: sets become sorted lists, infinity becomes "inf"."""
    if isinstance(v, float) and v == INF:
        return "inf"
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(x) for x in v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def _render(v) -> str:
    v = _plain(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return "-"
    return str(v)


def _digest(*blobs: bytes) -> str:
    h = hashlib.sha256()
    for b in blobs:
        h.update(b)
    return h.hexdigest()


def _load(path: str, args) -> tuple:
    data = Path(path).read_bytes()
    cls = parse_class(data.decode("utf-8"))
    if args.max_domain is not None and cls.domain.size > args.max_domain:
        raise DomainOverflow(f"domain {cls.domain.size} exceeds --max-domain {args.max_domain}")
    return cls, data


def _sample_str(sample) -> str:
    return str(sample) if sample is not None else "-"


# -- dimension --------------------------------------------------------------------------------

def cmd_dimension(args, report: RunReport) -> int:
    cls, data = _load(args.file, args)
    report.input_digest = _digest(data)
    report.params.update(measure=args.measure, all=args.all, concepts=len(cls),
                         distinct=len(cls.distinct()))
    m = args.measure
    res = report.results
    if m in ("td", "tdplus"):
        fn = td.teaching_dimension if m == "td" else td.positive_teaching_dimension
        rows = []
        for i, c in enumerate(cls.concepts):
            value, witness = fn(cls, i)
            rows.append({"concept": c.name, "value": value, "witness": _sample_str(witness)})
        res["value"] = max(r["value"] for r in rows)
        worst = next(r for r in rows if r["value"] == res["value"])
        res["worst_concept"] = worst["concept"]
        res["witness"] = worst["witness"]
        if args.all:
            res["per_concept"] = rows
    elif m == "xtd":
        r = xtd.worst_hypothesis(cls)
        res.update(value=r.value, hypothesis=r.hypothesis, specifying_set=r.specifying_set)
    elif m == "xtdplus":
        r = xtd.xtdplus_of_class(cls)
        res["value"] = r.value
        if r.pair is not None:
            res["pair"] = [cls[i].name for i in r.pair]
            res["witness_element"] = r.element
    elif m in ("rtd", "rtdplus-seq"):
        positive = m == "rtdplus-seq"
        seq = rtd.canonical_sequence(cls, positive)
        res["value"] = rtd.rtd_exact(cls, positive)
        res["canonical_order"] = seq.order
        res["canonical_sequence"] = [{"order": d, "block": " ".join(cls[i].name for i in b)}
                                     for b, d in seq.blocks]
    elif m == "rtd1plus":
        value, plan = rtd.rtd1plus(cls)
        res["value"] = value
        res["plan"] = [{"concept": cls[i].name, "cost": d} for i, d in zip(plan.order, plan.dims)]
    return EXIT_OK


# -- gadget -------------------------------------------------------------------------------------

def _descriptors(args, default="cofinite:{}") -> list:
    texts = args.w or [default]
    try:
        return [desc.parse_descriptor(t) for t in texts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_gadget(args) -> tuple:
    """(ConceptClass, GadgetSpec) for the requested tag, using the verifiers' default horizons."""
    tag = args.tag
    J, S, M = args.column_horizon, args.stage_horizon, args.max_domain
    if tag == "lk":
        cls = gadgets.build_lk_gadget(args.k, args.mult)
        return cls, gadgets.GadgetSpec(tag, {"k": args.k, "mult": args.mult})
    if tag == "rtd-reduction":
        ws = _descriptors(args)
        cols = J or 3
        S = S or max(w.settle + (cols + 1) * w.period + 2 for w in ws)
        cls = gadgets.build_rtd_reduction(ws, cols, S)
        return cls, gadgets.GadgetSpec(tag, {"a": ";".join(map(str, ws))}, {"J": cols, "S": S})
    w = _descriptors(args)[-1]
    base = w.settle + w.period + 1
    if tag == "acds":
        J = J or base + 1
        M = M or J + 2
        S = S or 2 * (M + base + w.period)
        fam = gadgets.build_acds_gadget(w, J, S, M)
        return desc.limit_class(fam), gadgets.GadgetSpec(tag, {"W": str(w)}, fam.horizons())
    if tag == "t1":
        J = J or base + 1
        M = M or J + 1
        cls = gadgets.build_t1_gadget(w, args.x, J, M, companions=[(args.x + 1, desc.Cofinite())])
        return cls, gadgets.GadgetSpec(tag, {"W": str(w), "x": args.x}, {"J": J, "M": M})
    if tag == "tdplus-forall":
        M = M or base + 1
        J = J or M + w.period + 2
        cls = gadgets.build_tdplus_gadget(w, args.x, J, M)
        return cls, gadgets.GadgetSpec(tag, {"W": str(w), "a": args.x}, {"J": J, "M": M})
    if tag == "xtdplus":
        cls = gadgets.build_xtdplus_gadget(w, M)
        return cls, gadgets.GadgetSpec(tag, {"W": str(w)}, {"M": cls.domain.size})
    if tag == "gan":
        cols = J or (w.complement_element(1) + 1 if w.is_coinfinite else max(2, w.settle + 1))
        cls = gadgets.build_gan_gadget(w, args.n, args.max_len, cols)
        return cls, gadgets.GadgetSpec(tag, {"a": str(w), "n": args.n},
                                       {"rows": cols, "max_len": args.max_len})
    raise UsageError(f"unknown gadget tag {tag!r}")


def cmd_gadget(args, report: RunReport) -> int:
    cls, spec = build_gadget(args)
    text = emit_class(cls, header=[spec.manifest()])
    report.params["gadget"] = args.tag
    report.params.update(spec.params)
    report.horizons.update(spec.horizons)
    report.results.update(concepts=len(cls), distinct=len(cls.distinct()),
                          class_digest=_digest(text.encode()))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        report.results["out"] = args.out
    else:
        report.results["class"] = text
    return EXIT_OK


# -- verify -------------------------------------------------------------------------------------

def cmd_verify(args, report: RunReport) -> int:
    tag = args.tag
    J, S, M = args.column_horizon, args.stage_horizon, args.max_domain
    if tag == "lk":
        rep = verify.verify_lk(args.k, args.mult, args.samples, args.seed)
    elif tag == "rtd-reduction":
        rep = verify.verify_rtd_reduction(_descriptors(args), J or 3, S)
    else:
        w = _descriptors(args)[-1]
        if tag == "acds":
            rep = verify.verify_acds(w, J, M, S)
        elif tag == "t1":
            rep = verify.verify_t1(w, args.x, J, M)
        elif tag == "tdplus-forall":
            rep = verify.verify_tdplus(w, args.x, J, M, args.budget)
        elif tag == "xtdplus":
            rep = verify.verify_xtdplus(w, M)
        elif tag == "gan":
            rep = verify.verify_gan(w, args.n, args.max_len, J)
        else:
            raise UsageError(f"unknown gadget tag {tag!r}")
    report.params["gadget"] = tag
    report.params.update(rep.params)
    report.horizons.update(rep.horizons)
    report.results["checks"] = [{"ok": c.ok, "check": c.name, "detail": c.detail} for c in rep.checks]
    if rep.verdict is not None or rep.expected is not None:
        report.results["verdict"] = rep.verdict
        report.results["expected"] = rep.expected
    report.results["passed"] = sum(c.ok for c in rep.checks)
    report.results["failed"] = sum(not c.ok for c in rep.checks)
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- oracle -------------------------------------------------------------------------------------

def _oracle_pair(measure, cls):
    """(solver value, brute-force value) for one random class."""
    if measure in ("td", "tdplus"):
        pos = measure == "tdplus"
        fn = td.positive_teaching_dimension if pos else td.teaching_dimension
        return ([fn(cls, i)[0] for i in range(len(cls))],
                [oracles.brute_td_class(cls, i, pos) for i in range(len(cls))])
    if measure == "xtd":
        return xtd.xtd_of_class(cls), oracles.brute_xtd(cls.sets, cls.domain.size)
    if measure == "xtdplus":
        return xtd.xtdplus_of_class(cls).value, oracles.brute_xtdplus(cls.sets, cls.domain.size)
    if measure in ("rtd", "rtdplus"):
        pos = measure == "rtdplus"
        return rtd.rtd_exact(cls, pos), oracles.brute_rtd(cls.sets, pos)
    if measure == "rtd1plus":
        return rtd.rtd1plus(cls)[0], oracles.brute_rtd1plus(cls.sets)
    raise UsageError(f"unknown measure {measure!r}")


def cmd_oracle(args, report: RunReport) -> int:
    max_domain = args.max_domain or 8
    rng = random.Random(args.seed)
    report.params.update(measure=args.measure, trials=args.trials, seed=args.seed,
                         max_concepts=args.max_concepts, max_domain=max_domain)
    mismatches = []
    for t in range(args.trials):
        cls = oracles.random_class(rng, args.max_concepts, max_domain)
        got, want = _oracle_pair(args.measure, cls)
        if got != want:
            mismatches.append({"trial": t, "solver": got, "oracle": want, "class": emit_class(cls)})
    report.results["mismatches"] = len(mismatches)
    if mismatches:
        report.results["first_mismatch"] = mismatches[0]
    return EXIT_FAIL if mismatches else EXIT_OK


# -- probe / sequence-validate -------------------------------------------------------------------

def _concept_index(cls, name):
    try:
        return cls.index_of(name)
    except KeyError:
        raise UsageError(f"no concept named {name!r}") from None


def cmd_probe(args, report: RunReport) -> int:
    cls, data = _load(args.file, args)
    report.input_digest = _digest(data)
    i = _concept_index(cls, args.concept)
    r = verify.refute_positive_teaching_set(cls, i, args.budget)
    report.params.update(concept=args.concept, budget=args.budget)
    report.results.update(refuted=r.refuted, checked=r.checked)
    if r.unrefuted is not None:
        report.results["unrefuted"] = r.unrefuted
    report.results["covers"] = [{"set": _render(s), "covered_by": cls[j].name} for s, j in r.covers]
    return EXIT_OK


def cmd_sequence_validate(args, report: RunReport) -> int:
    cls, data = _load(args.file, args)
    seq_bytes = Path(args.sequence).read_bytes()
    report.input_digest = _digest(data, seq_bytes)
    blocks = parse_sequence(seq_bytes.decode("utf-8"), cls)
    seq = rtd.TeachingSequence(tuple(blocks))
    check = rtd.validate_sequence(cls, seq, positive=args.positive)
    report.params.update(positive=args.positive, blocks=len(blocks))
    report.results.update(valid=check.valid, orders=list(check.orders),
                          order=check.order, problem=check.problem)
    return EXIT_OK if check.valid else EXIT_FAIL


# -- argument parsing -------------------------------------------------------------------------

def _env(name, cast, default=None):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    if cast is bool:
        return raw.lower() in ("1", "true", "yes", "on")
    return cast(raw)


def _nat(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options (env TEACHDIM_<NAME>)")
    g.add_argument("--max-domain", type=_nat, default=_env("MAX_DOMAIN", int),
                   help="largest domain accepted for input classes; domain horizon for gadgets")
    g.add_argument("--stage-horizon", type=_nat, default=_env("STAGE_HORIZON", int))
    g.add_argument("--column-horizon", type=_nat, default=_env("COLUMN_HORIZON", int))
    g.add_argument("--seed", type=int, default=_env("SEED", int, DEFAULT_SEED))
    g.add_argument("--machine", action="store_true", default=_env("MACHINE", bool, False),
                   help="print one JSON document instead of key: value lines")

    p = argparse.ArgumentParser(prog="teachdim", description="Teaching dimension toolkit.",
                                formatter_class=argparse.RawDescriptionHelpFormatter,
                                epilog=__doc__.split("\n\n", 1)[1])
    sub = p.add_subparsers(dest="verb", required=True)

    d = sub.add_parser("dimension", parents=[common], help="compute a dimension of a class file")
    d.add_argument("file")
    d.add_argument("--measure", choices=MEASURES, default="td")
    d.add_argument("--all", action="store_true", help="per-concept table (td, tdplus)")
    d.set_defaults(func=cmd_dimension)

    def gadget_params(q):
        q.add_argument("tag", choices=TAGS)
        q.add_argument("--w", "--a", dest="w", action="append", metavar="DESCRIPTOR",
                       help="set descriptor, e.g. cofinite:{1,3}, finite:{2}, prog:(2,0); "
                            "repeat for rtd-reduction")
        q.add_argument("--x", type=_nat, default=0, help="row tag for t1 / index a for tdplus-forall")
        q.add_argument("--k", type=_nat, default=2)
        q.add_argument("--mult", type=int, default=3)
        q.add_argument("--n", type=int, default=1)
        q.add_argument("--max-len", type=int, default=2)

    gq = sub.add_parser("gadget", parents=[common], help="emit a gadget truncation as a class file")
    gadget_params(gq)
    gq.add_argument("--out")
    gq.set_defaults(func=cmd_gadget)

    v = sub.add_parser("verify", parents=[common], help="check a gadget's finite-scale claims")
    gadget_params(v)
    v.add_argument("--budget", type=_nat, default=3)
    v.add_argument("--samples", type=_nat, default=20)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="compare solvers with brute force")
    o.add_argument("--measure", choices=ORACLE_MEASURES, default="td")
    o.add_argument("--trials", type=_nat, default=100)
    o.add_argument("--max-concepts", type=int, default=5)
    o.set_defaults(func=cmd_oracle)

    pr = sub.add_parser("probe", parents=[common], help="search for a small positive teaching set")
    pr.add_argument("file")
    pr.add_argument("--concept", required=True)
    pr.add_argument("--budget", type=_nat, default=3)
    pr.set_defaults(func=cmd_probe)

    s = sub.add_parser("sequence-validate", parents=[common], help="check a teaching sequence file")
    s.add_argument("file")
    s.add_argument("sequence")
    s.add_argument("--positive", action="store_true")
    s.set_defaults(func=cmd_sequence_validate)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb in ("gadget", "verify") and args.tag == "lk" and args.mult < 1:
        parser.error("--mult must be >= 1")
    report = RunReport(command=["teachdim", *argv])
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except UsageError as exc:
        print(f"teachdim: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"teachdim: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"teachdim: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (rtd.BoundExceeded, xtd.BoundExceeded, DomainOverflow, desc.HorizonError) as exc:
        print(f"teachdim: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except AssertionError as exc:
        print(f"teachdim: internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    report.wall_time = time.perf_counter() - start
    report.status = "ok" if code == EXIT_OK else "fail"
    print(report.machine() if args.machine else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
