"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or execute this
file directly for a summary.
"""

import random
import time
from contextlib import redirect_stdout
from io import StringIO

import pytest

from teachdim import cli
from teachdim.core import INF, ConceptClass, consistent
from teachdim.lab import descriptors as d
from teachdim.lab import verify as v
from teachdim.oracles import (brute_rtd, brute_rtd1plus_at_most, brute_td_class, brute_xtdplus,
                              random_class)
from teachdim.rtd import canonical_sequence, rtd1plus_at_most, rtd_exact
from teachdim.td import (is_distinguishing_set, is_minimal_distinguishing_set,
                         positive_teaching_dimension, td_at_most, teaching_dimension)
from teachdim.xtd import xtd_of_class, xtdplus_of_class

SEED = 2024


def report(number, title, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  [{number:>2}] {title}: {detail}")
    assert ok, detail


def test_01_td_oracle():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    bad = []
    for t in range(200):
        cls = random_class(rng, 5, 8)
        for i in range(len(cls)):
            for pos in (False, True):
                fn = positive_teaching_dimension if pos else teaching_dimension
                if fn(cls, i)[0] != brute_td_class(cls, i, pos):
                    bad.append((t, i, pos))
    elapsed = time.perf_counter() - start
    report(1, "TD/TD+ solver equals exhaustive enumeration", not bad and elapsed < 30,
           f"200 classes, {len(bad)} mismatches, {elapsed:.2f}s (limit 30s)")


def test_02_rtd1plus_greedy_oracle():
    rng = random.Random(SEED + 2)
    start = time.perf_counter()
    bad = []
    for t in range(100):
        cls = random_class(rng, 6, 6)
        for n in range(5):
            if rtd1plus_at_most(cls, n)[0] != brute_rtd1plus_at_most(cls.sets, n):
                bad.append((t, n))
    elapsed = time.perf_counter() - start
    report(2, "greedy RTD1+ decision equals brute force over orderings", not bad and elapsed < 60,
           f"100 classes x n=0..4, {len(bad)} mismatches, {elapsed:.2f}s (limit 60s)")


def test_03_rtd_exact_oracle():
    rng = random.Random(SEED + 3)
    bad, loose = [], []
    for t in range(50):
        cls = random_class(rng, 5, 6)
        for pos in (False, True):
            exact = rtd_exact(cls, pos)
            if exact != brute_rtd(cls.sets, pos):
                bad.append((t, pos))
            if canonical_sequence(cls, pos).order < exact:
                loose.append((t, pos))
    report(3, "rtd_exact equals ordered-partition search; canonical >= exact",
           not bad and not loose, f"50 classes, {len(bad)} mismatches, {len(loose)} canonical violations")


def test_04_singletons_family():
    rows = []
    ok = True
    for n in range(3, 9):
        cls = ConceptClass.from_sets([set()] + [{i} for i in range(1, n + 1)], domain_size=n + 1)
        singles = [teaching_dimension(cls, i)[0] for i in range(1, n + 1)]
        empty = teaching_dimension(cls, 0)[0]
        ok &= all(s == 1 for s in singles) and empty == n
        rows.append(empty)
    ok &= rows == sorted(rows) and len(set(rows)) == len(rows)
    report(4, "singletons+empty: TD({i}) = 1, TD(empty) = n, growing", ok,
           f"TD(empty) for n=3..8: {rows}")


def test_05_xtdplus_characterization():
    rng = random.Random(SEED + 5)
    start = time.perf_counter()
    bad = []
    for t in range(200):
        cls = random_class(rng, 6, 10)
        fast = xtdplus_of_class(cls).value
        sets = [cls[i].elements for i in cls.distinct()]
        overlap = any(a & b for k, a in enumerate(sets) for b in sets[k + 1:])
        if fast != brute_xtdplus(cls.sets, cls.domain.size) or (fast == INF) != overlap:
            bad.append(t)
    elapsed = time.perf_counter() - start
    report(5, "XTD+ fast path equals brute force; inf iff two concepts meet",
           not bad and elapsed < 30, f"200 classes, {len(bad)} mismatches, {elapsed:.2f}s (limit 30s)")


def test_06_xtd_bound():
    rng = random.Random(SEED + 6)
    worst = []
    for _ in range(100):
        cls = random_class(rng, 6, 10)
        k = len(cls.distinct())
        worst.append((xtd_of_class(cls), k))
    bad = [(x, k) for x, k in worst if x > k]
    report(6, "XTD <= number of concepts", not bad,
           f"100 classes (k <= 6, domain <= 10), {len(bad)} violations")


def test_07_lk_gadget():
    details = []
    ok = True
    for k in (1, 2, 3):
        r = v.verify_lk(k, 3, samples=20, seed=SEED)
        ok &= r.ok
        details.append(f"k={k}: {sum(c.ok for c in r.checks)}/{len(r.checks)}")
    report(7, "L_k: markers TD+ 1, top-first cost k+1, subfamilies RTD1+ 1", ok, ", ".join(details))


def test_08_gan_gadget():
    details = []
    ok = True
    for n in (1, 2):
        co = v.verify_gan(d.Cofinite(), n)
        ev = v.verify_gan(d.Progressions(((2, 0),)), n)
        cost = next(c for c in ev.checks if c.name.startswith("n+1 points"))
        ok &= co.ok and co.verdict == 1 and ev.ok and ev.verdict == n + 1 and cost.ok
        details.append(f"n={n}: cofinite order {co.verdict}, evens order {ev.verdict} ({cost.detail})")
    report(8, "G^{a,n}: sequences validate with orders 1 and n+1; cost n+1", ok, "; ".join(details))


COFINITE = [d.Cofinite(), d.Cofinite({0}), d.Cofinite({1, 3}), d.Cofinite({2, 5}),
            d.Cofinite({0, 1, 2}), d.Cofinite({4}), d.Cofinite({7}),
            d.Progressions(((2, 0), (2, 1))), d.Progressions(((3, 0), (3, 1), (3, 2))),
            d.Progressions(((1, 3),))]
COINFINITE = [d.Finite(), d.Finite({5}), d.Finite({0, 2, 4}), d.Finite({1, 6}),
              d.Progressions(((2, 0),)), d.Progressions(((2, 1),)), d.Progressions(((3, 1),)),
              d.Progressions(((4, 0), (4, 1))), d.Progressions(((3, 0), (0, 7))),
              d.Progressions(((5, 2),))]


def test_09_reduction_linkage():
    assert all(w.is_cofinite for w in COFINITE) and all(w.is_coinfinite for w in COINFINITE)
    wrong = []
    for w in COFINITE + COINFINITE:
        for tag, (verdict, expected, ok) in v.ground_truth_verdicts(w).items():
            if verdict != expected or not ok:
                wrong.append(f"{tag}@{w}")
    report(9, "acds/t1/tdplus-forall/xtdplus verdicts match ground truth", not wrong,
           f"20 descriptors x 4 gadgets, {len(wrong)} mismatches {wrong[:3]}")


def test_10_predicate_coherence():
    rng = random.Random(SEED + 10)
    bad = []
    for t in range(200):
        cls = random_class(rng, 5, 7)
        i = rng.randrange(len(cls))
        dset = frozenset(x for x in range(cls.domain.size) if rng.random() < 0.4)
        if is_minimal_distinguishing_set(cls, i, dset) and not is_distinguishing_set(cls, i, dset):
            bad.append((t, "mds"))
        answers = [td_at_most(cls, i, k) for k in range(1, cls.domain.size + 2)]
        if any(a and not b for a, b in zip(answers, answers[1:])):
            bad.append((t, "tddp"))
        for fn in (teaching_dimension, positive_teaching_dimension):
            _, w = fn(cls, i)
            if w is None:
                continue
            if not consistent(cls[i], w) or any(
                    consistent(o, w) for o in cls.sets if o != cls[i].elements):
                bad.append((t, fn.__name__))
    report(10, "MDS => DS, td_at_most monotone, witnesses are teaching sets", not bad,
           f"200 triples, {len(bad)} violations")


def _cli(argv):
    buf = StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def test_11_cli_determinism(tmp_path):
    cfile = tmp_path / "c.txt"
    cfile.write_text("domain 4\nconcept e:\nconcept a: 1\nconcept b: 2\nconcept ab: 1 2\n")
    sfile = tmp_path / "s.txt"
    sfile.write_text("block: ab\nblock: a b\nblock: e\n")
    runs = [["dimension", str(cfile), "--measure", m, "--all"] for m in cli.MEASURES]
    runs += [["gadget", t, "--w", "prog:(2,0)"] for t in cli.TAGS]
    runs += [["verify", t, "--w", "cofinite:{1}"] for t in cli.TAGS]
    runs += [["oracle", "--measure", m, "--trials", "15", "--max-concepts", "4",
              "--max-domain", "5", "--seed", "7"] for m in cli.ORACLE_MEASURES]
    runs += [["probe", str(cfile), "--concept", "a", "--budget", "2"],
             ["sequence-validate", str(cfile), str(sfile), "--positive"]]
    differ = [r[:2] for r in runs if _cli(r + ["--machine"]) != _cli(r + ["--machine"])]
    report(11, "CLI machine output is byte-identical across reruns", not differ,
           f"{len(runs)} commands, {len(differ)} differ {differ[:3]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
