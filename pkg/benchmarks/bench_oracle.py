"""Time the compiled and pure-Python G4ip cores on the same workload.

Usage: python benchmarks/bench_oracle.py [--count N] [--depth D] [--seed S]

Formulas are encoded outside the timed region; each query then runs
with an empty memo table, so the timing covers proof search only.  The
workload is ¬¬A for seeded random A over four atoms with ¬, ∧, ∨, →.
"""
import argparse
import random
import time

from ndpost.kernel.formula import And, Imp, Not, Or, prop
from ndpost.oracle import _backend, _kernel_py
from ndpost.oracle.decide import Decider


def random_formula(rng, depth, atoms):
    if depth == 0 or rng.random() < 0.2:
        return rng.choice(atoms)
    k = rng.randrange(4)
    if k == 0:
        return Not(random_formula(rng, depth - 1, atoms))
    cls = (And, Or, Imp)[k - 1]
    return cls(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms))


def time_backend(prover_cls, formulas, minimal):
    saved = _backend.Prover
    _backend.Prover = prover_cls
    try:
        dec = Decider(minimal=minimal)
        codes = [dec.encode(Not(Not(f))) for f in formulas]
    finally:
        _backend.Prover = saved
    p = dec._p
    empty = frozenset()
    t = time.perf_counter()
    answers = []
    for c in codes:
        p.clear()
        answers.append(p.prove(empty, c))
    return time.perf_counter() - t, answers


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=400)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    atoms = [prop(a) for a in "PQRS"]
    formulas = [random_formula(rng, args.depth, atoms) for _ in range(args.count)]
    backends = [("python", _kernel_py.Prover)]
    try:
        from ndpost.oracle._kernel import Prover as Compiled
        backends.append(("cython", Compiled))
    except ImportError:
        print("compiled core not built; timing the Python core only")
    print(f"{args.count} random formulas, depth <= {args.depth}, seed {args.seed}")
    for minimal in (False, True):
        times, verdicts = {}, {}
        for name, cls in backends:
            runs = [time_backend(cls, formulas, minimal) for _ in range(args.repeat)]
            times[name] = min(t for t, _ in runs)
            verdicts[name] = runs[0][1]
            print(f"  {'NM' if minimal else 'NJ'} {name:7s} {times[name]:8.3f} s")
        if len(times) == 2:
            same = verdicts["python"] == verdicts["cython"]
            print(f"  speedup {times['python'] / times['cython']:.2f}x, verdicts agree: {same}")


if __name__ == "__main__":
    main()
