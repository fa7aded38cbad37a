"""Run every verification suite over several seeds and tabulate the results."""

import argparse

from rootext.verify import SUITE_NAMES, Params, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--cases", type=int, default=50)
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--degmax", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    params = Params(nmax=args.nmax, degmax=args.degmax)
    print(f"{'suite':<8} {'seed':>4} {'passed':>7} {'failed':>7} {'seconds':>8}")
    bad = 0
    for suite in SUITE_NAMES:
        for seed in args.seeds:
            r = run_suite(suite, seed, args.cases, params, jobs=args.jobs)
            bad += r.failed
            print(f"{suite:<8} {seed:>4} {r.passed:>7} {r.failed:>7} {r.duration:>8.2f}")
            if r.counterexample:
                print(f"  first failure: case {r.counterexample['case']} "
                      f"check {r.counterexample['check']}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
