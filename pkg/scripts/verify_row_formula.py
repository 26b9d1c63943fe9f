"""Check observed per-row rerouting work against the closed-form predictor.

Replays the adversarial arrival script for one tree, buckets reroutes of
top-row walks by the row label of the arriving edge, averages over seeds,
and prints observed vs predicted R * N * ((1 - epsilon) * H_d)^i per row.
"""

import argparse

import walkrank as wr


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=("binary", "dary"), default="binary")
    ap.add_argument("--N", type=int, default=1024,
                    help="top-row size (default: 1024)")
    ap.add_argument("--d", type=int, default=2,
                    help="tree arity for the dary family")
    ap.add_argument("--R", type=int, default=50,
                    help="stored walks per node (default: 50)")
    ap.add_argument("--epsilon", type=float, default=0.2)
    ap.add_argument("--seeds", type=int, nargs="+",
                    default=list(range(10)))
    ap.add_argument("--max-row", type=int, default=None,
                    help="deepest row to report")
    args = ap.parse_args()

    checks = wr.verify_rows(args.family, args.N, R=args.R,
                            epsilon=args.epsilon, seeds=args.seeds,
                            d=args.d, max_row=args.max_row)

    print(f"family={args.family} d={args.d} N={args.N} R={args.R} "
          f"epsilon={args.epsilon} seeds={len(args.seeds)}")
    print(f"{'row':>3}  {'observed':>12}  {'predicted':>12}  {'ratio':>6}")
    for c in checks:
        print(f"{c.row:>3}  {c.observed_mean:>12.1f}  {c.predicted:>12.1f}"
              f"  {c.ratio:>6.3f}")
    worst = max(abs(c.ratio - 1.0) for c in checks)
    print(f"worst |ratio - 1| = {worst:.3f}")


if __name__ == "__main__":
    main()
