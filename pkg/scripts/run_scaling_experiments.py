"""Run the full scaling study and print fitted growth exponents.

Sweeps the binary and d-ary adversarial families over a geometric grid
of top-row sizes, replays each arrival script under adversarial and
random edge orders, writes one CSV per family, and fits log-log slopes
of total rerouting work against edge count.

Expected outcome: the adversarial slopes track log_d((1 - epsilon) * H_d)
while the random-order slope stays near zero.
"""

import argparse
import math
import os

import walkrank as wr


def run_family(family, d, N_values, R, epsilon, seeds, out_dir):
    records = wr.sweep(family, N_values, R=R, epsilon=epsilon,
                       seeds=seeds, d=d)
    path = os.path.join(out_dir, f"sweep_{family}_d{d}.csv")
    with open(path, "w") as fh:
        wr.write_csv(records, fh)
    print(f"[{family} d={d}] {len(records)} runs -> {path}")

    predicted = math.log((1 - epsilon) * wr.harmonic(d), d)
    for order in ("adversarial", "random"):
        fit = wr.fit_exponent(records, order)
        print(f"  {order:11s} slope={fit.slope:+.4f}  r2={fit.r_squared:.5f}"
              f"  (predicted adversarial {predicted:+.4f})")

    largest = max(N_values)
    adv = [r.reroutes_total for r in records
           if r.N == largest and r.order == "adversarial"]
    rnd = [r.reroutes_total for r in records
           if r.N == largest and r.order == "random"]
    contrast = (sum(adv) / len(adv)) / max(sum(rnd) / len(rnd), 1.0)
    print(f"  adversarial/random work at N={largest}: {contrast:.1f}x")
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="results",
                    help="directory for sweep CSVs (default: results)")
    ap.add_argument("--R", type=int, default=10,
                    help="stored walks per node (default: 10)")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2],
                    help="replay seeds to average over")
    ap.add_argument("--quick", action="store_true",
                    help="small grid for a fast smoke run")
    args = ap.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)

    if args.quick:
        binary_Ns = [2 ** k for k in range(6, 11, 2)]
        dary_Ns = [3 ** k for k in range(3, 6)]
    else:
        binary_Ns = [2 ** k for k in range(8, 15, 2)]
        dary_Ns = [3 ** k for k in range(5, 9)]

    run_family("binary", 2, binary_Ns, args.R, 0.2, args.seeds, args.out_dir)
    run_family("dary", 3, dary_Ns, args.R, 0.35, args.seeds, args.out_dir)


if __name__ == "__main__":
    main()
