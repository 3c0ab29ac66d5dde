"""Write error curves for the segment rules and the sine approximations as CSV."""

import argparse
from fractions import Fraction
from pathlib import Path

from circlepi.harness import SEGMENT_FORMULAS, scan_csv, segment_error_scan, sine_error_scan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--step", type=Fraction, default=Fraction(1))
    parser.add_argument("--digits", type=int, default=10)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    n = int(180 / args.step)
    grid = [args.step * i for i in range(1, n + 1)]
    for formula in SEGMENT_FORMULAS:
        rows = segment_error_scan(formula, grid, args.digits)
        path = args.out / f"{formula}.csv"
        path.write_text(scan_csv(rows), encoding="utf-8", newline="\n")
        worst = max(rows, key=lambda r: abs(r.rel_error.center))
        print(f"{formula:<14} worst {worst.rel_error} at {worst.theta} deg -> {path}")

    scan = sine_error_scan([Fraction(0)] + grid, digits=args.digits)
    path = args.out / "sine.csv"
    path.write_text(scan.to_csv(), encoding="utf-8", newline="\n")
    inner = sine_error_scan(range(10, 171), digits=args.digits)
    print(f"bhaskara1 worst {scan.max_bhaskara_error} at {scan.max_bhaskara_theta} deg")
    print(f"  over 10..170: {inner.max_bhaskara_error} at {inner.max_bhaskara_theta} deg")
    print(f"table R=3438 worst {scan.max_table_error} at {scan.max_table_theta} deg -> {path}")


if __name__ == "__main__":
    main()
