"""Print every historical value with its exact form, decimal and signed error."""

import argparse

from circlepi.harness import percent, pi_catalog, sqrt2_catalog, sulva_round_trip
from circlepi.sulva import CirclingMethod, circle_from_square


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--digits", type=int, default=15)
    args = parser.parse_args()

    print("values of pi, largest error first")
    for r in pi_catalog(args.digits):
        print(
            f"  {r.method_id:<22} {r.exact_text(unicode=True):<28.28} {r.value}"
            f"  {percent(r.rel_error):>10}  {r.digits_correct:>2} digits"
        )

    print("\nvalues of sqrt(2)")
    for r in sqrt2_catalog(args.digits):
        print(f"  {r.method_id:<22} {r.exact_text(unicode=True):<14} {r.value}  {percent(r.rel_error, 6)}")

    print("\ncircling the unit square")
    for method in CirclingMethod:
        res = circle_from_square(1, method, args.digits)
        print(
            f"  {method.value:<13} area ratio {res.area_ratio}"
            f"  implied pi {res.implied_pi} = {res.implied_pi_value}"
        )

    circling, squaring = sulva_round_trip(args.digits)
    print(f"\ncircling error {percent(circling)}, squaring error {percent(squaring)}")


if __name__ == "__main__":
    main()
