"""Tally integer polygon-doubling perimeters over every rounding schedule.

Each of the ``doublings + 1`` square roots may be floored, ceiled or rounded
to nearest. The report shows which perimeters come out and how often, and
whether any schedule reproduces a target value.
"""

import argparse

from circlepi.siddhanta import policy_search, polygon_doubling


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--diameter", type=int, default=20000)
    parser.add_argument("--doublings", type=int, nargs="+", default=[4, 5, 6])
    parser.add_argument("--target", type=int, default=62832)
    args = parser.parse_args()

    for k in args.doublings:
        exact = polygon_doubling(args.diameter, k, exact_digits=8)
        print(f"exact perimeter of the {exact.sides}-gon: {exact.perimeter}")
        print(policy_search(args.diameter, k, args.target).summary())
        print()


if __name__ == "__main__":
    main()
