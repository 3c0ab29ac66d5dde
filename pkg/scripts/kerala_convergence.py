"""Convergence of the alternating series for pi with and without the end correction."""

import argparse

from circlepi.exactnum import to_decimal
from circlepi.kerala import corrected_pi, leibniz_partial
from circlepi.oracle import digits_correct, pi_hp


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[1, 2, 5, 10, 25, 50, 100, 200])
    args = parser.parse_args()

    pi = pi_hp(60)
    print("n     plain error        corrected error    literal-sign error  n^7*|err|  digits")
    for n in args.n:
        plain = 4 * leibniz_partial(n) - pi.center
        fixed = corrected_pi(n).pi_estimate - pi.center
        literal = corrected_pi(n, "paper_literal").pi_estimate - pi.center
        print(
            f"{n:<5} {float(plain):<+18.3e} {float(fixed):<+18.3e} {float(literal):<+19.3e}"
            f" {float(abs(fixed) * n**7):<10.4f} {digits_correct(corrected_pi(n).pi_estimate, pi)}"
        )
    print("\n50 terms:", to_decimal(corrected_pi(50).pi_estimate, 15))


if __name__ == "__main__":
    main()
