"""Where the upward recursion J(s, x) = Γ(s) - x J(s - 1, x) loses accuracy.

For each (s, x) prints the worst per-step shared bits, the accumulated loss,
and the relative error of pure recursion and of the guarded path against
quadrature.
"""

from fractions import Fraction

from bureshall.kernels import base_integral_J, recursion_cancellation

XS = (0.01, 1.0, 10.0, 50.0, 200.0, 1e3, 1e4)
SS = (Fraction(1, 2), Fraction(9, 2), Fraction(21, 2), 8, 16)


def main():
    print(f"{'s':>5} {'x':>8} {'step bits':>9} {'lost bits':>9} {'recursion':>10} {'guarded':>10}")
    for s in SS:
        for x in XS:
            step, lost = recursion_cancellation(s, x)
            ref = base_integral_J(s, x, method="quad")
            rec = abs(base_integral_J(s, x, method="recursion") - ref) / abs(ref)
            auto = abs(base_integral_J(s, x) - ref) / abs(ref)
            print(f"{str(s):>5} {x:>8g} {step:>9.0f} {lost:>9.0f} {rec:>10.1e} {auto:>10.1e}")


if __name__ == "__main__":
    main()
