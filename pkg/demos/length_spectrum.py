"""Enumerate the figure-eight geodesic spectrum and test the
factorization identity of the Ruelle function on it.

Run:  python3 demos/length_spectrum.py
"""

import math

from cuspedzeta import enumerate_classes, figure_eight_generators
from cuspedzeta.ruelle import euler_product, fried_residual, log_derivative, \
    log_derivative_series

FIG8_VOLUME = 2.029883212819307


def main():
    spectrum = enumerate_classes(
        figure_eight_generators(), [1.0, 1.0],
        max_word_len=8, cutoff_length=3.0,
        covolume=2 * math.sqrt(3), volume=FIG8_VOLUME, complete=True)

    print(f"{len(list(spectrum.primitives()))} primitive oriented classes "
          f"up to length {spectrum.cutoff_length}")
    print(f"{'length':>12}  {'holonomy':>10}  word")
    for c in spectrum.primitives():
        print(f"{c.length:12.9f}  {c.holonomy:10.6f}  "
              f"{''.join('abAB'[g + 2 * (e < 0)] for g, e in c.word)}")

    z = 5.0
    rep = euler_product(spectrum, z)
    print(f"\nR(z={z}) truncated: {rep.value.real:.15f} "
          f"({rep.terms_used} primitive factors)")
    print(f"factorization residual at z={z}: {fried_residual(spectrum, z):.2e}")
    d_num = log_derivative(spectrum, 4.0)
    d_ser = log_derivative_series(spectrum, 4.0)
    print(f"d/dz log R at z=4: numeric {d_num.real:.12f} vs "
          f"series {d_ser.real:.12f} (diff {abs(d_num - d_ser):.2e})")


if __name__ == "__main__":
    main()
