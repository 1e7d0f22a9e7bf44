#!/usr/bin/env python3
"""Regenerate data/zeros2750.txt: the first 2750 zeta zero ordinates.

One ordinate per line, nine decimals, in the style of Odlyzko's zeros1
table.  The library's cutoff height H = 2 exp(e^2) ~ 3236.356 falls between
zeros 2702 and 2703, so 2750 lines leave comfortable margin.

Takes roughly an hour single-threaded; the checked-in table makes running
this optional.  Requires mpmath.

Usage: python3 tools/gen_zeros.py [outfile] [count]
"""

import sys
import time
from decimal import ROUND_HALF_EVEN, Decimal

from mpmath import mp, nstr, zetazero

mp.dps = 25


def main() -> None:
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/zeros2750.txt"
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 2750
    t0 = time.time()
    with open(out_path, "w") as out:
        for n in range(1, count + 1):
            gamma = zetazero(n).imag
            rounded = Decimal(nstr(gamma, 18)).quantize(
                Decimal("0.000000001"), rounding=ROUND_HALF_EVEN
            )
            out.write(f"{rounded}\n")
            if n % 250 == 0:
                out.flush()
                print(
                    f"{n}/{count} zeros in {time.time() - t0:.0f}s",
                    file=sys.stderr,
                    flush=True,
                )
    print(f"wrote {count} ordinates to {out_path} in {time.time() - t0:.0f}s")


if __name__ == "__main__":
    main()
