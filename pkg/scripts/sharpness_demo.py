"""The filter's distance bounds are nearly attained.

On the path 0-9-1-9-7, removing [7,9) while keeping [1,9) raises the last
sample by 2. As eps drops towards 2 the change approaches the eps bound, and
the shifted filter's change of 1 approaches eps/2.
"""

from topofilter.bht import build_bht, pd0_from_bht
from topofilter.core import canonical_ordering
from topofilter.instances import sharpness_path
from topofilter.lpf import lpf0, lpf0_shifted


def main():
    f = sharpness_path()
    bht = build_bht(f, canonical_ordering(f))
    print("f      =", f.values)
    print("PD0(f) =", pd0_from_bht(bht).nontrivial())
    for eps in (2.01, 3.0, 9.0):
        g = lpf0(f, bht, eps).filtered
        h = lpf0_shifted(f, bht, eps)
        print(
            f"eps={eps:<5} L0f={g.values}  |L0f-f|={f.sup_distance(g):g}"
            f"  shifted |.-f|={f.sup_distance(h):g} (eps/2={eps / 2:g})"
            f"  PD0={pd0_from_bht(build_bht(g, canonical_ordering(g))).nontrivial()}"
        )


if __name__ == "__main__":
    main()
