"""A single L1 L0 pass can leave short intervals behind; iterating to a fixed point clears them."""

import argparse

from topofilter.complex import diagrams, lpf_gwf, lpf_star
from topofilter.instances import pit_in_ring, pit_in_ring_image


def show(label, gwf, emb, s, width):
    p0, p1 = diagrams(gwf, emb, s)
    print(f"{label}: PD0={p0.nontrivial()} PD1={p1.nontrivial()}")
    for r in range(0, len(s), width):
        print("   ", " ".join(f"{x:g}" for x in s.values[r : r + width]))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=float, default=3.0)
    args = ap.parse_args()
    gwf, emb, f = pit_in_ring()
    w = pit_in_ring_image().width
    show("f", gwf, emb, f, w)
    g0 = lpf_gwf(gwf, emb, f, args.eps, 0)
    show("L0 f", gwf, emb, g0, w)
    g1 = lpf_gwf(gwf, emb, g0, args.eps, 1)
    show("L1 L0 f", gwf, emb, g1, w)
    star, k = lpf_star(gwf, emb, f, args.eps)
    show(f"L* f ({k} applications)", gwf, emb, star, w)
    print("sup |L* f - f| =", f.sup_distance(star))


if __name__ == "__main__":
    main()
