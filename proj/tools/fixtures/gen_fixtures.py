#!/usr/bin/env python3
"""Regenerates the PD fixtures under fixtures/ from explicit planar drawings.

Each link is drawn as closed polygons in the plane; every crossing decides
over/under either from per-vertex heights or from a pairwise layering rule.
The script walks each component, numbers strands along its orientation and
emits PD tuples (slot 0 = incoming under-strand, counterclockwise).

    python3 tools/fixtures/gen_fixtures.py fixtures/
"""
import json
import math
import sys
from fractions import Fraction as Q
from pathlib import Path


def circle(cx, cy, r, n=24, phase=0.37):
    pts = []
    for i in range(n):
        t = phase + 2 * math.pi * i / n
        pts.append((Q(cx) + Q(round(r * math.cos(t) * 1000), 1000),
                    Q(cy) + Q(round(r * math.sin(t) * 1000), 1000)))
    return pts


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def seg_hit(p, q, r, s):
    d1, d2 = sub(q, p), sub(s, r)
    den = cross2(d1, d2)
    if den == 0:
        if cross2(sub(r, p), d1) != 0:
            return None
        ax = sorted([p, q]); bx = sorted([r, s])
        if ax[1] < bx[0] or bx[1] < ax[0]:
            return None
        raise ValueError("collinear overlap")
    t = cross2(sub(r, p), d2) / den
    u = cross2(sub(r, p), d1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise ValueError("degenerate touch")
    return None


def build_pd(comps, over, crossingless=0):
    """comps: list of polygons (lists of 2D points, closed implicitly).
    over(ci, si, ti, cj, sj, tj) -> True if strand (ci,si,ti) passes over."""
    events = [[] for _ in comps]  # (segment, t, crossing id, is_over, direction)
    crossings = []
    segs = []
    for ci, poly in enumerate(comps):
        for si in range(len(poly)):
            segs.append((ci, si, poly[si], poly[(si + 1) % len(poly)]))
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            ca, sa, p, q = segs[a]
            cb, sb, r, s = segs[b]
            if ca == cb:
                n = len(comps[ca])
                if sb == (sa + 1) % n or sa == (sb + 1) % n:
                    continue
            hit = seg_hit(p, q, r, s)
            if hit is None:
                continue
            t, u = hit
            a_over = over(ca, sa, t, cb, sb, u)
            cid = len(crossings)
            crossings.append({"a_over": a_over,
                              "dir_a": sub(q, p), "dir_b": sub(s, r)})
            events[ca].append((sa, t, cid, a_over))
            events[cb].append((sb, u, cid, not a_over))
    labels = {}  # (cid, is_over) -> (in, out)
    base = 1
    for ci, ev in enumerate(events):
        ev.sort(key=lambda e: (e[0], e[1]))
        m = len(ev)
        for k, (_, _, cid, is_over) in enumerate(ev):
            labels[(cid, is_over)] = (base + (k - 1) % m, base + k)
        base += m
    pd = []
    for cid, c in enumerate(crossings):
        u_in, u_out = labels[(cid, False)]
        o_in, o_out = labels[(cid, True)]
        under_dir = c["dir_b"] if c["a_over"] else c["dir_a"]
        over_dir = c["dir_a"] if c["a_over"] else c["dir_b"]
        # slot 1 sits at -under rotated counterclockwise by 90 degrees
        side = (under_dir[1], -under_dir[0])
        if over_dir[0] * side[0] + over_dir[1] * side[1] > 0:
            pd.append([u_in, o_out, u_out, o_in])
        else:
            pd.append([u_in, o_in, u_out, o_out])
    used = sum(1 for ev in events if ev)
    return pd, used + crossingless


def heights_rule(zs):
    """Over/under from per-vertex heights, linearly interpolated."""
    def z(ci, si, t):
        poly = zs[ci]
        return poly[si] + (poly[(si + 1) % len(poly)] - poly[si]) * t

    def over(ca, sa, t, cb, sb, u):
        za, zb = z(ca, sa, t), z(cb, sb, u)
        if za == zb:
            raise ValueError("equal heights at crossing")
        return za > zb
    return over


def pair_rule(order):
    """order[(i, j)] True means component i passes over j."""
    def over(ca, sa, t, cb, sb, u):
        if (ca, cb) in order:
            return order[(ca, cb)]
        return not order[(cb, ca)]
    return over


def borromean_layout():
    return [circle(0, 1.2, 1.6), circle(-1.04, -0.6, 1.6), circle(1.04, -0.6, 1.6)]


def brunn(k):
    """K3 realises the commutator [x1^k, x2] around two split round circles."""
    c1 = circle(-6, 0, 4, 32)
    c2 = circle(6, 0, 4, 32)
    pts, zs = [], []

    def add(x, y, z):
        pts.append((Q(x).limit_denominator(1000), Q(y).limit_denominator(1000)))
        zs.append(Q(z))
    add(-12, 6, -1)
    for j in range(k):  # top lobes into C1: enter under, leave over
        x = -8 + 1.5 * j
        add(x, 6, -1); add(x, 2, -1); add(x + 0.5, 2, 1); add(x + 0.5, 6, 1)
    add(6.5, 6, -1); add(6.5, 2, -1); add(5.5, 2, 1); add(5.5, 5, 1)
    add(0, 5, 1)
    add(0, -6, 1)
    for j in range(k):  # bottom lobes into C1: enter over, leave under
        x = -4.5 - 1.5 * j
        add(x, -6, 1); add(x, -2, 1); add(x - 0.5, -2, -1); add(x - 0.5, -6, -1)
    add(-12, -6, 1)
    add(-12, -8, 1)
    add(5.5, -8, 1); add(5.5, -2, 1); add(6.5, -2, -1); add(6.5, -9, -1)
    add(12, -9, -1); add(12, 8, -1); add(-13, 8, -1); add(-13, 6, -1)
    comps = [c1, c2, pts]
    heights = [[Q(0)] * len(c1), [Q(0)] * len(c2), zs]
    return comps, heights_rule(heights)


def write(out, name, pd, ncomp, comment):
    data = {"name": name, "comment": comment, "components": ncomp, "crossings": pd}
    (out / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    out.mkdir(parents=True, exist_ok=True)

    write(out, "unknot0", [], 1, "Round unknot drawn without crossings.")

    hopf = [circle(0, 0, 2), circle(2, 0, 2)]
    pd, n = build_pd(hopf, heights_rule([[Q(1) if p[1] > 0 else Q(-1) for p in hopf[0]],
                                         [Q(0)] * len(hopf[1])]))
    write(out, "hopf_pos", pd, n,
          "Two overlapping circles, component 1 over at the top crossing and under at the bottom one; positive Hopf link.")

    layout = borromean_layout()
    pd, n = build_pd(layout, pair_rule({(0, 1): True, (1, 2): True, (2, 0): True}))
    write(out, "borromean", pd, n,
          "Standard alternating 6-crossing Borromean rings: three round circles, 1 over 2, 2 over 3, 3 over 1.")
    pd, n = build_pd(layout, pair_rule({(0, 1): False, (1, 2): False, (2, 0): False}))
    write(out, "borromean_mirror", pd, n,
          "Mirror image of the Borromean fixture: 2 over 1, 3 over 2, 1 over 3.")

    pd, n = build_pd(layout, pair_rule({(0, 1): True, (0, 2): True, (1, 2): True}))
    write(out, "split3", pd, n,
          "Borromean layout with layered crossings (1 over 2 over 3): a split 3-component unlink drawn with 6 crossings.")

    write(out, "unlink3", [], 3, "Three crossingless round circles.")

    pd, n = build_pd(hopf, heights_rule([[Q(1) if p[1] > 0 else Q(-1) for p in hopf[0]],
                                         [Q(0)] * len(hopf[1])]), crossingless=1)
    write(out, "hopf_unknot", pd, n,
          "Positive Hopf link plus a split crossingless unknot (pairwise linking 1,0,0).")

    for k in (1, 2, 3):
        comps, rule = brunn(k)
        pd, n = build_pd(comps, rule)
        write(out, f"brunn_{k}", pd, n,
              f"Components 1,2 are split round circles; component 3 follows the commutator [x1^{k}, x2] of their meridians ({4 * k + 4} crossings).")


if __name__ == "__main__":
    main()
