"""Regenerate ``src/pdfmark/wavelet/_filter_table.py``.

Daubechies (db) and Symlet (sym) low-pass reconstruction filters are computed
by spectral factorization of the Daubechies half-band polynomial in 80-digit
arithmetic (mpmath), then rounded to 17 significant digits.

    db   minimum-phase root selection
    sym  root selection from ``SYM_CHOICE`` (least-asymmetric tables)

Usage::

    python tools/gen_filters.py > src/pdfmark/wavelet/_filter_table.py
"""

from __future__ import annotations

import sys

import mpmath as mp

mp.mp.dps = 80

DB_MAX = 45
SYM_RANGE = range(2, 21)

# Per-order root choice (0 = inside the unit circle, 1 = outside) for each
# canonically sorted root group. These reproduce the published least-asymmetric
# tables; a pure phase-linearity search disagrees with them for several orders.
SYM_CHOICE = {
    2: "1", 3: "1", 4: "01", 5: "10", 6: "010", 7: "110", 8: "0101",
    9: "1001", 10: "01010", 11: "11001", 12: "101010", 13: "100011",
    14: "1010011", 15: "1100011", 16: "10100110", 17: "01110001",
    18: "010110010", 19: "110001011", 20: "1010011010",
}


def _halfband_roots(order):
    # P(y) = sum_k C(N-1+k, k) y^k, y = sin^2(w/2)
    coeffs = [mp.binomial(order - 1 + k, k) for k in range(order)]
    if order == 1:
        return []
    # mpmath wants highest degree first
    return mp.polyroots(coeffs[::-1], maxsteps=2000, extraprec=400)


def _z_pairs(order):
    """Return groups of candidate z-roots; each group has an inside and outside choice."""
    groups = []
    seen = []
    for y in _halfband_roots(order):
        # z + 1/z = 2 - 4y
        b = 2 - 4 * y
        disc = mp.sqrt(b * b - 4)
        z1 = (b + disc) / 2
        z2 = (b - disc) / 2
        inside, outside = (z1, z2) if abs(z1) < 1 else (z2, z1)
        if abs(mp.im(y)) > mp.mpf(10) ** -40:
            # conjugate pairs of y roots are handled together
            if any(abs(y - mp.conj(s)) < mp.mpf(10) ** -30 for s in seen):
                continue
            seen.append(y)
            groups.append(([inside, mp.conj(inside)], [outside, mp.conj(outside)]))
        else:
            groups.append(([mp.re(inside)], [mp.re(outside)]))
    # canonical order so that SYM_CHOICE bitmasks are reproducible
    groups.sort(key=lambda g: (float(mp.re(g[0][0])), abs(float(mp.im(g[0][0])))))
    return groups


def _expand(roots, order):
    poly = [mp.mpf(1)]
    for r in [mp.mpf(-1)] * order + list(roots):
        # multiply by (z - r), coefficients in ascending powers
        nxt = [mp.mpf(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] -= r * c
            nxt[i + 1] += c
        poly = nxt
    poly = [mp.re(c) for c in poly]
    scale = mp.sqrt(2) / mp.fsum(poly)
    return [c * scale for c in poly]


def daubechies(order):
    roots = [r for inside, _ in _z_pairs(order) for r in inside]
    h = _expand(roots, order)
    # ascending powers of z with inside roots gives the maximum-phase ordering
    return h[::-1]


def symlet(order):
    groups = _z_pairs(order)
    choice = SYM_CHOICE[order]
    roots = [r for g, c in zip(groups, choice) for r in g[int(c)]]
    return _expand(roots, order)


def _fmt(h):
    return "(\n" + "".join(f"        {mp.nstr(c, 17, min_fixed=-1, max_fixed=1)},\n" for c in h) + "    )"


def main(out=sys.stdout):
    out.write('"""Generated by tools/gen_filters.py. Do not edit."""\n\n')
    out.write("# low-pass reconstruction filters, sum = sqrt(2)\n")
    out.write("DB = {\n")
    for n in range(1, DB_MAX + 1):
        out.write(f"    {n}: {_fmt(daubechies(n))},\n")
    out.write("}\n\nSYM = {\n")
    for n in SYM_RANGE:
        out.write(f"    {n}: {_fmt(symlet(n))},\n")
    out.write("}\n")


if __name__ == "__main__":
    main()
