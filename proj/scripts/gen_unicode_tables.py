#!/usr/bin/env python3
"""Regenerates include/nobelgraph/unicode_tables.hpp from Python's unicodedata.

Covers the Basic Multilingual Plane: full canonical decompositions (Hangul
excluded, handled algorithmically), nonzero combining classes, primary
composition pairs, and simple lowercase mappings.

Usage: python3 scripts/gen_unicode_tables.py > include/nobelgraph/unicode_tables.hpp
"""

import sys
import unicodedata

MAXCP = 0x10000
SBASE, SCOUNT = 0xAC00, 11172


def one_level(cp):
    d = unicodedata.decomposition(chr(cp))
    if not d or d.startswith("<"):
        return None
    return [int(x, 16) for x in d.split()]


def full_decomp(cp):
    if SBASE <= cp < SBASE + SCOUNT:
        return [cp]
    d = one_level(cp)
    if d is None:
        return [cp]
    out = []
    for c in d:
        out.extend(full_decomp(c))
    return out


def main():
    decomp = {}
    ccc = {}
    comp = {}
    lower = {}

    for cp in range(MAXCP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        cc = unicodedata.combining(ch)
        if cc:
            ccc[cp] = cc
        fd = full_decomp(cp)
        if fd != [cp]:
            if any(c >= MAXCP for c in fd):
                continue  # stays unnormalized; no BMP char does this today
            decomp[cp] = fd
        d1 = one_level(cp)
        if d1 and len(d1) == 2 and all(c < MAXCP for c in d1):
            a, b = d1
            # The normalize() probe excludes composition-exclusion characters.
            if unicodedata.normalize("NFC", chr(a) + chr(b)) == ch:
                comp[(a, b)] = cp
        lo = ch.lower()
        if len(lo) == 1 and ord(lo) != cp and ord(lo) < MAXCP:
            lower[cp] = ord(lo)

    w = sys.stdout.write
    w("#pragma once\n")
    w("// Generated by scripts/gen_unicode_tables.py (UCD %s). Do not edit.\n" % unicodedata.unidata_version)
    w("#include <cstdint>\n\n")
    w("namespace nobelgraph::unicode_tables {\n\n")

    dk = sorted(decomp)
    data = []
    idx = []
    for cp in dk:
        seq = decomp[cp]
        idx.append((cp, len(data), len(seq)))
        data.extend(seq)

    def dump(name, ctype, values, fmt=str, per=12):
        w("inline constexpr %s %s[] = {\n" % (ctype, name))
        for i in range(0, len(values), per):
            w("    " + ", ".join(fmt(v) for v in values[i : i + per]) + ",\n")
        w("};\n\n")

    dump("kDecompKey", "char16_t", [cp for cp, _, _ in idx], lambda v: "0x%04X" % v)
    # offset<<3 | length; longest BMP canonical decomposition is 4 codepoints
    assert max(l for _, _, l in idx) <= 7
    dump("kDecompRef", "std::uint32_t", [(off << 3) | l for _, off, l in idx])
    dump("kDecompData", "char16_t", data, lambda v: "0x%04X" % v)

    ck = sorted(ccc)
    dump("kCccKey", "char16_t", ck, lambda v: "0x%04X" % v)
    dump("kCccVal", "std::uint8_t", [ccc[c] for c in ck])

    pk = sorted(comp)
    dump("kCompKey", "std::uint32_t", [(a << 16) | b for a, b in pk], lambda v: "0x%08Xu" % v)
    dump("kCompVal", "char16_t", [comp[p] for p in pk], lambda v: "0x%04X" % v)

    lk = sorted(lower)
    dump("kLowerKey", "char16_t", lk, lambda v: "0x%04X" % v)
    dump("kLowerVal", "char16_t", [lower[c] for c in lk], lambda v: "0x%04X" % v)

    w("} // namespace nobelgraph::unicode_tables\n")


if __name__ == "__main__":
    main()
