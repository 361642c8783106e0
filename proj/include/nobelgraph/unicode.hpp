#pragma once
// Minimal Unicode support: UTF-8 transcoding, NFC normalization, simple
// lowercase folding. Table-driven within the BMP (see unicode_tables.hpp);
// supplementary-plane codepoints pass through untouched.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "nobelgraph/unicode_tables.hpp"

namespace nobelgraph::unicode {

using Codepoint = std::uint32_t;

inline constexpr Codepoint kReplacement = 0xFFFD;

// Decodes UTF-8, substituting U+FFFD for ill-formed sequences.
inline std::vector<Codepoint> decode_utf8(std::string_view s) {
    std::vector<Codepoint> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        Codepoint cp = 0;
        std::size_t len = 0;
        if (c < 0x80) {
            cp = c;
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            len = 4;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > s.size()) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        // reject overlong forms and surrogates
        if (!ok || (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline void append_utf8(std::string& out, Codepoint cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(const std::vector<Codepoint>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (Codepoint cp : cps) append_utf8(out, cp);
    return out;
}

namespace detail {

template <typename Key, std::size_t N>
inline const Key* find_key(const Key (&keys)[N], Key k) {
    const Key* end = keys + N;
    const Key* it = std::lower_bound(keys, end, k);
    return (it != end && *it == k) ? it : nullptr;
}

inline int combining_class(Codepoint cp) {
    using namespace unicode_tables;
    if (cp >= 0x10000) return 0;
    if (const char16_t* it = find_key(kCccKey, static_cast<char16_t>(cp)))
        return kCccVal[it - kCccKey];
    return 0;
}

// Hangul syllable constants (UAX #15)
inline constexpr Codepoint kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
inline constexpr Codepoint kLCount = 19, kVCount = 21, kTCount = 28;
inline constexpr Codepoint kNCount = kVCount * kTCount;
inline constexpr Codepoint kSCount = kLCount * kNCount;

inline void decompose_into(Codepoint cp, std::vector<Codepoint>& out) {
    using namespace unicode_tables;
    if (cp >= kSBase && cp < kSBase + kSCount) {
        Codepoint s = cp - kSBase;
        out.push_back(kLBase + s / kNCount);
        out.push_back(kVBase + (s % kNCount) / kTCount);
        if (s % kTCount) out.push_back(kTBase + s % kTCount);
        return;
    }
    if (cp < 0x10000) {
        if (const char16_t* it = find_key(kDecompKey, static_cast<char16_t>(cp))) {
            std::uint32_t ref = kDecompRef[it - kDecompKey];
            std::uint32_t off = ref >> 3, len = ref & 7;
            for (std::uint32_t k = 0; k < len; ++k) out.push_back(kDecompData[off + k]);
            return;
        }
    }
    out.push_back(cp);
}

inline Codepoint compose_pair(Codepoint a, Codepoint b) {
    using namespace unicode_tables;
    // Hangul L+V and LV+T compose algorithmically.
    if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount)
        return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
    if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 && b > kTBase &&
        b < kTBase + kTCount)
        return a + (b - kTBase);
    if (a < 0x10000 && b < 0x10000) {
        std::uint32_t key = (a << 16) | b;
        if (const std::uint32_t* it = find_key(kCompKey, key)) return kCompVal[it - kCompKey];
    }
    return 0;
}

} // namespace detail

// Canonical composition per UAX #15: full canonical decomposition, canonical
// ordering, then recomposition.
inline std::vector<Codepoint> nfc(const std::vector<Codepoint>& in) {
    std::vector<Codepoint> d;
    d.reserve(in.size());
    for (Codepoint cp : in) detail::decompose_into(cp, d);

    // canonical ordering: stable sort of each nonzero-ccc run
    for (std::size_t i = 1; i < d.size(); ++i) {
        int cc = detail::combining_class(d[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0 && detail::combining_class(d[j - 1]) > cc) {
            std::swap(d[j - 1], d[j]);
            --j;
        }
    }

    if (d.empty()) return d;
    std::vector<Codepoint> out;
    out.reserve(d.size());
    std::size_t starter = std::string::npos;
    int last_cc = -1; // ccc of the last char appended after the starter; -1 = none
    for (Codepoint cp : d) {
        int cc = detail::combining_class(cp);
        if (starter != std::string::npos) {
            // compose when not blocked: directly after starter, or strictly
            // increasing combining class
            if ((last_cc == -1 && cc >= 0) || (last_cc != -1 && cc > last_cc)) {
                if (Codepoint comp = detail::compose_pair(out[starter], cp)) {
                    out[starter] = comp;
                    continue;
                }
            }
        }
        out.push_back(cp);
        if (cc == 0) {
            starter = out.size() - 1;
            last_cc = -1;
        } else {
            last_cc = cc;
        }
    }
    return out;
}

inline std::string nfc(std::string_view s) { return encode_utf8(nfc(decode_utf8(s))); }

inline Codepoint to_lower(Codepoint cp) {
    using namespace unicode_tables;
    if (cp >= 0x10000) return cp;
    if (const char16_t* it = detail::find_key(kLowerKey, static_cast<char16_t>(cp)))
        return kLowerVal[it - kLowerKey];
    return cp;
}

// Simple (codepoint-wise) lowercase; the identity key for case-insensitive
// matching throughout the store.
inline std::string fold_lower(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

// Unicode White_Space property (BMP members).
inline bool is_space(Codepoint cp) {
    switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
    case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
    case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
    case 0x3000:
        return true;
    default:
        return false;
    }
}

} // namespace nobelgraph::unicode
