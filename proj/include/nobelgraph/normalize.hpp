#pragma once
// Canonical text cleanup shared by ingestion, projection, and answer scoring.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nobelgraph/unicode.hpp"

namespace nobelgraph {

namespace detail {

// NFC + whitespace collapse + trim over codepoints, optionally dropping
// parenthesized descriptor segments.
inline std::optional<std::string> clean_text(std::string_view raw, bool strip_parentheticals) {
    auto cps = unicode::nfc(unicode::decode_utf8(raw));

    std::vector<unicode::Codepoint> kept;
    kept.reserve(cps.size());
    if (strip_parentheticals) {
        // nesting included; an unmatched '(' swallows the rest, a stray ')'
        // at depth 0 is a literal character
        int depth = 0;
        for (unicode::Codepoint cp : cps) {
            if (cp == '(') {
                ++depth;
            } else if (cp == ')' && depth > 0) {
                --depth;
            } else if (depth == 0) {
                kept.push_back(cp);
            }
        }
    } else {
        kept = std::move(cps);
    }

    std::vector<unicode::Codepoint> out;
    out.reserve(kept.size());
    bool pending_space = false;
    for (unicode::Codepoint cp : kept) {
        if (unicode::is_space(cp)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(cp);
    }
    if (out.empty()) return std::nullopt;
    return unicode::encode_utf8(out);
}

} // namespace detail

// Canonical name cleanup: NFC, parenthetical descriptors removed, whitespace
// collapsed, ends trimmed. Case is preserved; identity matching downstream
// folds case separately. Returns nullopt when nothing survives.
inline std::optional<std::string> normalize_name(std::string_view raw) {
    return detail::clean_text(raw, /*strip_parentheticals=*/true);
}

// Comparison key for free-running text (award motivations, answers): NFC,
// whitespace collapse, case fold. Parentheses are kept; they are content here.
inline std::optional<std::string> normalize_free_text(std::string_view raw) {
    auto cleaned = detail::clean_text(raw, /*strip_parentheticals=*/false);
    if (!cleaned) return std::nullopt;
    return unicode::fold_lower(*cleaned);
}

} // namespace nobelgraph
