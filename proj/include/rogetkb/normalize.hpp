#pragma once

#include <string>
#include <string_view>

namespace rogetkb {

/// Canonical string identity shared by the thesaurus, the index and the
/// synset resource: ASCII lowercase, trimmed, internal whitespace runs
/// collapsed to one space. Hyphens, apostrophes and non-ASCII bytes are kept.
std::string normalize(std::string_view text);

/// Head-name form used for lexicon matching when glosses are stripped:
/// everything from the first ':' on is dropped, then normalized.
std::string strip_gloss(std::string_view head_name);

/// Trims and collapses whitespace without changing case.
std::string tidy(std::string_view text);

}  // namespace rogetkb
