#pragma once

#include <optional>

#include "ebmt/lexrep.hpp"

namespace ebmt {

// A pair of non-empty, token-disjoint runs occupying the same slot of a
// decomposition; `first` comes from the first sentence, `second` from the
// second.
struct Difference {
    TokenRun first;
    TokenRun second;
    bool operator==(const Difference&) const = default;
};

// Alternating decomposition S1 D1 S2 ... Dn Sn+1 of two same-language
// sentences. similarities.size() == differences.size() + 1. The outer
// similarities may be empty, interior ones never are, and no similarity
// token occurs in an earlier difference.
struct MatchSequence {
    std::vector<TokenRun> similarities;
    std::vector<Difference> differences;
    bool operator==(const MatchSequence&) const = default;
};

// The unique constraint-satisfying decomposition of a and b, or nullopt when
// zero or several exist. Identical sentences yield the zero-difference
// sequence. Throws std::invalid_argument on mismatched sides.
std::optional<MatchSequence> match(const Sentence& a, const Sentence& b);

// Debug view: `[it is a] · book : pencil`
std::string render_match(const MatchSequence& m);

}  // namespace ebmt
