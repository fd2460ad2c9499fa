#pragma once

#include <map>
#include <optional>

#include "ebmt/match.hpp"
#include "ebmt/rules.hpp"

namespace ebmt {

struct Corpus {
    std::vector<ExamplePair> examples;
};

// Lines of `L1 lexical text` TAB `L2 lexical text`; '#'-comments and blank
// lines ignored. Errors carry the line number.
Corpus parse_corpus(std::istream& in);
Corpus load_corpus(const std::string& path);

enum class SkipReason { NoMatch, NoSimilarity, NoDifferences, CountMismatch, Unresolvable };
const char* to_string(SkipReason r);

struct PairResult {
    std::vector<Rule> rules;  // empty when skipped
    std::optional<SkipReason> skipped;
};

// True iff both component facts (aligned by example index) are in the base.
bool resolve_known(const Difference& d_l1, const Difference& d_l2, const RuleBase& base);

// Rule learning for one example pair: matches both sides, reduces the
// differences to one by resolving known correspondences against the base,
// then emits two facts and one template. Returns only rules absent from the
// base.
PairResult learn_pair(const ExamplePair& e1, const ExamplePair& e2, const RuleBase& base);

struct PassStats {
    int rules_added = 0;
    std::map<SkipReason, int> skipped;
};

struct LearnReport {
    std::vector<PassStats> passes;
    int unresolved_pairs = 0;  // unresolvable pairs in the final pass
};

// Seeds the base with one fact per example, then sweeps all example pairs
// until a pass adds nothing or max_passes is reached.
RuleBase learn_corpus(const Corpus& c, int max_passes = 10, LearnReport* report = nullptr);

}  // namespace ebmt
