#pragma once

#include <map>

#include "ebmt/rules.hpp"

namespace ebmt {

// Variable index -> bound non-empty token run.
using Binding = std::map<int, TokenRun>;

// All ways to bind each variable to a non-empty contiguous run so that
// terminals align exactly and concatenation reproduces the input. The
// leftmost variable takes the shortest runs first.
std::vector<Binding> pattern_match(const Pattern& pattern, const TokenRun& input);

struct Trace {
    std::string rule;  // rule-file line of the applied rule
    Binding binding;   // empty for facts
    std::vector<Trace> children;
};

struct TranslationResult {
    Sentence output;
    Trace trace;
};

class UntranslatableError : public std::runtime_error {
public:
    explicit UntranslatableError(TokenRun run);
    const TokenRun& run() const { return run_; }

private:
    TokenRun run_;
};

enum class Mode { First, All };

// Applies rules most-specific-first on the source side. Facts rewrite the
// whole input; templates translate each bound run recursively (first-result
// inside the recursion). Throws UntranslatableError, carrying the failing
// run, when nothing applies.
std::vector<TranslationResult> translate(const Sentence& input, Direction dir,
                                         const RuleBase& base, Mode mode);

std::string render_trace(const Trace& t);

}  // namespace ebmt
