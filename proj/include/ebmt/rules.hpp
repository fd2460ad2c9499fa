#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>

#include "ebmt/lexrep.hpp"

namespace ebmt {

struct VarRef {
    int index;  // >= 1
    auto operator<=>(const VarRef&) const = default;
};

using PatternItem = std::variant<Token, VarRef>;
using Pattern = std::vector<PatternItem>;

// Variable-free rule pairing an L1 token run with an L2 token run.
struct Fact {
    TokenRun lhs;  // L1
    TokenRun rhs;  // L2
    bool operator==(const Fact&) const = default;
};

// Rule with paired variables: $k on the lhs binds together with $k on the
// rhs. Canonical form numbers lhs variables 1..n left to right.
struct Template {
    Pattern lhs;  // L1
    Pattern rhs;  // L2
    bool operator==(const Template&) const = default;
};

using Rule = std::variant<Fact, Template>;

enum class Direction { L1toL2, L2toL1 };
Side source_side(Direction d);
Side target_side(Direction d);

int terminal_count(const Pattern& p);
int var_count(const Pattern& p);

// Renumbers lhs variables left-to-right from 1 and remaps the rhs to keep
// the pairing. Throws std::invalid_argument when the pairing is broken.
Template canonicalized(Template t);

// Throws std::invalid_argument naming the violated invariant.
void validate_rule(const Rule& r);

// More matched terminals first, then fewer variables.
struct SpecificityKey {
    int terminals;
    int vars;
};
SpecificityKey specificity_key(const Rule& r, Side source);
bool more_specific(const SpecificityKey& a, const SpecificityKey& b);

std::string render_pattern(const Pattern& p);
Pattern parse_pattern(std::string_view text);
std::string render_rule(const Rule& r);  // the rule-file line

// Deduplicated rule collection, iterated most-specific-first. Ties keep
// insertion order, so behavior is deterministic.
class RuleBase {
public:
    enum class AddResult { Added, Duplicate };

    AddResult add(Rule r);
    bool contains(const Rule& r) const;
    bool contains_fact(const TokenRun& l1, const TokenRun& l2) const;
    std::size_t size() const { return entries_.size(); }

    // Rules sorted by specificity of the given source side.
    std::vector<const Rule*> ordered(Side source = Side::L1) const;

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    std::string to_text() const;
    static RuleBase load(std::istream& in);
    static RuleBase load_file(const std::string& path);

    bool operator==(const RuleBase& other) const;

private:
    struct Entry {
        Rule rule;
        std::uint64_t seq;
    };
    std::vector<Entry> entries_;  // insertion order
};

}  // namespace ebmt
