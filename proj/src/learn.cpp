#include "ebmt/learn.hpp"

#include <cassert>
#include <fstream>

namespace ebmt {

Corpus parse_corpus(std::istream& in) {
    Corpus c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t tab = line.find('\t');
        try {
            if (tab == std::string::npos)
                throw ParseError("missing TAB between the two sides");
            c.examples.push_back({parse_lexical(std::string_view(line).substr(0, tab), Side::L1),
                                  parse_lexical(std::string_view(line).substr(tab + 1), Side::L2)});
        } catch (const std::exception& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return c;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read corpus file '" + path + "'");
    return parse_corpus(in);
}

const char* to_string(SkipReason r) {
    switch (r) {
        case SkipReason::NoMatch: return "no-match";
        case SkipReason::NoSimilarity: return "no-similarity";
        case SkipReason::NoDifferences: return "no-differences";
        case SkipReason::CountMismatch: return "count-mismatch";
        case SkipReason::Unresolvable: return "unresolvable";
    }
    return "?";
}

bool resolve_known(const Difference& d_l1, const Difference& d_l2, const RuleBase& base) {
    return base.contains_fact(d_l1.first, d_l2.first) &&
           base.contains_fact(d_l1.second, d_l2.second);
}

namespace {

// Working form of a match sequence during reduction: similarities stay as
// token runs, differences are progressively replaced by variables.
struct Slot {
    enum Kind { Sim, Diff, Var } kind;
    TokenRun sim;
    Difference diff;
    int var = 0;
};

std::vector<Slot> slots_of(const MatchSequence& m) {
    std::vector<Slot> out;
    for (std::size_t i = 0; i < m.similarities.size(); ++i) {
        out.push_back({Slot::Sim, m.similarities[i], {}, 0});
        if (i < m.differences.size()) out.push_back({Slot::Diff, {}, m.differences[i], 0});
    }
    return out;
}

int diff_count(const std::vector<Slot>& slots) {
    int n = 0;
    for (const auto& s : slots)
        if (s.kind == Slot::Diff) ++n;
    return n;
}

Pattern pattern_of(const std::vector<Slot>& slots) {
    Pattern p;
    for (const auto& s : slots) {
        if (s.kind == Slot::Sim)
            for (const Token& t : s.sim) p.emplace_back(t);
        else if (s.kind == Slot::Var)
            p.emplace_back(VarRef{s.var});
    }
    return p;
}

int nonempty_similarities(const MatchSequence& m) {
    int n = 0;
    for (const auto& s : m.similarities)
        if (!s.empty()) ++n;
    return n;
}

}  // namespace

PairResult learn_pair(const ExamplePair& e1, const ExamplePair& e2, const RuleBase& base) {
    auto m1 = match(e1.l1, e2.l1);
    auto m2 = match(e1.l2, e2.l2);
    if (!m1 || !m2) return {{}, SkipReason::NoMatch};
    if (nonempty_similarities(*m1) == 0 || nonempty_similarities(*m2) == 0)
        return {{}, SkipReason::NoSimilarity};
    if (m1->differences.empty() || m2->differences.empty())
        return {{}, SkipReason::NoDifferences};
    if (m1->differences.size() != m2->differences.size())
        return {{}, SkipReason::CountMismatch};

    auto s1 = slots_of(*m1);
    auto s2 = slots_of(*m2);
    int next_var = 1;

    while (diff_count(s1) > 1) {
        bool replaced = false;
        for (auto& a : s1) {
            if (a.kind != Slot::Diff) continue;
            for (auto& b : s2) {
                if (b.kind != Slot::Diff) continue;
                if (!resolve_known(a.diff, b.diff, base)) continue;
                a = {Slot::Var, {}, {}, next_var};
                b = {Slot::Var, {}, {}, next_var};
                ++next_var;
                replaced = true;
                break;
            }
            if (replaced) break;
        }
        if (!replaced) return {{}, SkipReason::Unresolvable};
    }

    Difference d1, d2;
    for (auto& a : s1)
        if (a.kind == Slot::Diff) {
            d1 = a.diff;
            a = {Slot::Var, {}, {}, next_var};
        }
    for (auto& b : s2)
        if (b.kind == Slot::Diff) {
            d2 = b.diff;
            b = {Slot::Var, {}, {}, next_var};
        }

    Template tmpl = canonicalized({pattern_of(s1), pattern_of(s2)});
    validate_rule(tmpl);  // every emitted template satisfies the template invariants

    PairResult out;
    for (Rule r : {Rule{Fact{d1.first, d2.first}}, Rule{Fact{d1.second, d2.second}},
                   Rule{std::move(tmpl)}}) {
        if (base.contains(r)) continue;
        bool dup = false;
        for (const auto& prev : out.rules)
            if (prev == r) { dup = true; break; }
        if (!dup) out.rules.push_back(std::move(r));
    }
    return out;
}

RuleBase learn_corpus(const Corpus& c, int max_passes, LearnReport* report) {
    if (c.examples.empty()) throw ParseError("empty corpus");
    if (max_passes < 1) throw std::invalid_argument("max_passes must be positive");

    RuleBase base;
    for (const auto& e : c.examples) base.add(Fact{e.l1.tokens, e.l2.tokens});

    LearnReport local;
    LearnReport& rep = report ? *report : local;
    rep.passes.clear();

    for (int pass = 0; pass < max_passes; ++pass) {
        PassStats stats;
        for (std::size_t i = 0; i < c.examples.size(); ++i)
            for (std::size_t j = i + 1; j < c.examples.size(); ++j) {
                auto res = learn_pair(c.examples[i], c.examples[j], base);
                if (res.skipped) {
                    ++stats.skipped[*res.skipped];
                    continue;
                }
                for (auto& r : res.rules)
                    if (base.add(std::move(r)) == RuleBase::AddResult::Added)
                        ++stats.rules_added;
            }
        rep.passes.push_back(stats);
        if (stats.rules_added == 0) break;
    }

    auto it = rep.passes.back().skipped.find(SkipReason::Unresolvable);
    rep.unresolved_pairs = it == rep.passes.back().skipped.end() ? 0 : it->second;
    return base;
}

}  // namespace ebmt
