#pragma once

// Test-only helpers: a brute-force match oracle kept independent of the
// library's backtracking matcher, plus random generators shared by the
// property tests.

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ebmt/match.hpp"
#include "ebmt/rules.hpp"

namespace ebmt::testing {

inline void enum_parts(const TokenRun& s, int parts_total, int idx, std::size_t pos,
                       std::vector<TokenRun>& cur,
                       std::vector<std::vector<TokenRun>>& out) {
    if (idx == parts_total) {
        if (pos == s.size()) out.push_back(cur);
        return;
    }
    bool is_diff = idx % 2 == 1;
    bool interior_sim = !is_diff && idx != 0 && idx != parts_total - 1;
    std::size_t min_len = (is_diff || interior_sim) ? 1 : 0;
    for (std::size_t len = min_len; pos + len <= s.size(); ++len) {
        cur.emplace_back(s.begin() + pos, s.begin() + pos + len);
        enum_parts(s, parts_total, idx + 1, pos + len, cur, out);
        cur.pop_back();
    }
}

inline bool oracle_valid(const MatchSequence& m) {
    for (const auto& d : m.differences) {
        if (d.first.empty() || d.second.empty()) return false;
        std::set<Token> left(d.first.begin(), d.first.end());
        for (const Token& t : d.second)
            if (left.count(t)) return false;
    }
    // similarity S_i (0-based) has i differences before it
    for (std::size_t i = 0; i < m.similarities.size(); ++i)
        for (const Token& t : m.similarities[i])
            for (std::size_t k = 0; k < i && k < m.differences.size(); ++k) {
                const Difference& d = m.differences[k];
                if (std::count(d.first.begin(), d.first.end(), t) ||
                    std::count(d.second.begin(), d.second.end(), t))
                    return false;
            }
    return true;
}

// Exhaustive enumeration of all constraint-satisfying decompositions over
// all alternating segmentations of both sentences.
inline std::vector<MatchSequence> match_oracle(const Sentence& a, const Sentence& b) {
    if (a.side != b.side) throw std::invalid_argument("cross-language match");
    if (a.tokens.size() + b.tokens.size() > 16)
        throw std::invalid_argument("oracle input too large");
    if (a.tokens == b.tokens) return {MatchSequence{{a.tokens}, {}}};

    std::vector<MatchSequence> found;
    std::size_t maxn = std::min(a.tokens.size(), b.tokens.size());
    for (std::size_t n = 1; n <= maxn; ++n) {
        int parts = static_cast<int>(2 * n + 1);
        std::vector<std::vector<TokenRun>> pa, pb;
        std::vector<TokenRun> cur;
        enum_parts(a.tokens, parts, 0, 0, cur, pa);
        enum_parts(b.tokens, parts, 0, 0, cur, pb);
        for (const auto& xa : pa)
            for (const auto& xb : pb) {
                bool sims_equal = true;
                for (int i = 0; i < parts; i += 2)
                    if (xa[static_cast<std::size_t>(i)] != xb[static_cast<std::size_t>(i)]) {
                        sims_equal = false;
                        break;
                    }
                if (!sims_equal) continue;
                MatchSequence m;
                for (int i = 0; i < parts; ++i) {
                    auto idx = static_cast<std::size_t>(i);
                    if (i % 2 == 0)
                        m.similarities.push_back(xa[idx]);
                    else
                        m.differences.push_back({xa[idx], xb[idx]});
                }
                if (!oracle_valid(m)) continue;
                if (std::find(found.begin(), found.end(), m) == found.end())
                    found.push_back(m);
            }
    }
    return found;
}

inline Token symbol_token(int id) {
    switch (id % 4) {
        case 0: return stem("a");
        case 1: return stem("b");
        case 2: return morpheme("+m");
        default: return morpheme("+n");
    }
}

inline Sentence random_sentence(std::mt19937& rng, Side side, int max_len, int alphabet) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
    Sentence s{side, {}};
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) s.tokens.push_back(symbol_token(sym_dist(rng)));
    return s;
}

inline TokenRun random_run(std::mt19937& rng, int max_len, const std::vector<Token>& pool) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    TokenRun run;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) run.push_back(pool[pick(rng)]);
    return run;
}

inline std::vector<Token> l1_pool() {
    return {stem("a"), stem("b"), stem("c"), morpheme("+m"), morpheme("+n")};
}

inline std::vector<Token> l2_pool() {
    return {stem("x"), stem("y"), stem("z"), morpheme("+p"), morpheme("+q")};
}

// A template satisfying all learned-template invariants: 1..3 variables,
// separated by non-empty terminal runs, the rhs pairing a random permutation.
inline Template random_template(std::mt19937& rng) {
    std::uniform_int_distribution<int> nvars_dist(1, 3);
    int nvars = nvars_dist(rng);
    std::vector<int> order(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);

    auto build = [&rng](const std::vector<int>& vars, const std::vector<Token>& pool) {
        std::uniform_int_distribution<int> coin(0, 1);
        Pattern p;
        auto terminals = [&](bool required) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            int n = (required ? 1 : 0) + coin(rng);
            for (int i = 0; i < n; ++i) p.emplace_back(pool[pick(rng)]);
        };
        terminals(false);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i > 0) terminals(true);
            p.emplace_back(VarRef{vars[i]});
        }
        terminals(false);
        if (terminal_count(p) == 0) p.emplace_back(pool.front());
        return p;
    };

    std::vector<int> lhs_vars(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) lhs_vars[static_cast<std::size_t>(i)] = i + 1;
    return canonicalized({build(lhs_vars, l1_pool()), build(order, l2_pool())});
}

inline RuleBase random_base(std::mt19937& rng, int facts, int templates) {
    RuleBase base;
    for (int i = 0; i < facts; ++i)
        base.add(Fact{random_run(rng, 3, l1_pool()), random_run(rng, 3, l2_pool())});
    for (int i = 0; i < templates; ++i) base.add(random_template(rng));
    return base;
}

}  // namespace ebmt::testing
