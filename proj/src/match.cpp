#include "ebmt/match.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebmt {

namespace {

bool run_contains(const TokenRun& run, const Token& t) {
    return std::find(run.begin(), run.end(), t) != run.end();
}

bool in_difference(const Difference& d, const Token& t) {
    return run_contains(d.first, t) || run_contains(d.second, t);
}

bool disjoint(const TokenRun& x, const TokenRun& y) {
    for (const Token& t : x)
        if (run_contains(y, t)) return false;
    return true;
}

// Backtracking enumeration of constrained decompositions, pruned by the
// disjointness and earlier-difference rules. Stops once `limit` distinct
// decompositions are found.
struct Search {
    const TokenRun& a;
    const TokenRun& b;
    std::size_t limit;
    std::vector<MatchSequence> found;
    MatchSequence cur;
    bool stopped = false;

    void record() {
        for (const auto& m : found)
            if (m == cur) return;
        found.push_back(cur);
        if (found.size() >= limit) stopped = true;
    }

    void similarity(std::size_t i, std::size_t j, bool first) {
        if (stopped) return;
        std::size_t max_len = 0;
        while (i + max_len < a.size() && j + max_len < b.size() &&
               a[i + max_len] == b[j + max_len]) {
            // a similarity token may not occur in any earlier difference
            const Token& t = a[i + max_len];
            bool tainted = false;
            for (const auto& d : cur.differences)
                if (in_difference(d, t)) { tainted = true; break; }
            if (tainted) break;
            ++max_len;
        }
        for (std::size_t len = 0; len <= max_len && !stopped; ++len) {
            cur.similarities.emplace_back(a.begin() + i, a.begin() + i + len);
            if (i + len == a.size() && j + len == b.size()) {
                if (!cur.differences.empty()) record();
            } else if (len > 0 || first) {
                // an empty interior similarity is not allowed
                difference(i + len, j + len);
            }
            cur.similarities.pop_back();
        }
    }

    void difference(std::size_t i, std::size_t j) {
        for (std::size_t la = 1; i + la <= a.size() && !stopped; ++la)
            for (std::size_t lb = 1; j + lb <= b.size() && !stopped; ++lb) {
                TokenRun d1(a.begin() + i, a.begin() + i + la);
                TokenRun d2(b.begin() + j, b.begin() + j + lb);
                if (!disjoint(d1, d2)) continue;
                cur.differences.push_back({std::move(d1), std::move(d2)});
                similarity(i + la, j + lb, false);
                cur.differences.pop_back();
            }
    }
};

}  // namespace

std::optional<MatchSequence> match(const Sentence& a, const Sentence& b) {
    if (a.side != b.side) throw std::invalid_argument("cross-language match");
    if (a.tokens == b.tokens) return MatchSequence{{a.tokens}, {}};
    Search s{a.tokens, b.tokens, 2, {}, {}};
    s.similarity(0, 0, true);
    if (s.found.size() == 1) return s.found.front();
    return std::nullopt;
}

std::string render_match(const MatchSequence& m) {
    std::string out;
    auto emit = [&out](const std::string& part) {
        if (!out.empty()) out += " · ";
        out += part;
    };
    for (std::size_t i = 0; i < m.similarities.size(); ++i) {
        if (!m.similarities[i].empty())
            emit("[" + render_run(m.similarities[i]) + "]");
        if (i < m.differences.size())
            emit(render_run(m.differences[i].first) + " : " +
                 render_run(m.differences[i].second));
    }
    return out;
}

}  // namespace ebmt
