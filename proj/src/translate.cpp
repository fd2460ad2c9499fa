#include "ebmt/translate.hpp"

#include <functional>
#include <optional>

namespace ebmt {

UntranslatableError::UntranslatableError(TokenRun run)
    : std::runtime_error("untranslatable: " + render_run(run)), run_(std::move(run)) {}

std::vector<Binding> pattern_match(const Pattern& pattern, const TokenRun& input) {
    std::vector<Binding> out;
    Binding cur;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pi, std::size_t ii) {
        if (pi == pattern.size()) {
            if (ii == input.size()) out.push_back(cur);
            return;
        }
        if (const auto* t = std::get_if<Token>(&pattern[pi])) {
            if (ii < input.size() && input[ii] == *t) go(pi + 1, ii + 1);
            return;
        }
        int v = std::get<VarRef>(pattern[pi]).index;
        for (std::size_t len = 1; ii + len <= input.size(); ++len) {
            cur[v] = TokenRun(input.begin() + ii, input.begin() + ii + len);
            go(pi + 1, ii + len);
            cur.erase(v);
        }
    };
    go(0, 0);
    return out;
}

namespace {

struct Ctx {
    Direction dir;
    std::vector<const Rule*> order;   // source-side specificity order
    std::optional<TokenRun> failing;  // first run that no rule could translate
};

std::optional<TranslationResult> translate_run(const TokenRun& input, Ctx& ctx);

// Appends up to max_results applications of one template, bindings in
// leftmost-shortest order. Bound runs are translated first-result inside the
// recursion.
void apply_template(const Template& t, const TokenRun& input, Ctx& ctx,
                    std::size_t max_results, std::vector<TranslationResult>& out) {
    Side src = source_side(ctx.dir);
    const Pattern& from = src == Side::L1 ? t.lhs : t.rhs;
    const Pattern& to = src == Side::L1 ? t.rhs : t.lhs;
    for (const Binding& binding : pattern_match(from, input)) {
        if (out.size() >= max_results) return;
        std::map<int, TranslationResult> subs;
        bool ok = true;
        for (const auto& [var, run] : binding) {
            auto sub = translate_run(run, ctx);
            if (!sub) {
                ok = false;
                break;
            }
            subs.emplace(var, std::move(*sub));
        }
        if (!ok) continue;
        TokenRun result;
        for (const auto& item : to) {
            if (const auto* tok = std::get_if<Token>(&item)) {
                result.push_back(*tok);
            } else {
                const TokenRun& sub = subs.at(std::get<VarRef>(item).index).output.tokens;
                result.insert(result.end(), sub.begin(), sub.end());
            }
        }
        Trace trace{render_rule(t), binding, {}};
        for (auto& [var, sub] : subs) trace.children.push_back(std::move(sub.trace));
        out.push_back({{target_side(ctx.dir), std::move(result)}, std::move(trace)});
    }
}

// Scans rules in order and appends applications to `out`: a fact applies iff
// its source side equals the whole run, a template once per binding.
void scan_rules(const TokenRun& input, Ctx& ctx, std::size_t max_results,
                std::vector<TranslationResult>& out) {
    Side src = source_side(ctx.dir);
    Side tgt = target_side(ctx.dir);
    for (const Rule* r : ctx.order) {
        if (out.size() >= max_results) return;
        if (const auto* f = std::get_if<Fact>(r)) {
            const TokenRun& from = src == Side::L1 ? f->lhs : f->rhs;
            const TokenRun& to = src == Side::L1 ? f->rhs : f->lhs;
            if (from == input)
                out.push_back({{tgt, to}, Trace{render_rule(*r), {}, {}}});
        } else {
            apply_template(std::get<Template>(*r), input, ctx, max_results, out);
        }
    }
}

// First successful translation of a bare run. Terminates without a depth
// limit: every template keeps at least one terminal per side, so bound runs
// are strictly shorter than their input.
std::optional<TranslationResult> translate_run(const TokenRun& input, Ctx& ctx) {
    std::vector<TranslationResult> out;
    scan_rules(input, ctx, 1, out);
    if (!out.empty()) return std::move(out.front());
    if (!ctx.failing) ctx.failing = input;
    return std::nullopt;
}

}  // namespace

std::vector<TranslationResult> translate(const Sentence& input, Direction dir,
                                         const RuleBase& base, Mode mode) {
    if (input.tokens.empty()) throw std::invalid_argument("empty input sentence");
    if (input.side != source_side(dir))
        throw std::invalid_argument("input side does not match translation direction");

    Ctx ctx{dir, base.ordered(source_side(dir)), std::nullopt};
    std::vector<TranslationResult> results;
    scan_rules(input.tokens, ctx, mode == Mode::First ? 1 : SIZE_MAX, results);
    if (results.empty()) throw UntranslatableError(ctx.failing.value_or(input.tokens));
    return results;
}

namespace {

void render_trace_into(const Trace& t, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += t.rule;
    if (!t.binding.empty()) {
        out += "  {";
        bool first = true;
        for (const auto& [var, run] : t.binding) {
            if (!first) out += ", ";
            first = false;
            out += '$';
            out += std::to_string(var);
            out += " = ";
            out += render_run(run);
        }
        out += '}';
    }
    out += '\n';
    for (const Trace& c : t.children) render_trace_into(c, depth + 1, out);
}

}  // namespace

std::string render_trace(const Trace& t) {
    std::string out;
    render_trace_into(t, 0, out);
    return out;
}

}  // namespace ebmt
