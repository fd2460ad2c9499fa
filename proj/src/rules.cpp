#include "ebmt/rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ebmt {

Side source_side(Direction d) { return d == Direction::L1toL2 ? Side::L1 : Side::L2; }
Side target_side(Direction d) { return d == Direction::L1toL2 ? Side::L2 : Side::L1; }

int terminal_count(const Pattern& p) {
    int n = 0;
    for (const auto& item : p)
        if (std::holds_alternative<Token>(item)) ++n;
    return n;
}

int var_count(const Pattern& p) {
    return static_cast<int>(p.size()) - terminal_count(p);
}

Template canonicalized(Template t) {
    std::map<int, int> remap;
    int next = 1;
    for (auto& item : t.lhs)
        if (auto* v = std::get_if<VarRef>(&item)) {
            auto [it, fresh] = remap.try_emplace(v->index, next);
            if (fresh) ++next;
            v->index = it->second;
        }
    for (auto& item : t.rhs)
        if (auto* v = std::get_if<VarRef>(&item)) {
            auto it = remap.find(v->index);
            if (it == remap.end())
                throw std::invalid_argument("broken pairing: rhs variable $" +
                                            std::to_string(v->index) + " has no lhs partner");
            v->index = it->second;
        }
    return t;
}

namespace {

void validate_pattern(const Pattern& p, const char* side_name) {
    std::string side(side_name);
    if (p.empty()) throw std::invalid_argument("empty " + side + " pattern");
    if (terminal_count(p) == 0)
        throw std::invalid_argument("no terminals in " + side + " pattern");
    std::set<int> seen;
    bool prev_var = false;
    for (const auto& item : p) {
        if (const auto* v = std::get_if<VarRef>(&item)) {
            if (v->index < 1)
                throw std::invalid_argument("non-positive variable index in " + side + " pattern");
            if (prev_var)
                throw std::invalid_argument("adjacent variables in " + side + " pattern");
            if (!seen.insert(v->index).second)
                throw std::invalid_argument("repeated variable $" + std::to_string(v->index) +
                                            " in " + side + " pattern");
            prev_var = true;
        } else {
            prev_var = false;
        }
    }
}

std::set<int> var_set(const Pattern& p) {
    std::set<int> out;
    for (const auto& item : p)
        if (const auto* v = std::get_if<VarRef>(&item)) out.insert(v->index);
    return out;
}

}  // namespace

void validate_rule(const Rule& r) {
    if (const auto* f = std::get_if<Fact>(&r)) {
        if (f->lhs.empty() || f->rhs.empty())
            throw std::invalid_argument("empty side in fact");
        return;
    }
    const Template& t = std::get<Template>(r);
    validate_pattern(t.lhs, "lhs");
    validate_pattern(t.rhs, "rhs");
    if (var_set(t.lhs) != var_set(t.rhs))
        throw std::invalid_argument("broken pairing: lhs and rhs variables differ");
}

SpecificityKey specificity_key(const Rule& r, Side source) {
    if (const auto* f = std::get_if<Fact>(&r)) {
        const TokenRun& run = source == Side::L1 ? f->lhs : f->rhs;
        return {static_cast<int>(run.size()), 0};
    }
    const Template& t = std::get<Template>(r);
    const Pattern& p = source == Side::L1 ? t.lhs : t.rhs;
    return {terminal_count(p), var_count(p)};
}

bool more_specific(const SpecificityKey& a, const SpecificityKey& b) {
    if (a.terminals != b.terminals) return a.terminals > b.terminals;
    return a.vars < b.vars;
}

std::string render_pattern(const Pattern& p) {
    std::string out;
    bool prev_terminal = false;
    for (const auto& item : p) {
        if (const auto* t = std::get_if<Token>(&item)) {
            bool attach = t->kind == TokenKind::Morpheme && prev_terminal;
            if (!out.empty() && !attach) out += ' ';
            out += t->text;
            prev_terminal = true;
        } else {
            if (!out.empty()) out += ' ';
            out += '$';
            out += std::to_string(std::get<VarRef>(item).index);
            prev_terminal = false;
        }
    }
    return out;
}

Pattern parse_pattern(std::string_view text) {
    Pattern out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        if (i == start) continue;
        std::string_view word = text.substr(start, i - start);
        if (word[0] == '$') {
            std::size_t k = 1;
            while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
            if (k == 1)
                throw ParseError("malformed variable '" + std::string(word) + "'");
            out.push_back(VarRef{std::stoi(std::string(word.substr(1, k - 1)))});
            if (k < word.size()) {
                // morphemes may be written attached to a variable: $1+past
                if (word[k] != '+')
                    throw ParseError("malformed variable '" + std::string(word) + "'");
                TokenRun rest;
                append_word_tokens(word.substr(k), rest);
                for (auto& tok : rest) out.emplace_back(std::move(tok));
            }
        } else {
            TokenRun toks;
            append_word_tokens(word, toks);
            for (auto& tok : toks) out.emplace_back(std::move(tok));
        }
    }
    if (out.empty()) throw ParseError("empty pattern");
    return out;
}

std::string render_rule(const Rule& r) {
    if (const auto* f = std::get_if<Fact>(&r))
        return "fact: " + render_run(f->lhs) + " ||| " + render_run(f->rhs);
    const Template& t = std::get<Template>(r);
    return "tmpl: " + render_pattern(t.lhs) + " ||| " + render_pattern(t.rhs);
}

RuleBase::AddResult RuleBase::add(Rule r) {
    validate_rule(r);
    if (auto* t = std::get_if<Template>(&r)) *t = canonicalized(std::move(*t));
    if (contains(r)) return AddResult::Duplicate;
    entries_.push_back({std::move(r), entries_.size()});
    return AddResult::Added;
}

bool RuleBase::contains(const Rule& r) const {
    for (const auto& e : entries_)
        if (e.rule == r) return true;
    return false;
}

bool RuleBase::contains_fact(const TokenRun& l1, const TokenRun& l2) const {
    for (const auto& e : entries_)
        if (const auto* f = std::get_if<Fact>(&e.rule))
            if (f->lhs == l1 && f->rhs == l2) return true;
    return false;
}

std::vector<const Rule*> RuleBase::ordered(Side source) const {
    std::vector<const Entry*> order;
    order.reserve(entries_.size());
    for (const auto& e : entries_) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [source](const Entry* x, const Entry* y) {
        return more_specific(specificity_key(x->rule, source),
                             specificity_key(y->rule, source));
    });
    std::vector<const Rule*> out;
    out.reserve(order.size());
    for (const Entry* e : order) out.push_back(&e->rule);
    return out;
}

void RuleBase::save(std::ostream& out) const {
    for (const Rule* r : ordered(Side::L1)) out << render_rule(*r) << '\n';
}

void RuleBase::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write rule file '" + path + "'");
    save(out);
}

std::string RuleBase::to_text() const {
    std::ostringstream out;
    save(out);
    return out.str();
}

RuleBase RuleBase::load(std::istream& in) {
    RuleBase base;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        try {
            std::string_view view = body;
            bool is_fact = view.starts_with("fact: ");
            bool is_tmpl = view.starts_with("tmpl: ");
            if (!is_fact && !is_tmpl)
                throw ParseError("expected 'fact:' or 'tmpl:'");
            view.remove_prefix(6);
            std::size_t sep = view.find(" ||| ");
            if (sep == std::string_view::npos)
                throw ParseError("missing ' ||| ' separator");
            std::string_view left = view.substr(0, sep);
            std::string_view right = view.substr(sep + 5);
            Rule rule = is_fact
                ? Rule{Fact{parse_lexical(left, Side::L1).tokens,
                            parse_lexical(right, Side::L2).tokens}}
                : Rule{Template{parse_pattern(left), parse_pattern(right)}};
            base.add(std::move(rule));
        } catch (const std::exception& e) {
            throw ParseError("rule file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return base;
}

RuleBase RuleBase::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read rule file '" + path + "'");
    return load(in);
}

bool RuleBase::operator==(const RuleBase& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto a = ordered(Side::L1);
    auto b = other.ordered(Side::L1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(*a[i] == *b[i])) return false;
    return true;
}

}  // namespace ebmt
