#include "ebmt/lexrep.hpp"

namespace ebmt {

namespace {

std::string fold(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

}  // namespace

Token stem(std::string text) { return Token{TokenKind::Stem, std::move(text)}; }

Token morpheme(std::string text) {
    if (text.empty() || text[0] != '+') text.insert(text.begin(), '+');
    return Token{TokenKind::Morpheme, std::move(text)};
}

void append_word_tokens(std::string_view word, TokenRun& out) {
    if (word.empty()) return;
    if (word.find("++") != std::string_view::npos || word.back() == '+')
        throw ParseError("malformed morpheme in word '" + std::string(word) + "'");
    std::size_t plus = word.find('+');
    if (plus != 0)
        out.push_back(stem(fold(word.substr(0, plus))));
    while (plus != std::string_view::npos) {
        std::size_t next = word.find('+', plus + 1);
        std::size_t end = next == std::string_view::npos ? word.size() : next;
        out.push_back(Token{TokenKind::Morpheme, fold(word.substr(plus, end - plus))});
        plus = next;
    }
}

Sentence parse_lexical(std::string_view text, Side side) {
    Sentence s{side, {}};
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        if (i > start) append_word_tokens(text.substr(start, i - start), s.tokens);
    }
    if (s.tokens.empty()) throw ParseError("empty sentence");
    return s;
}

std::string render_run(const TokenRun& run) {
    std::string out;
    for (std::size_t i = 0; i < run.size(); ++i) {
        // morphemes attach to the preceding word; a leading morpheme starts the string
        if (i > 0 && run[i].kind == TokenKind::Stem) out += ' ';
        out += run[i].text;
    }
    return out;
}

std::string render_lexical(const Sentence& s) { return render_run(s.tokens); }

}  // namespace ebmt
