#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ebmt {

enum class TokenKind { Stem, Morpheme };
enum class Side { L1, L2 };

// A stem (`book`) or a morpheme marker (`+past`, leading '+' included).
struct Token {
    TokenKind kind;
    std::string text;
    auto operator<=>(const Token&) const = default;
};

using TokenRun = std::vector<Token>;

struct Sentence {
    Side side;
    TokenRun tokens;
    bool operator==(const Sentence&) const = default;
};

struct ExamplePair {
    Sentence l1;  // side L1
    Sentence l2;  // side L2
    bool operator==(const ExamplePair&) const = default;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Token stem(std::string text);
Token morpheme(std::string text);

// Splits one whitespace-free word at every '+' and appends the resulting
// tokens (optional leading stem, then morphemes). Case-folds ASCII letters.
void append_word_tokens(std::string_view word, TokenRun& out);

// Lexical-level text: words separated by whitespace, '+' introduces a
// morpheme within a word. All token text is folded to lowercase.
Sentence parse_lexical(std::string_view text, Side side);

std::string render_run(const TokenRun& run);
std::string render_lexical(const Sentence& s);

}  // namespace ebmt
