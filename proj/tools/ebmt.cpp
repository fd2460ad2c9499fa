#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebmt/learn.hpp"
#include "ebmt/match.hpp"
#include "ebmt/translate.hpp"

namespace {

using namespace ebmt;

// Exit codes: 0 success, 1 usage/IO/parse error, 2 untranslatable.
constexpr int kExitError = 1;
constexpr int kExitUntranslatable = 2;

Direction parse_direction(const std::string& s) {
    if (s == "l1l2") return Direction::L1toL2;
    if (s == "l2l1") return Direction::L2toL1;
    throw ParseError("direction must be l1l2 or l2l1");
}

Side parse_side(const std::string& s) {
    if (s == "l1") return Side::L1;
    if (s == "l2") return Side::L2;
    throw ParseError("side must be l1 or l2");
}

int cmd_learn(const std::string& corpus_path, const std::string& out_path, int max_passes) {
    Corpus corpus = load_corpus(corpus_path);
    LearnReport report;
    RuleBase base = learn_corpus(corpus, max_passes, &report);
    base.save_file(out_path);
    for (std::size_t p = 0; p < report.passes.size(); ++p) {
        const PassStats& stats = report.passes[p];
        std::cout << "pass " << p + 1 << ": +" << stats.rules_added << " rules";
        if (!stats.skipped.empty()) {
            std::cout << " (skipped:";
            for (const auto& [reason, count] : stats.skipped)
                std::cout << ' ' << to_string(reason) << '=' << count;
            std::cout << ')';
        }
        std::cout << '\n';
    }
    std::cout << "unresolved pairs: " << report.unresolved_pairs << '\n';
    std::cout << "wrote " << base.size() << " rules to " << out_path << '\n';
    return 0;
}

int cmd_translate(const std::string& rules_path, const std::string& dir_text, bool all,
                  bool trace, const std::string& sentence) {
    RuleBase base = RuleBase::load_file(rules_path);
    Direction dir = parse_direction(dir_text);
    Sentence input = parse_lexical(sentence, source_side(dir));
    auto results = translate(input, dir, base, all ? Mode::All : Mode::First);
    for (const auto& res : results) {
        std::cout << render_lexical(res.output) << '\n';
        if (trace) std::cout << render_trace(res.trace);
    }
    return 0;
}

int cmd_match(const std::string& side_text, const std::string& a, const std::string& b) {
    Side side = parse_side(side_text);
    auto m = match(parse_lexical(a, side), parse_lexical(b, side));
    if (!m) {
        std::cout << "no match\n";
        return 0;
    }
    std::cout << render_match(*m) << '\n';
    return 0;
}

int cmd_inspect(const std::string& rules_path) {
    RuleBase base = RuleBase::load_file(rules_path);
    std::size_t i = 0;
    for (const Rule* r : base.ordered(Side::L1)) {
        SpecificityKey l1 = specificity_key(*r, Side::L1);
        SpecificityKey l2 = specificity_key(*r, Side::L2);
        std::cout << ++i << ". " << render_rule(*r) << "   [l1 " << l1.terminals << "t/"
                  << l1.vars << "v, l2 " << l2.terminals << "t/" << l2.vars << "v]\n";
    }
    std::cout << i << " rules\n";
    return 0;
}

int cmd_repl(const std::string& rules_path) {
    RuleBase base = RuleBase::load_file(rules_path);
    Direction dir = Direction::L1toL2;
    bool all = false;
    bool trace = false;
    std::cout << "loaded " << base.size() << " rules; :dir l1l2|l2l1, :all, :trace, :quit\n";
    std::string line;
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        try {
            if (line == ":quit") break;
            if (line == ":all") {
                all = !all;
                std::cout << "all results: " << (all ? "on" : "off") << '\n';
            } else if (line == ":trace") {
                trace = !trace;
                std::cout << "trace: " << (trace ? "on" : "off") << '\n';
            } else if (line.rfind(":dir ", 0) == 0) {
                dir = parse_direction(line.substr(5));
                std::cout << "direction: " << line.substr(5) << '\n';
            } else if (line.find_first_not_of(" \t") == std::string::npos) {
                continue;
            } else {
                Sentence input = parse_lexical(line, source_side(dir));
                for (const auto& res : translate(input, dir, base, all ? Mode::All : Mode::First)) {
                    std::cout << render_lexical(res.output) << '\n';
                    if (trace) std::cout << render_trace(res.trace);
                }
            }
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bidirectional translation-rule learner and translator"};
    app.require_subcommand(1);

    std::string corpus_path, rules_path, out_path, dir_text = "l1l2", side_text = "l1";
    std::string sentence, sentence_b;
    int max_passes = 10;
    bool all = false, trace = false;

    CLI::App* learn = app.add_subcommand("learn", "learn rules from a corpus");
    learn->add_option("--corpus", corpus_path, "corpus file (L1 TAB L2 per line)")->required();
    learn->add_option("--out", out_path, "output rule file")->required();
    learn->add_option("--max-passes", max_passes, "fixpoint pass limit")
        ->check(CLI::PositiveNumber);

    CLI::App* tr = app.add_subcommand("translate", "translate one sentence");
    tr->add_option("--rules", rules_path, "rule file")->required();
    tr->add_option("--dir", dir_text, "l1l2 or l2l1")->required();
    tr->add_flag("--all", all, "print every translation, not just the first");
    tr->add_flag("--trace", trace, "print the rule application tree");
    tr->add_option("sentence", sentence, "lexical-level sentence")->required();

    CLI::App* mt = app.add_subcommand("match", "show the match sequence of two sentences");
    mt->add_option("--side", side_text, "l1 or l2")->required();
    mt->add_option("a", sentence, "first sentence")->required();
    mt->add_option("b", sentence_b, "second sentence")->required();

    CLI::App* insp = app.add_subcommand("inspect", "pretty-print a rule file in order");
    insp->add_option("--rules", rules_path, "rule file")->required();

    CLI::App* repl = app.add_subcommand("repl", "interactive translation loop");
    repl->add_option("--rules", rules_path, "rule file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (learn->parsed()) return cmd_learn(corpus_path, out_path, max_passes);
        if (tr->parsed()) return cmd_translate(rules_path, dir_text, all, trace, sentence);
        if (mt->parsed()) return cmd_match(side_text, sentence, sentence_b);
        if (insp->parsed()) return cmd_inspect(rules_path);
        if (repl->parsed()) return cmd_repl(rules_path);
    } catch (const ebmt::UntranslatableError& e) {
        std::cerr << e.what() << '\n';
        return kExitUntranslatable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
