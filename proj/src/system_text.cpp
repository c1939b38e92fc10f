#include "ncalg/system_text.hpp"

#include <sstream>

#include "ncalg/expression.hpp"

namespace ncalg {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ParseError at_line(const ParseError& e, int line) { return ParseError(e.reason(), line, e.column()); }

}  // namespace

ReductionSystem parse_system(std::string_view text) {
    AlphabetPtr alphabet;
    std::vector<unsigned> weights;
    std::vector<Symbol> chain;
    std::vector<Rule> rules;
    NameScope scope;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto words = split_ws(line);
        const std::string& head = words.front();
        if (head == "alphabet") {
            if (alphabet) throw ParseError("alphabet declared twice", line_no, 1);
            try {
                alphabet = Alphabet::make({words.begin() + 1, words.end()});
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no, 1);
            }
            scope.alphabet = alphabet;
            continue;
        }
        if (!alphabet) throw ParseError("expected 'alphabet' declaration first", line_no, 1);
        if (head == "weights") {
            if (words.size() != alphabet->size() + 1) {
                throw ParseError("weights line needs one entry per generator", line_no, 1);
            }
            weights.clear();
            for (std::size_t i = 1; i < words.size(); ++i) {
                try {
                    weights.push_back(static_cast<unsigned>(std::stoul(words[i])));
                } catch (const std::exception&) {
                    throw ParseError("weight '" + words[i] + "' is not a natural number", line_no, 1);
                }
            }
            continue;
        }
        if (head == "chain") {
            chain.clear();
            for (std::size_t i = 1; i < words.size(); ++i) {
                auto s = alphabet->find(words[i]);
                if (!s) throw ParseError("unknown generator '" + words[i] + "' in chain", line_no, 1);
                chain.push_back(*s);
            }
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("expected a rule 'LHS -> expression'", line_no, 1);
        Element lhs, rhs;
        try {
            lhs = parse_element(line.substr(0, arrow), scope);
        } catch (const ParseError& e) {
            throw at_line(e, line_no);
        }
        try {
            rhs = parse_element(line.substr(arrow + 2), scope);
        } catch (const ParseError& e) {
            throw ParseError(e.reason(), line_no, e.column() + static_cast<int>(arrow) + 2);
        }
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
            throw ParseError("rule LHS must be a single word", line_no, 1);
        }
        rules.push_back({lhs.terms().begin()->first, rhs});
    }
    if (!alphabet) throw ParseError("missing 'alphabet' declaration", line_no + 1, 1);
    if (weights.empty()) weights.assign(alphabet->size(), 1);
    try {
        return ReductionSystem(alphabet, std::move(rules), TermOrder(std::move(weights), std::move(chain)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 1);
    }
}

std::string system_to_text(const ReductionSystem& sys) {
    const Alphabet& a = *sys.alphabet();
    std::ostringstream out;
    out << "alphabet";
    for (const auto& g : a.symbols()) out << ' ' << g.name << (g.display.empty() ? "" : "=" + g.display);
    out << "\nweights";
    for (unsigned w : sys.order().weights()) out << ' ' << w;
    out << '\n';
    if (!sys.order().descent_chain().empty()) {
        out << "chain";
        for (Symbol s : sys.order().descent_chain()) out << ' ' << a[s].name;
        out << '\n';
    }
    for (const Rule& r : sys.rules()) out << word_to_text(a, r.lhs) << " -> " << r.rhs.to_text() << '\n';
    return out.str();
}

}  // namespace ncalg
