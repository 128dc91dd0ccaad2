#include "coxjsj/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "coxjsj/errors.hpp"

namespace coxjsj {
namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_label(const Token& token, int line_no) {
    if (token.text == "inf") return 0;
    int value = 0;
    for (char c : token.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InputError("edge label must be an integer >= 2 or 'inf', got '" + token.text +
                                 "'",
                             line_no, token.column);
        }
        if (value > 100000000) {
            throw InputError("edge label out of range: '" + token.text + "'", line_no,
                             token.column);
        }
        value = value * 10 + (c - '0');
    }
    if (value < 2) {
        throw InputError("edge label must be an integer >= 2 or 'inf', got '" + token.text + "'",
                         line_no, token.column);
    }
    return value;
}

}  // namespace

CoxeterDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::optional<CoxeterDiagram> diagram;
    bool saw_edges_header = false;
    // Pairs declared unrelated with "inf", to reject later finite labels.
    std::map<std::pair<int, int>, int> declared_infinite;

    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!diagram) {
            if (tokens[0].text == "generators:") {
                std::vector<std::string> names;
                for (std::size_t i = 1; i < tokens.size(); ++i) names.push_back(tokens[i].text);
                if (names.empty()) {
                    throw InputError("generators line lists no generators", line_no,
                                     tokens[0].column);
                }
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    for (std::size_t j = 1; j < i; ++j) {
                        if (tokens[i].text == tokens[j].text) {
                            throw InputError("duplicate generator name '" + tokens[i].text + "'",
                                             line_no, tokens[i].column);
                        }
                    }
                }
                diagram.emplace(std::move(names));
                continue;
            }
            throw InputError("expected a 'generators:' line before anything else", line_no,
                             tokens[0].column);
        }

        if (tokens[0].text == "edges:") {
            if (tokens.size() > 1) {
                throw InputError("unexpected token after 'edges:'", line_no, tokens[1].column);
            }
            if (saw_edges_header) {
                throw InputError("repeated 'edges:' line", line_no, tokens[0].column);
            }
            saw_edges_header = true;
            continue;
        }
        if (tokens[0].text == "generators:") {
            throw InputError("repeated 'generators:' line", line_no, tokens[0].column);
        }

        if (tokens.size() != 3) {
            throw InputError("edge line must be '<generator> <generator> <label>'", line_no,
                             tokens[0].column);
        }
        if (!diagram->has_generator(tokens[0].text)) {
            throw InputError("unknown generator '" + tokens[0].text + "'", line_no,
                             tokens[0].column);
        }
        if (!diagram->has_generator(tokens[1].text)) {
            throw InputError("unknown generator '" + tokens[1].text + "'", line_no,
                             tokens[1].column);
        }
        int s = diagram->index_of(tokens[0].text);
        int t = diagram->index_of(tokens[1].text);
        if (s == t) {
            throw InputError("edge endpoints must be distinct generators", line_no,
                             tokens[1].column);
        }
        int label = parse_label(tokens[2], line_no);
        std::pair<int, int> key = std::minmax(s, t);
        if (label == 0) {
            if (auto existing = diagram->label(s, t)) {
                throw InputError("pair declared unrelated but already labeled " +
                                     std::to_string(*existing),
                                 line_no, tokens[2].column);
            }
            declared_infinite.emplace(key, line_no);
            continue;
        }
        if (declared_infinite.count(key)) {
            throw InputError("pair was declared unrelated on line " +
                                 std::to_string(declared_infinite[key]),
                             line_no, tokens[2].column);
        }
        if (auto existing = diagram->label(s, t); existing && *existing != label) {
            throw InputError("conflicting labels for pair (" + tokens[0].text + ", " +
                                 tokens[1].text + "): " + std::to_string(*existing) + " vs " +
                                 std::to_string(label),
                             line_no, tokens[2].column);
        }
        diagram->add_edge(s, t, label);
    }

    if (!diagram) {
        throw InputError("empty input: expected a 'generators:' line", std::max(line_no, 1), 1);
    }
    return std::move(*diagram);
}

CoxeterDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram(buffer.str());
}

std::string serialize_diagram(const CoxeterDiagram& d) {
    std::ostringstream out;
    out << "generators:";
    for (const auto& name : d.generator_names()) out << ' ' << name;
    out << '\n';
    auto edges = d.edges();
    if (!edges.empty()) {
        out << "edges:\n";
        for (const auto& [s, t, m] : edges) {
            out << d.name(s) << ' ' << d.name(t) << ' ' << m << '\n';
        }
    }
    return out.str();
}

}  // namespace coxjsj
