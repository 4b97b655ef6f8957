#include "aic/tree.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "aic/checked.hpp"

namespace aic {

TorusCurve evaluate(const TreeWord& w) {
    std::int64_t p = 1, q = 1;
    for (char step : w) {
        if (step == '1')
            p = checked::add(p, q);
        else if (step == '2')
            q = checked::add(p, q);
        else
            throw ParseError(std::string("evaluate: bad step '") + step + "'");
    }
    return TorusCurve{p, q};
}

TreeWord factorize(TorusCurve x) {
    if (x.p < 1 || x.q < 1)
        throw NotInPositiveQuadrantError("factorize: " + to_string(x) +
                                         " has no tree word");
    std::int64_t p = x.p, q = x.q;
    TreeWord reversed;
    // Whole runs of equal steps at once: from (p,q) with p > q, the last
    // (p-1)/q steps were all '1' (and symmetrically for '2'). One
    // subtraction at a time would be linear in max(p,q).
    while (p != 1 || q != 1) {
        if (p > q) {
            const std::int64_t n = (p - 1) / q;
            reversed.append(static_cast<std::size_t>(n), '1');
            p -= n * q;
        } else {
            const std::int64_t n = (q - 1) / p;
            reversed.append(static_cast<std::size_t>(n), '2');
            q -= n * p;
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

int level_of(TorusCurve x) {
    if (x == TorusCurve{1, 0})
        return -1;
    return static_cast<int>(factorize(x).size());
}

TreeVertex root_vertex() {
    return TreeVertex{TreeWord{}, TorusCurve{1, 1}};
}

TreeVertex special_vertex() {
    return TreeVertex{kSpecialWord, TorusCurve{1, 0}};
}

TreeVertex vertex_for(TorusCurve x) {
    if (x == TorusCurve{1, 0})
        return special_vertex();
    return TreeVertex{factorize(x), x};
}

std::pair<TreeVertex, TreeVertex> children(const TreeVertex& v) {
    if (v.word == kSpecialWord)
        throw SpecialVertexError("children: the (1,0) vertex has no children");
    const auto& [p, q] = v.label;
    TreeVertex left{v.word + '1', TorusCurve{checked::add(p, q), q}};
    TreeVertex right{v.word + '2', TorusCurve{p, checked::add(p, q)}};
    return {left, right};
}

std::vector<TorusCurve> enumerate_level(int k) {
    if (k < 0)
        throw Error("enumerate_level: level must be >= 0");
    if (k > 26)
        throw Error("enumerate_level: 2^" + std::to_string(k) + " labels is too many");
    std::vector<TorusCurve> level{TorusCurve{1, 1}};
    for (int i = 0; i < k; ++i) {
        std::vector<TorusCurve> next;
        next.reserve(level.size() * 2);
        for (const auto& [p, q] : level) {
            next.push_back(TorusCurve{checked::add(p, q), q});
            next.push_back(TorusCurve{p, checked::add(p, q)});
        }
        level = std::move(next);
    }
    return level;
}

namespace {

struct FlatTree {
    std::vector<TreeVertex> vertices;                    // breadth-first
    std::vector<std::pair<TreeWord, TreeWord>> edges;    // parent -> child
};

FlatTree flatten(int depth) {
    FlatTree t;
    t.vertices.push_back(special_vertex());
    t.vertices.push_back(root_vertex());
    t.edges.emplace_back(kSpecialWord, TreeWord{});
    std::vector<TreeVertex> level{root_vertex()};
    for (int d = 0; d < depth; ++d) {
        std::vector<TreeVertex> next;
        next.reserve(level.size() * 2);
        for (const auto& v : level) {
            auto [left, right] = children(v);
            t.edges.emplace_back(v.word, left.word);
            t.edges.emplace_back(v.word, right.word);
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        for (const auto& v : next)
            t.vertices.push_back(v);
        level = std::move(next);
    }
    return t;
}

int vertex_level(const TreeVertex& v) {
    return v.word == kSpecialWord ? -1 : static_cast<int>(v.word.size());
}

} // namespace

std::string emit_tree(int depth, TreeFormat format) {
    if (depth < 0)
        throw Error("emit_tree: depth must be >= 0");
    if (depth > 20)
        throw Error("emit_tree: depth " + std::to_string(depth) + " is too deep");
    const FlatTree t = flatten(depth);

    if (format == TreeFormat::Dot) {
        std::string out = "digraph tree {\n";
        for (const auto& v : t.vertices)
            out += "  \"" + to_string(v.label) + "\";\n";
        for (const auto& [parent, child] : t.edges) {
            const TorusCurve from = parent == kSpecialWord ? TorusCurve{1, 0} : evaluate(parent);
            const TorusCurve to = evaluate(child);
            out += "  \"" + to_string(from) + "\" -> \"" + to_string(to) + "\";\n";
        }
        out += "}\n";
        return out;
    }

    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& v : t.vertices) {
        doc["vertices"].push_back({{"word", v.word},
                                   {"label", to_string(v.label)},
                                   {"level", vertex_level(v)}});
    }
    doc["edges"] = nlohmann::json::array();
    for (const auto& [parent, child] : t.edges)
        doc["edges"].push_back({parent, child});
    return doc.dump() + "\n";
}

} // namespace aic
