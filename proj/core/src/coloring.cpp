#include "aic/coloring.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace aic {

namespace {

constexpr int kMaxLevel = 20; // 2^20 anchors is the representability ceiling

void check_level(int k) {
    if (k < 0)
        throw Error("coloring: level must be >= 0");
    if (k > kMaxLevel)
        throw Error("coloring: level " + std::to_string(k) + " exceeds the 2^" +
                    std::to_string(kMaxLevel) + "-anchor ceiling");
}

std::vector<TreeWord> all_words(int k) {
    std::vector<TreeWord> words{TreeWord{}};
    for (int i = 0; i < k; ++i) {
        std::vector<TreeWord> next;
        next.reserve(words.size() * 2);
        for (const auto& w : words) {
            next.push_back(w + '1');
            next.push_back(w + '2');
        }
        words = std::move(next);
    }
    return words;
}

/// Labels of level -1..k-1: the (1,0) vertex plus all strictly shallow
/// tree vertices. Exactly 2^k curves.
std::vector<TorusCurve> shallow_vertices(int k) {
    std::vector<TorusCurve> out{TorusCurve{1, 0}};
    for (int j = 0; j < k; ++j)
        for (const auto& v : enumerate_level(j))
            out.push_back(v);
    return out;
}

/// Color of x ignoring overrides (the R-invariant part of the coloring).
Color base_color(const StructuredColoring& c, TorusCurve x) {
    const auto [rep, j] = orbit_rep_X1(x);
    (void)j;
    if (rep == TorusCurve{1, 0})
        return c.exceptions.at(rep);
    const TreeWord word = factorize(rep);
    if (static_cast<int>(word.size()) >= c.level)
        return c.anchors.at(word.substr(0, static_cast<std::size_t>(c.level)));
    return c.exceptions.at(rep);
}

void check_color(const Color& color, const char* where) {
    if (color.empty())
        throw Error(std::string(where) + ": colors must be non-empty strings");
}

void validate(const StructuredColoring& c, const char* where) {
    check_level(c.level);
    const auto words = all_words(c.level);
    if (c.anchors.size() != words.size())
        throw Error(std::string(where) + ": expected " + std::to_string(words.size()) +
                    " anchors, got " + std::to_string(c.anchors.size()));
    for (const auto& w : words)
        if (!c.anchors.count(w))
            throw Error(std::string(where) + ": missing anchor for word '" + w + "'");
    const auto shallow = shallow_vertices(c.level);
    if (c.exceptions.size() != shallow.size())
        throw Error(std::string(where) + ": expected " + std::to_string(shallow.size()) +
                    " exceptions, got " + std::to_string(c.exceptions.size()));
    for (const auto& v : shallow)
        if (!c.exceptions.count(v))
            throw Error(std::string(where) + ": missing exception for " + to_string(v));
    for (const auto& [w, color] : c.anchors)
        check_color(color, where);
    for (const auto& [v, color] : c.exceptions)
        check_color(color, where);
    for (const auto& [v, color] : c.overrides)
        check_color(color, where);
}

const IntMatrix2& generator_matrix(Generator g) {
    return g == Generator::S ? gen_S() : gen_R();
}

std::set<Color> used_colors(const StructuredColoring& c) {
    std::set<Color> colors;
    for (const auto& [w, color] : c.anchors)
        colors.insert(color);
    for (const auto& [v, color] : c.exceptions)
        colors.insert(color);
    for (const auto& [v, color] : c.overrides)
        colors.insert(color);
    return colors;
}

std::vector<TorusCurve> sorted(std::set<TorusCurve> points) {
    return {points.begin(), points.end()};
}

/// Function-preserving refinement of the anchor level to K >= c.level.
StructuredColoring refine(const StructuredColoring& c, int K) {
    check_level(K);
    StructuredColoring out;
    out.level = K;
    for (const auto& w : all_words(K))
        out.anchors[w] = c.anchors.at(w.substr(0, static_cast<std::size_t>(c.level)));
    for (const auto& v : shallow_vertices(K))
        out.exceptions[v] = base_color(c, v);
    out.overrides = c.overrides;
    return out;
}

} // namespace

StructuredColoring construct(int k, const std::vector<Color>& palette,
                             const std::map<TorusCurve, Color>& exception_colors) {
    check_level(k);
    const auto words = all_words(k);
    if (palette.size() != words.size())
        throw PaletteSizeError("construct: level " + std::to_string(k) + " needs " +
                               std::to_string(words.size()) + " colors, got " +
                               std::to_string(palette.size()));
    std::set<Color> seen;
    for (const auto& color : palette) {
        check_color(color, "construct");
        if (!seen.insert(color).second)
            throw DuplicateColorError("construct: palette color '" + color + "' repeats");
    }

    StructuredColoring c;
    c.level = k;
    for (std::size_t i = 0; i < words.size(); ++i)
        c.anchors[words[i]] = palette[i];

    const auto shallow = shallow_vertices(k);
    for (const auto& [v, color] : exception_colors) {
        check_color(color, "construct");
        if (std::find(shallow.begin(), shallow.end(), v) == shallow.end())
            throw Error("construct: " + to_string(v) + " is not a vertex of level < " +
                        std::to_string(k));
    }
    for (const auto& v : shallow) {
        if (auto it = exception_colors.find(v); it != exception_colors.end()) {
            c.exceptions[v] = it->second;
            continue;
        }
        // Leftmost level-k descendant; the (1,0) vertex borrows the root's.
        const TreeWord word = v == TorusCurve{1, 0} ? TreeWord{} : factorize(v);
        c.exceptions[v] = c.anchors.at(word + TreeWord(static_cast<std::size_t>(k) - word.size(), '1'));
    }
    return c;
}

Color color_of(const StructuredColoring& c, TorusCurve x) {
    if (auto it = c.overrides.find(x); it != c.overrides.end())
        return it->second;
    return base_color(c, x);
}

DefectReport defect(const StructuredColoring& c, Generator g) {
    std::set<TorusCurve> candidates;
    if (g == Generator::S) {
        // Every curve is a label or the S-image of one (S swaps X1 with
        // X2 u X3), and S keeps the color of any label deeper than
        // `level`: such a label v satisfies S v = R^j pred(v), so its
        // S-image sits in the R-orbit of its predecessor, which shares
        // v's anchor. Hence only labels of level <= `level`, their
        // S-images, and override-touched points can move.
        for (const auto& v : shallow_vertices(c.level)) {
            candidates.insert(v);
            candidates.insert(apply(gen_S(), v));
        }
        for (const auto& v : enumerate_level(c.level)) {
            candidates.insert(v);
            candidates.insert(apply(gen_S(), v));
        }
        for (const auto& [o, color] : c.overrides) {
            candidates.insert(o);
            candidates.insert(apply(gen_S(), o));
        }
    } else {
        // The override-free part is R-invariant outright.
        for (const auto& [o, color] : c.overrides) {
            candidates.insert(o);
            candidates.insert(apply(gen_R(), o));
            candidates.insert(apply(gen_R_inv(), o));
        }
    }

    const IntMatrix2& m = generator_matrix(g);
    DefectReport report;
    report.generator = g;
    report.certified = true;
    std::set<TorusCurve> moved;
    for (const auto& x : candidates)
        if (color_of(c, apply(m, x)) != color_of(c, x))
            moved.insert(x);
    report.defect = sorted(std::move(moved));
    return report;
}

BallReport verify_ball(const StructuredColoring& c, std::int64_t n) {
    if (n < 1)
        throw Error("verify_ball: radius must be >= 1");
    BallReport report;
    report.radius = n;
    for (const auto& x : ball(n)) {
        const Color here = color_of(c, x);
        if (color_of(c, apply(gen_S(), x)) != here)
            report.s_violations.push_back(x);
        if (color_of(c, apply(gen_R(), x)) != here)
            report.r_violations.push_back(x);
    }
    const auto in_ball = [n](TorusCurve x) {
        return std::max(x.p < 0 ? -x.p : x.p, x.q < 0 ? -x.q : x.q) <= n;
    };
    for (const auto& x : defect(c, Generator::S).defect)
        if (in_ball(x))
            report.s_defect_in_ball.push_back(x);
    for (const auto& x : defect(c, Generator::R).defect)
        if (in_ball(x))
            report.r_defect_in_ball.push_back(x);
    report.consistent = report.s_violations == report.s_defect_in_ball &&
                        report.r_violations == report.r_defect_in_ball;
    return report;
}

StructuredColoring simplify(const StructuredColoring& c, const std::map<Color, Color>& f) {
    for (const auto& color : used_colors(c))
        if (!f.count(color))
            throw Error("simplify: map does not cover color '" + color + "'");
    StructuredColoring out = c;
    for (auto& [w, color] : out.anchors)
        color = f.at(color);
    for (auto& [v, color] : out.exceptions)
        color = f.at(color);
    for (auto& [v, color] : out.overrides)
        color = f.at(color);
    validate(out, "simplify");
    return out;
}

StructuredColoring binarize(const StructuredColoring& c, const std::set<Color>& c0) {
    bool any_in = false, any_out = false;
    for (const auto& [w, color] : c.anchors)
        (c0.count(color) ? any_in : any_out) = true;
    if (!any_in || !any_out)
        throw TrivialSplitError("binarize: each side of the split must contain an anchor color");
    std::map<Color, Color> f;
    for (const auto& color : used_colors(c))
        f[color] = c0.count(color) ? "0" : "1";
    return simplify(c, f);
}

bool is_trivial(const StructuredColoring& c) {
    const Color& first = c.anchors.begin()->second;
    return std::all_of(c.anchors.begin(), c.anchors.end(),
                       [&](const auto& entry) { return entry.second == first; });
}

EquivalenceResult equivalent(const StructuredColoring& c1, const StructuredColoring& c2) {
    const int K = std::max(c1.level, c2.level);
    const StructuredColoring r1 = refine(c1, K);
    const StructuredColoring r2 = refine(c2, K);

    EquivalenceResult result;
    for (auto it1 = r1.anchors.begin(), it2 = r2.anchors.begin(); it1 != r1.anchors.end();
         ++it1, ++it2) {
        if (it1->second != it2->second) {
            // The whole subtree under this word disagrees off the
            // finitely many overrides.
            result.equivalent = false;
            result.disagreement_word = it1->first;
            return result;
        }
    }

    result.equivalent = true;
    std::set<TorusCurve> candidates;
    for (const auto& v : shallow_vertices(K)) {
        TorusCurve x = v;
        for (int j = 0; j < 3; ++j) {
            candidates.insert(x);
            x = apply(gen_R(), x);
        }
    }
    for (const auto& [o, color] : c1.overrides)
        candidates.insert(o);
    for (const auto& [o, color] : c2.overrides)
        candidates.insert(o);
    std::set<TorusCurve> diff;
    for (const auto& x : candidates)
        if (color_of(c1, x) != color_of(c2, x))
            diff.insert(x);
    result.differences = sorted(std::move(diff));
    return result;
}

StructuredColoring normalize(const StructuredColoring& c) {
    // Make the coloring R-invariant: each overridden R-orbit takes the
    // color of its X1 representative, everything else is untouched.
    std::map<TorusCurve, Color> orbit_value;
    for (const auto& [pt, color] : c.overrides) {
        const auto [rep, j] = orbit_rep_X1(pt);
        (void)j;
        if (!orbit_value.count(rep))
            orbit_value[rep] = color_of(c, rep);
    }
    StructuredColoring invariant = c;
    invariant.overrides.clear();
    for (const auto& [rep, color] : orbit_value) {
        if (color == base_color(c, rep))
            continue; // orbit agrees with the R-invariant part already
        TorusCurve x = rep;
        for (int j = 0; j < 3; ++j) {
            invariant.overrides[x] = color;
            x = apply(gen_R(), x);
        }
    }

    // Anchor level: the smallest K with no S-moved label deeper than K.
    int K = 0;
    for (const auto& x : defect(invariant, Generator::S).defect)
        if (region(x) == Region::X1)
            K = std::max(K, level_of(x));
    check_level(K);

    StructuredColoring out;
    out.level = K;
    for (const auto& w : all_words(K))
        out.anchors[w] = color_of(invariant, evaluate(w));
    for (const auto& v : shallow_vertices(K))
        out.exceptions[v] = color_of(invariant, v);
    return out;
}

std::string emit_coloring(const StructuredColoring& c) {
    nlohmann::json doc;
    doc["level"] = c.level;
    doc["anchors"] = nlohmann::json::object();
    for (const auto& [w, color] : c.anchors)
        doc["anchors"][w] = color;
    doc["exceptions"] = nlohmann::json::object();
    for (const auto& [v, color] : c.exceptions)
        doc["exceptions"][to_string(v)] = color;
    doc["overrides"] = nlohmann::json::object();
    for (const auto& [v, color] : c.overrides)
        doc["overrides"][to_string(v)] = color;
    return doc.dump() + "\n";
}

namespace {

const nlohmann::json& expect_object(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_object())
        throw ParseError(std::string("coloring: missing object field '") + key + "'");
    return doc.at(key);
}

Color expect_color(const nlohmann::json& value, const std::string& key) {
    if (!value.is_string() || value.get<std::string>().empty())
        throw ParseError("coloring: value for '" + key + "' must be a non-empty string");
    return value.get<std::string>();
}

TorusCurve expect_canonical_curve(const std::string& key) {
    const TorusCurve x = parse_curve(key);
    if (to_string(x) != key)
        throw ParseError("coloring: curve key '" + key + "' is not in canonical form");
    return x;
}

} // namespace

StructuredColoring parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("coloring: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("coloring: document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "level" && key != "anchors" && key != "exceptions" && key != "overrides")
            throw ParseError("coloring: unknown field '" + key + "'");
    if (!doc.contains("level") || !doc.at("level").is_number_integer())
        throw ParseError("coloring: missing integer field 'level'");

    StructuredColoring c;
    c.level = doc.at("level").get<int>();
    check_level(c.level);
    for (const auto& [key, value] : expect_object(doc, "anchors").items()) {
        if (key.size() != static_cast<std::size_t>(c.level) ||
            key.find_first_not_of("12") != std::string::npos)
            throw ParseError("coloring: anchor key '" + key + "' is not a length-" +
                             std::to_string(c.level) + " word over {1,2}");
        c.anchors[key] = expect_color(value, key);
    }
    for (const auto& [key, value] : expect_object(doc, "exceptions").items())
        c.exceptions[expect_canonical_curve(key)] = expect_color(value, key);
    for (const auto& [key, value] : expect_object(doc, "overrides").items())
        c.overrides[expect_canonical_curve(key)] = expect_color(value, key);

    validate(c, "coloring");
    return c;
}

} // namespace aic
