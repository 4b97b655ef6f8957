// aicolor: exact-arithmetic CLI for torus curves, tree factorization,
// almost-invariant colorings, and Dehn-Thurston twist coordinates.
//
// Exit codes: 0 = success / property verified, 1 = verification found
// violations or the queried predicate is false, 2 = usage or parse error.
// Output is deterministic: JSON with sorted keys (or DOT), newline-terminated.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aic/coloring.hpp"
#include "aic/dehn_thurston.hpp"
#include "aic/errors.hpp"
#include "aic/torus_curve.hpp"
#include "aic/tree.hpp"

namespace {

using nlohmann::json;

std::string read_document(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw aic::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_json(const json& doc) {
    std::cout << doc.dump() << "\n";
}

json curves_to_json(const std::vector<aic::TorusCurve>& curves) {
    json arr = json::array();
    for (const auto& x : curves)
        arr.push_back(aic::to_string(x));
    return arr;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

std::map<aic::TorusCurve, aic::Color> parse_exception_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_document(path));
    } catch (const json::exception& e) {
        throw aic::ParseError(std::string("exceptions file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw aic::ParseError("exceptions file: expected an object of curve -> color");
    std::map<aic::TorusCurve, aic::Color> out;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string() || value.get<std::string>().empty())
            throw aic::ParseError("exceptions file: colors must be non-empty strings");
        out[aic::parse_curve(key)] = value.get<std::string>();
    }
    return out;
}

int run_factor(const std::string& curve) {
    const auto x = aic::parse_curve(curve);
    print_json(json{{"word", aic::factorize(x)}});
    return 0;
}

int run_eval(const std::string& word) {
    print_json(json{{"curve", aic::to_string(aic::evaluate(word))}});
    return 0;
}

int run_tree(int depth, const std::string& format) {
    if (format == "dot")
        std::cout << aic::emit_tree(depth, aic::TreeFormat::Dot);
    else
        std::cout << aic::emit_tree(depth, aic::TreeFormat::Json);
    return 0;
}

int run_mkcolor(int level, const std::string& palette, const std::string& exceptions_path) {
    std::vector<aic::Color> colors = split_commas(palette);
    std::map<aic::TorusCurve, aic::Color> exceptions;
    if (!exceptions_path.empty())
        exceptions = parse_exception_file(exceptions_path);
    std::cout << aic::emit_coloring(aic::construct(level, colors, exceptions));
    return 0;
}

int run_query(const std::string& doc_path, const std::string& curve) {
    const auto coloring = aic::parse_coloring(read_document(doc_path));
    print_json(json{{"color", aic::color_of(coloring, aic::parse_curve(curve))}});
    return 0;
}

int run_defect(const std::string& doc_path, const std::string& generator) {
    const auto coloring = aic::parse_coloring(read_document(doc_path));
    const auto g = generator == "S" ? aic::Generator::S : aic::Generator::R;
    const auto report = aic::defect(coloring, g);
    print_json(json{{"certified", report.certified}, {"defect", curves_to_json(report.defect)}});
    return 0;
}

int run_verify(const std::string& doc_path, std::int64_t radius) {
    const auto coloring = aic::parse_coloring(read_document(doc_path));
    if (radius < 1)
        throw aic::ParseError("verify: --ball must be >= 1");
    const auto report = aic::verify_ball(coloring, radius);
    print_json(json{
        {"ball", report.radius},
        {"defect", json{{"R", curves_to_json(report.r_defect_in_ball)},
                        {"S", curves_to_json(report.s_defect_in_ball)}}},
        {"ok", report.consistent},
        {"violations", json{{"R", curves_to_json(report.r_violations)},
                            {"S", curves_to_json(report.s_violations)}}},
    });
    return report.consistent ? 0 : 1;
}

int run_normalize(const std::string& doc_path) {
    const auto coloring = aic::parse_coloring(read_document(doc_path));
    std::cout << aic::emit_coloring(aic::normalize(coloring));
    return 0;
}

int run_equiv(const std::string& path1, const std::string& path2) {
    const auto c1 = aic::parse_coloring(read_document(path1));
    const auto c2 = aic::parse_coloring(read_document(path2));
    const auto result = aic::equivalent(c1, c2);
    if (result.equivalent) {
        print_json(json{{"differences", curves_to_json(result.differences)},
                        {"equivalent", true}});
        return 0;
    }
    print_json(json{{"equivalent", false}, {"witness_word", *result.disagreement_word}});
    return 1;
}

int run_trivial(const std::string& doc_path) {
    const auto coloring = aic::parse_coloring(read_document(doc_path));
    const bool trivial = aic::is_trivial(coloring);
    print_json(json{{"trivial", trivial}});
    return trivial ? 0 : 1;
}

int run_dt_twist(const std::string& coords, int k, std::int64_t n) {
    const auto d = aic::parse_dt(coords);
    print_json(json{{"coords", aic::to_string(aic::twist(d, k, n))}});
    return 0;
}

int run_dt_string(const std::string& coords, int k, std::int64_t from, std::int64_t to) {
    const auto d = aic::parse_dt(coords);
    if (from > to)
        throw aic::ParseError("dt string: --from must be <= --to");
    json arr = json::array();
    for (const auto& e : aic::twist_string(d, k, from, to))
        arr.push_back(aic::to_string(e));
    print_json(json{{"string", arr}});
    return 0;
}

int run_dt_gridcheck(const std::string& doc_path) {
    const auto coloring = aic::parse_lattice_coloring(read_document(doc_path));
    if (coloring.dim < 2)
        throw aic::ParseError("dt gridcheck: needs d >= 2");
    const auto report = aic::future_past_check(coloring);
    json doc{{"failed_axes", report.failed_axes},
             {"hypotheses_ok", report.hypotheses_ok},
             {"pass", report.pass}};
    if (report.hypotheses_ok) {
        const auto common = aic::common_future_check(coloring);
        doc["futures"] = report.futures;
        doc["pasts"] = report.pasts;
        doc["region"] = json{{"hi", report.region_hi}, {"lo", report.region_lo}};
        doc["common_future_ok"] = common.pass;
        if (common.pass)
            doc["common_future"] = common.common_future;
        print_json(doc);
        return report.pass && common.pass ? 0 : 1;
    }
    print_json(doc);
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for torus curves, tree words, almost-invariant "
                 "colorings and Dehn-Thurston twists"};
    app.require_subcommand(1);

    std::string curve, word, format = "json", palette, exceptions_path;
    std::string doc_path, doc_path2, generator, coords;
    int depth = 0, level = 0, index = 1;
    std::int64_t radius = 0, exponent = 1, from = 0, to = 0;

    auto* factor = app.add_subcommand("factor", "Tree word of a curve p/q");
    factor->add_option("curve", curve, "curve as p/q")->required();

    auto* eval = app.add_subcommand("eval", "Curve reached by a word over 1,2");
    eval->add_option("word", word, "word over {1,2}; empty for the root");

    auto* tree = app.add_subcommand("tree", "Emit the labelled tree");
    tree->add_option("--depth", depth, "levels to include")->required();
    tree->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* mkcolor = app.add_subcommand("mkcolor", "Build an anchor coloring document");
    mkcolor->add_option("--level", level, "anchor level k")->required();
    mkcolor->add_option("--palette", palette, "2^k comma-separated distinct colors")->required();
    mkcolor->add_option("--exceptions", exceptions_path,
                        "JSON file coloring shallow vertices (curve -> color)");

    auto* query = app.add_subcommand("query", "Color of one curve");
    query->add_option("coloring", doc_path, "coloring document or -")->required();
    query->add_option("curve", curve, "curve as p/q")->required();

    auto* defect = app.add_subcommand("defect", "Exact defect set of one generator");
    defect->add_option("coloring", doc_path, "coloring document or -")->required();
    defect->add_option("--gen", generator, "S or R")
        ->required()
        ->check(CLI::IsMember({"S", "R"}));

    auto* verify = app.add_subcommand("verify", "Scan a ball and cross-check the defect sets");
    verify->add_option("coloring", doc_path, "coloring document or -")->required();
    verify->add_option("--ball", radius, "max-norm radius, >= 1")->required();

    auto* normalize = app.add_subcommand("normalize", "Canonical equivalent coloring");
    normalize->add_option("coloring", doc_path, "coloring document or -")->required();

    auto* equiv = app.add_subcommand("equiv", "Do two colorings differ at finitely many curves?");
    equiv->add_option("first", doc_path, "coloring document or -")->required();
    equiv->add_option("second", doc_path2, "coloring document")->required();

    auto* trivial = app.add_subcommand("trivial", "Is the coloring almost constant?");
    trivial->add_option("coloring", doc_path, "coloring document or -")->required();

    auto* dt = app.add_subcommand("dt", "Dehn-Thurston coordinate operations");
    dt->require_subcommand(1);

    auto* dt_twist = dt->add_subcommand("twist", "Apply a power of one pants twist");
    dt_twist->add_option("coords", coords, "coordinates as g,r;m1:t1,...")->required();
    dt_twist->add_option("--k", index, "pants curve index (1-based)")->required();
    dt_twist->add_option("--n", exponent, "twist power")->required();

    auto* dt_string = dt->add_subcommand("string", "Window of a twist orbit");
    dt_string->add_option("coords", coords, "coordinates as g,r;m1:t1,...")->required();
    dt_string->add_option("--k", index, "pants curve index (1-based)")->required();
    dt_string->add_option("--from", from, "first exponent")->required();
    dt_string->add_option("--to", to, "last exponent")->required();

    auto* dt_gridcheck =
        dt->add_subcommand("gridcheck", "Future/past checks on a lattice coloring");
    dt_gridcheck->add_option("coloring", doc_path, "lattice coloring document or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 only for --help and friends
    }

    try {
        if (*factor)
            return run_factor(curve);
        if (*eval)
            return run_eval(word);
        if (*tree)
            return run_tree(depth, format);
        if (*mkcolor)
            return run_mkcolor(level, palette, exceptions_path);
        if (*query)
            return run_query(doc_path, curve);
        if (*defect)
            return run_defect(doc_path, generator);
        if (*verify)
            return run_verify(doc_path, radius);
        if (*normalize)
            return run_normalize(doc_path);
        if (*equiv)
            return run_equiv(doc_path, doc_path2);
        if (*trivial)
            return run_trivial(doc_path);
        if (*dt_twist)
            return run_dt_twist(coords, index, exponent);
        if (*dt_string)
            return run_dt_string(coords, index, from, to);
        if (*dt_gridcheck)
            return run_dt_gridcheck(doc_path);
    } catch (const aic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
