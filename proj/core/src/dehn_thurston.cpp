#include "aic/dehn_thurston.hpp"

#include <algorithm>
#include <charconv>

#include <nlohmann/json.hpp>

#include "aic/checked.hpp"

namespace aic {

namespace {

constexpr int kMaxLatticeDim = 16;

void check_axis(int axis, int dim, const char* where) {
    if (axis < 1 || axis > dim)
        throw IndexOutOfRangeError(std::string(where) + ": axis " + std::to_string(axis) +
                                   " outside 1.." + std::to_string(dim));
}

void check_curve_index(const DTMulticurve& d, int k, const char* where) {
    if (k < 1 || k > static_cast<int>(d.m.size()))
        throw IndexOutOfRangeError(std::string(where) + ": curve index " + std::to_string(k) +
                                   " outside 1.." + std::to_string(d.m.size()));
}

std::string sign_key(std::span<const std::int64_t> z) {
    std::string key(z.size(), '+');
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] < 0)
            key[i] = '-';
    return key;
}

std::vector<std::string> all_sign_keys(int dim) {
    std::vector<std::string> keys{""};
    for (int i = 0; i < dim; ++i) {
        std::vector<std::string> next;
        next.reserve(keys.size() * 2);
        for (const auto& k : keys) {
            next.push_back(k + '+');
            next.push_back(k + '-');
        }
        keys = std::move(next);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<std::int64_t> shifted(std::vector<std::int64_t> z, int axis, std::int64_t by) {
    z[static_cast<std::size_t>(axis - 1)] = checked::add(z[static_cast<std::size_t>(axis - 1)], by);
    return z;
}

/// Smallest box radius containing every exception coordinate.
std::int64_t exception_radius(const LatticeColoring& c) {
    std::int64_t r = 0;
    for (const auto& [z, color] : c.exceptions)
        for (std::int64_t v : z)
            r = std::max(r, v < 0 ? -v : v);
    return r;
}

} // namespace

SurfaceSpec make_surface(int genus, int boundary) {
    const bool ok = (genus >= 2 && boundary >= 0) || (genus == 1 && boundary == 0);
    if (!ok)
        throw InvalidSurfaceError("surface: need g >= 2, r >= 0 or g = 1, r = 0; got g=" +
                                  std::to_string(genus) + ", r=" + std::to_string(boundary));
    return SurfaceSpec{genus, boundary};
}

DTMulticurve make_multicurve(SurfaceSpec surface, std::vector<std::int64_t> m,
                             std::vector<std::int64_t> t) {
    make_surface(surface.genus, surface.boundary);
    const auto n = static_cast<std::size_t>(surface.pants_curves());
    if (m.size() != n || t.size() != n)
        throw Error("multicurve: expected " + std::to_string(n) + " coordinate pairs, got " +
                    std::to_string(m.size()) + "/" + std::to_string(t.size()));
    for (std::int64_t v : m)
        if (v < 0)
            throw Error("multicurve: intersection numbers must be >= 0");
    return DTMulticurve{surface, std::move(m), std::move(t)};
}

DTMulticurve twist(const DTMulticurve& d, int k, std::int64_t n) {
    check_curve_index(d, k, "twist");
    DTMulticurve out = d;
    auto& tk = out.t[static_cast<std::size_t>(k - 1)];
    tk = checked::add(tk, checked::mul(n, d.m[static_cast<std::size_t>(k - 1)]));
    return out;
}

bool acts_trivially(const DTMulticurve& d, int k) {
    check_curve_index(d, k, "acts_trivially");
    return d.m[static_cast<std::size_t>(k - 1)] == 0;
}

bool is_interesting(int k, const DTMulticurve& d) {
    check_curve_index(d, k, "is_interesting");
    return d.m[static_cast<std::size_t>(k - 1)] > 0;
}

std::vector<DTMulticurve> twist_string(const DTMulticurve& d, int k, std::int64_t a,
                                       std::int64_t b) {
    check_curve_index(d, k, "string");
    if (a > b)
        throw Error("string: empty range, " + std::to_string(a) + " > " + std::to_string(b));
    std::vector<DTMulticurve> out;
    out.reserve(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t n = a; n <= b; ++n)
        out.push_back(twist(d, k, n));
    return out;
}

DTMulticurve TwistLattice::at(std::span<const std::int64_t> n) const {
    if (n.size() != axes.size())
        throw Error("lattice: expected " + std::to_string(axes.size()) + " exponents");
    DTMulticurve out = base;
    for (std::size_t i = 0; i < axes.size(); ++i)
        out = twist(out, axes[i], n[i]);
    return out;
}

TwistLattice lattice_from_twists(const DTMulticurve& d, std::vector<int> ks) {
    std::vector<int> seen;
    for (int k : ks) {
        check_curve_index(d, k, "lattice_from_twists");
        if (std::find(seen.begin(), seen.end(), k) != seen.end())
            throw Error("lattice_from_twists: repeated curve index " + std::to_string(k));
        seen.push_back(k);
        if (!is_interesting(k, d))
            throw NotInterestingError("lattice_from_twists: twist " + std::to_string(k) +
                                      " fixes the multicurve (m = 0)");
    }
    return TwistLattice{d, std::move(ks)};
}

LatticeColoring make_lattice_coloring(int dim, std::map<std::string, Color> sectors,
                                      std::map<std::vector<std::int64_t>, Color> exceptions) {
    if (dim < 1 || dim > kMaxLatticeDim)
        throw Error("lattice coloring: dimension must be in 1.." +
                    std::to_string(kMaxLatticeDim));
    const auto keys = all_sign_keys(dim);
    if (sectors.size() != keys.size())
        throw Error("lattice coloring: expected " + std::to_string(keys.size()) +
                    " sector colors, got " + std::to_string(sectors.size()));
    for (const auto& k : keys)
        if (!sectors.count(k))
            throw Error("lattice coloring: missing sector '" + k + "'");
    for (const auto& [k, color] : sectors)
        if (color.empty())
            throw Error("lattice coloring: colors must be non-empty");
    for (const auto& [z, color] : exceptions) {
        if (z.size() != static_cast<std::size_t>(dim))
            throw Error("lattice coloring: exception point has wrong dimension");
        if (color.empty())
            throw Error("lattice coloring: colors must be non-empty");
    }
    return LatticeColoring{dim, std::move(sectors), std::move(exceptions)};
}

Color color_at(const LatticeColoring& c, std::span<const std::int64_t> z) {
    if (auto it = c.exceptions.find(std::vector<std::int64_t>(z.begin(), z.end()));
        it != c.exceptions.end())
        return it->second;
    return c.sectors.at(sign_key(z));
}

ShiftDefect shift_defect(const LatticeColoring& c, int axis) {
    check_axis(axis, c.dim, "shift_defect");

    // A +e_axis step changes exactly one sign, at coordinate -1 -> 0. For
    // dim >= 2 a color mismatch across that threshold repeats along the
    // whole (unbounded) boundary slab; for dim = 1 the slab is the single
    // point z = -1.
    if (c.dim >= 2) {
        for (const auto& key : all_sign_keys(c.dim - 1)) {
            std::string lo = key, hi = key;
            lo.insert(static_cast<std::size_t>(axis - 1), 1, '-');
            hi.insert(static_cast<std::size_t>(axis - 1), 1, '+');
            if (c.sectors.at(lo) != c.sectors.at(hi))
                return ShiftDefect{false, {}};
        }
    }

    std::vector<std::vector<std::int64_t>> candidates;
    for (const auto& [z, color] : c.exceptions) {
        candidates.push_back(z);
        candidates.push_back(shifted(z, axis, -1));
    }
    if (c.dim == 1)
        candidates.push_back({-1});
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ShiftDefect out;
    for (const auto& z : candidates)
        if (color_at(c, z) != color_at(c, shifted(z, axis, 1)))
            out.points.push_back(z);
    return out;
}

namespace {

void require_all_finite(const LatticeColoring& c, const char* where) {
    for (int axis = 1; axis <= c.dim; ++axis)
        if (!shift_defect(c, axis).finite)
            throw NotAlmostInvariantError(std::string(where) + ": axis " + std::to_string(axis) +
                                          " has an infinite shift defect");
}

std::vector<std::int64_t> ray_point(int dim, int axis, std::int64_t n) {
    std::vector<std::int64_t> z(static_cast<std::size_t>(dim), 0);
    z[static_cast<std::size_t>(axis - 1)] = n;
    return z;
}

} // namespace

Color future(const LatticeColoring& c, int axis) {
    check_axis(axis, c.dim, "future");
    require_all_finite(c, "future");
    return color_at(c, ray_point(c.dim, axis, exception_radius(c) + 1));
}

Color past(const LatticeColoring& c, int axis) {
    check_axis(axis, c.dim, "past");
    require_all_finite(c, "past");
    return color_at(c, ray_point(c.dim, axis, -(exception_radius(c) + 1)));
}

FuturePastReport future_past_check(const LatticeColoring& c) {
    if (c.dim < 2)
        throw Error("future_past_check: needs at least two axes");

    FuturePastReport report;
    for (int axis = 1; axis <= c.dim; ++axis)
        if (!shift_defect(c, axis).finite)
            report.failed_axes.push_back(axis);
    if (!report.failed_axes.empty())
        return report;
    report.hypotheses_ok = true;

    const std::int64_t margin = exception_radius(c) + 1;
    report.region_lo.assign(static_cast<std::size_t>(c.dim), -margin);
    report.region_hi.assign(static_cast<std::size_t>(c.dim), margin);

    report.pass = true;
    for (int axis = 1; axis <= c.dim; ++axis) {
        // Rays out of the bounded region must be color-stable.
        const Color fut = color_at(c, ray_point(c.dim, axis, margin));
        const Color pas = color_at(c, ray_point(c.dim, axis, -margin));
        for (std::int64_t n = margin; n <= margin + 3; ++n) {
            if (color_at(c, ray_point(c.dim, axis, n)) != fut ||
                color_at(c, ray_point(c.dim, axis, -n)) != pas)
                report.pass = false;
        }

        // Connect future to past around the region: out along a helper
        // axis, across, and back, checking every unit step.
        const int helper = axis == 1 ? 2 : 1;
        auto z = ray_point(c.dim, axis, margin);
        Color previous = color_at(c, z);
        const auto step = [&](int along, std::int64_t by) {
            z = shifted(z, along, by);
            const Color next = color_at(c, z);
            if (next != previous)
                report.pass = false;
            previous = next;
        };
        for (std::int64_t i = 0; i < margin; ++i)
            step(helper, 1);
        for (std::int64_t i = 0; i < 2 * margin; ++i)
            step(axis, -1);
        for (std::int64_t i = 0; i < margin; ++i)
            step(helper, -1);
        if (previous != pas || fut != pas)
            report.pass = false;

        report.futures.push_back(fut);
        report.pasts.push_back(pas);
    }
    return report;
}

CommonFutureReport common_future_check(const LatticeColoring& c) {
    require_all_finite(c, "common_future_check");
    CommonFutureReport report;
    for (int axis = 1; axis <= c.dim; ++axis)
        report.futures.push_back(future(c, axis));
    report.pass = true;
    for (int i = 0; i < c.dim; ++i)
        for (int j = i + 1; j < c.dim; ++j)
            if (report.futures[static_cast<std::size_t>(i)] !=
                report.futures[static_cast<std::size_t>(j)]) {
                report.pass = false;
                if (!report.counterexample_axes)
                    report.counterexample_axes = std::make_pair(i + 1, j + 1);
            }
    if (report.pass)
        report.common_future = report.futures.front();
    return report;
}

std::string to_string(const DTMulticurve& d) {
    std::string out =
        std::to_string(d.surface.genus) + "," + std::to_string(d.surface.boundary) + ";";
    for (std::size_t i = 0; i < d.m.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(d.m[i]) + ":" + std::to_string(d.t[i]);
    }
    return out;
}

namespace {

std::int64_t parse_i64(std::string_view s, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError(std::string("dt: bad ") + what + " '" + std::string(s) + "'");
    return value;
}

} // namespace

DTMulticurve parse_dt(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("dt: expected 'g,r;m1:t1,...', got '" + std::string(text) + "'");
    const auto head = text.substr(0, semi);
    const auto comma = head.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("dt: expected 'g,r' before ';'");
    const auto genus = parse_i64(head.substr(0, comma), "genus");
    const auto boundary = parse_i64(head.substr(comma + 1), "boundary count");

    std::vector<std::int64_t> m, t;
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto next = rest.find(',');
        const auto pair = next == std::string_view::npos ? rest : rest.substr(0, next);
        const auto colon = pair.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("dt: expected 'm:t' pair, got '" + std::string(pair) + "'");
        m.push_back(parse_i64(pair.substr(0, colon), "intersection number"));
        t.push_back(parse_i64(pair.substr(colon + 1), "twisting number"));
        if (next == std::string_view::npos)
            break;
        rest = rest.substr(next + 1);
    }
    try {
        return make_multicurve(make_surface(static_cast<int>(genus), static_cast<int>(boundary)),
                               std::move(m), std::move(t));
    } catch (const InvalidSurfaceError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string emit_lattice_coloring(const LatticeColoring& c) {
    nlohmann::json doc;
    doc["d"] = c.dim;
    doc["sectors"] = nlohmann::json::object();
    for (const auto& [key, color] : c.sectors)
        doc["sectors"][key] = color;
    doc["exceptions"] = nlohmann::json::object();
    for (const auto& [z, color] : c.exceptions) {
        std::string key;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (i > 0)
                key += ",";
            key += std::to_string(z[i]);
        }
        doc["exceptions"][key] = color;
    }
    return doc.dump() + "\n";
}

LatticeColoring parse_lattice_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("lattice coloring: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("lattice coloring: document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "d" && key != "sectors" && key != "exceptions")
            throw ParseError("lattice coloring: unknown field '" + key + "'");
    if (!doc.contains("d") || !doc.at("d").is_number_integer())
        throw ParseError("lattice coloring: missing integer field 'd'");
    if (!doc.contains("sectors") || !doc.at("sectors").is_object())
        throw ParseError("lattice coloring: missing object field 'sectors'");
    if (!doc.contains("exceptions") || !doc.at("exceptions").is_object())
        throw ParseError("lattice coloring: missing object field 'exceptions'");

    const int dim = doc.at("d").get<int>();
    if (dim < 1 || dim > kMaxLatticeDim)
        throw ParseError("lattice coloring: dimension must be in 1.." +
                         std::to_string(kMaxLatticeDim));

    std::map<std::string, Color> sectors;
    for (const auto& [key, value] : doc.at("sectors").items()) {
        if (key.size() != static_cast<std::size_t>(dim) ||
            key.find_first_not_of("+-") != std::string::npos)
            throw ParseError("lattice coloring: bad sector key '" + key + "'");
        if (!value.is_string() || value.get<std::string>().empty())
            throw ParseError("lattice coloring: sector colors must be non-empty strings");
        sectors[key] = value.get<std::string>();
    }

    std::map<std::vector<std::int64_t>, Color> exceptions;
    for (const auto& [key, value] : doc.at("exceptions").items()) {
        std::vector<std::int64_t> z;
        std::string_view rest = key;
        while (true) {
            const auto comma = rest.find(',');
            z.push_back(parse_i64(rest.substr(0, comma), "exception coordinate"));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (z.size() != static_cast<std::size_t>(dim))
            throw ParseError("lattice coloring: exception key '" + key + "' has wrong dimension");
        if (!value.is_string() || value.get<std::string>().empty())
            throw ParseError("lattice coloring: exception colors must be non-empty strings");
        exceptions[std::move(z)] = value.get<std::string>();
    }

    try {
        return make_lattice_coloring(dim, std::move(sectors), std::move(exceptions));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

} // namespace aic
