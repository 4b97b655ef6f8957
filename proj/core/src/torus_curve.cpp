#include "aic/torus_curve.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>

#include "aic/checked.hpp"

namespace aic {

namespace {

// Flips sign so q > 0, or q == 0 and p > 0. Assumes the pair is primitive.
TorusCurve sign_canonical(std::int64_t p, std::int64_t q) {
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return TorusCurve{p, q};
}

} // namespace

std::int64_t IntMatrix2::det() const {
    return checked::sub(checked::mul(a, d), checked::mul(b, c));
}

IntMatrix2 IntMatrix2::inverse() const {
    assert(det() == 1);
    return IntMatrix2{d, checked::negate(b), checked::negate(c), a};
}

IntMatrix2 mat_mul(const IntMatrix2& lhs, const IntMatrix2& rhs) {
    using checked::add;
    using checked::mul;
    return IntMatrix2{
        add(mul(lhs.a, rhs.a), mul(lhs.b, rhs.c)),
        add(mul(lhs.a, rhs.b), mul(lhs.b, rhs.d)),
        add(mul(lhs.c, rhs.a), mul(lhs.d, rhs.c)),
        add(mul(lhs.c, rhs.b), mul(lhs.d, rhs.d)),
    };
}

const IntMatrix2& gen_S() {
    static const IntMatrix2 m{0, 1, -1, 0};
    return m;
}

const IntMatrix2& gen_S_inv() {
    static const IntMatrix2 m{0, -1, 1, 0};
    return m;
}

const IntMatrix2& gen_R() {
    static const IntMatrix2 m{0, -1, 1, 1};
    return m;
}

const IntMatrix2& gen_R_inv() {
    // -R^2; determinant-one representative chosen so that
    // R^-1 * (-q, p) = (p-q, q) holds on the nose.
    static const IntMatrix2 m{1, 1, -1, 0};
    return m;
}

const IntMatrix2& letter_matrix(Letter l) {
    switch (l) {
    case Letter::S: return gen_S();
    case Letter::SInv: return gen_S_inv();
    case Letter::R: return gen_R();
    case Letter::RInv: return gen_R_inv();
    }
    throw Error("letter_matrix: bad letter");
}

TorusCurve canonicalize(std::int64_t p, std::int64_t q) {
    if (p == INT64_MIN || q == INT64_MIN)
        throw OverflowError("canonicalize: magnitude not representable");
    if (p == 0 && q == 0)
        throw NotPrimitiveError("canonicalize: (0,0) is not a curve");
    if (std::gcd(p, q) != 1)
        throw NotPrimitiveError("canonicalize: gcd(" + std::to_string(p) + "," +
                                std::to_string(q) + ") != 1");
    return sign_canonical(p, q);
}

Region region(TorusCurve x) {
    if (x.p >= 1 && x.q >= 0)
        return Region::X1;
    if (-x.p >= 0 && x.q > -x.p)
        return Region::X2;
    if (x.q > 0 && -x.p >= x.q)
        return Region::X3;
    throw Error("region: " + to_string(x) + " is not canonical");
}

TorusCurve apply(const IntMatrix2& m, TorusCurve x) {
    assert(m.det() == 1);
    using checked::add;
    using checked::mul;
    const std::int64_t u = add(mul(m.a, x.p), mul(m.b, x.q));
    const std::int64_t v = add(mul(m.c, x.p), mul(m.d, x.q));
    assert(std::gcd(u, v) == 1); // unimodular action preserves primitivity
    return sign_canonical(u, v);
}

TorusCurve apply_word(const GroupWord& w, TorusCurve x) {
    // Rightmost letter acts first; canonicalizing per step keeps entries small.
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        x = apply(letter_matrix(*it), x);
    return x;
}

std::pair<TorusCurve, int> orbit_rep_X1(TorusCurve x) {
    int j = 0;
    while (region(x) != Region::X1) {
        x = apply(gen_R_inv(), x);
        ++j;
    }
    assert(j <= 2);
    return {x, j};
}

std::int64_t torus_intersection(TorusCurve x, TorusCurve y) {
    const std::int64_t d = checked::sub(checked::mul(x.p, y.q), checked::mul(x.q, y.p));
    return d < 0 ? -d : d;
}

IntMatrix2 torus_twist_matrix(TorusCurve x) {
    using checked::add;
    using checked::mul;
    using checked::sub;
    const std::int64_t pq = mul(x.p, x.q);
    return IntMatrix2{
        add(1, pq),
        checked::negate(mul(x.p, x.p)),
        mul(x.q, x.q),
        sub(1, pq),
    };
}

std::vector<TorusCurve> ball(std::int64_t n) {
    if (n < 1)
        throw Error("ball: radius must be >= 1");
    std::vector<TorusCurve> out;
    out.push_back(TorusCurve{1, 0});
    for (std::int64_t p = -n; p <= n; ++p)
        for (std::int64_t q = 1; q <= n; ++q)
            if (std::gcd(p, q) == 1)
                out.push_back(TorusCurve{p, q});
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(TorusCurve x) {
    return std::to_string(x.p) + "/" + std::to_string(x.q);
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || s.empty())
        throw ParseError("parse_curve: bad integer '" + std::string(s) + "'");
    return value;
}

} // namespace

TorusCurve parse_curve(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("parse_curve: expected 'p/q', got '" + std::string(text) + "'");
    const std::int64_t p = parse_int(text.substr(0, slash));
    const std::int64_t q = parse_int(text.substr(slash + 1));
    return canonicalize(p, q);
}

} // namespace aic
