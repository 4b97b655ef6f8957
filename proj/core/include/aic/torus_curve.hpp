#pragma once

/**
 * @file torus_curve.hpp
 * @brief Unoriented torus curves as primitive integer pairs and the
 *        PSL(2,Z) action on them.
 *
 * A simple closed curve on the closed torus is a primitive pair (p,q)
 * with (p,q) and (-p,-q) identified. We store the unique sign
 * representative lying in one of three regions:
 *
 *   X1 = { p >= 1, q >= 0 }
 *   X2 = { q > -p >= 0 }
 *   X3 = { -p >= q > 0 }
 *
 * so region membership is readable straight off the canonical form.
 * The group acts by matrix-times-column-vector followed by sign
 * canonicalization; generators are
 *
 *   S = [ 0  1 ]      R = [ 0 -1 ]
 *       [-1  0 ]          [ 1  1 ]
 *
 * with S^2 = R^3 = I as maps on curves. All arithmetic is exact 64-bit
 * with checked overflow.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aic/errors.hpp"

namespace aic {

/// Canonical primitive pair. Instances produced by canonicalize() or
/// parse_curve() are always canonical; operations assume it.
struct TorusCurve {
    std::int64_t p = 1;
    std::int64_t q = 0;

    friend auto operator<=>(const TorusCurve&, const TorusCurve&) = default;
};

enum class Region { X1, X2, X3 };

/// Integer 2x2 matrix with determinant one.
struct IntMatrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1; // [a b; c d]

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    std::int64_t det() const;
    IntMatrix2 inverse() const; // [d -b; -c a] for det 1
};

/// Checked matrix product.
IntMatrix2 mat_mul(const IntMatrix2& lhs, const IntMatrix2& rhs);

enum class Letter { S, SInv, R, RInv };

/// Word over {S, S^-1, R, R^-1}, first letter outermost: the word [S^-1, R]
/// acts as the product S^-1 * R (rightmost letter hits the curve first).
using GroupWord = std::vector<Letter>;

const IntMatrix2& gen_S();
const IntMatrix2& gen_S_inv();
const IntMatrix2& gen_R();
const IntMatrix2& gen_R_inv();
const IntMatrix2& letter_matrix(Letter l);

/// Sign representative of a primitive pair in X1|X2|X3.
/// Throws NotPrimitiveError for (0,0) or a non-coprime pair.
TorusCurve canonicalize(std::int64_t p, std::int64_t q);

/// The unique region containing a canonical curve.
Region region(TorusCurve x);

/// Matrix action followed by canonicalization. Requires det m = 1;
/// primitivity is preserved by the unimodular action (debug-asserted).
TorusCurve apply(const IntMatrix2& m, TorusCurve x);

TorusCurve apply_word(const GroupWord& w, TorusCurve x);

/// R-orbit representative in X1 together with the exponent j in {0,1,2}
/// such that x = R^j * rep.
std::pair<TorusCurve, int> orbit_rep_X1(TorusCurve x);

/// Geometric intersection number |p*q' - q*p'|; zero exactly for equal
/// unoriented classes.
std::int64_t torus_intersection(TorusCurve x, TorusCurve y);

/// The transvection v -> v + <v,x>*x with <(a,b),(p,q)> = a*q - b*p,
/// realizing the twist along x. Fixes x and has determinant one.
IntMatrix2 torus_twist_matrix(TorusCurve x);

/// All canonical curves with max(|p|,|q|) <= n, sorted by (p,q).
std::vector<TorusCurve> ball(std::int64_t n);

/// Textual form "p/q", e.g. "-3/5".
std::string to_string(TorusCurve x);

/// Parses "p/q" for any primitive pair and canonicalizes it.
TorusCurve parse_curve(std::string_view text);

} // namespace aic
