#pragma once

/**
 * @file dehn_thurston.hpp
 * @brief Dehn-Thurston twist coordinates and integer-lattice coloring checks.
 *
 * A multicurve relative to a pants decomposition carries one intersection
 * number m_k >= 0 and one twisting number t_k per pants curve. The twist
 * along pants curve k acts by t_k -> t_k + n * m_k and leaves every other
 * coordinate alone, so commuting twists with m_k > 0 embed Z^d orbits
 * into the coordinate lattice.
 *
 * LatticeColoring models colorings of such a Z^d orbit: a background
 * color per sign sector (threshold 0 on every axis) plus finitely many
 * exceptional points. shift_defect() classifies each axis defect as
 * finite or infinite exactly; future_past_check() and common_future_check()
 * run the future/past path-connection arguments as executable checks.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aic/errors.hpp"

namespace aic {

using Color = std::string;

struct SurfaceSpec {
    int genus = 2;
    int boundary = 0;

    /// Number of pants curves, 3g + r - 3.
    int pants_curves() const { return 3 * genus + boundary - 3; }
};

/// Throws InvalidSurfaceError unless g >= 2, r >= 0 or g = 1, r = 0.
SurfaceSpec make_surface(int genus, int boundary);

struct DTMulticurve {
    SurfaceSpec surface;
    std::vector<std::int64_t> m; // intersection numbers, >= 0
    std::vector<std::int64_t> t; // twisting numbers

    friend bool operator==(const DTMulticurve& lhs, const DTMulticurve& rhs) {
        return lhs.surface.genus == rhs.surface.genus &&
               lhs.surface.boundary == rhs.surface.boundary && lhs.m == rhs.m &&
               lhs.t == rhs.t;
    }
};

/// Validated constructor: vector lengths must equal pants_curves().
DTMulticurve make_multicurve(SurfaceSpec surface, std::vector<std::int64_t> m,
                             std::vector<std::int64_t> t);

/// n-fold twist along pants curve k (1-based): t_k += n * m_k.
DTMulticurve twist(const DTMulticurve& d, int k, std::int64_t n);

/// True iff m_k = 0; equivalently the twist along curve k fixes d.
bool acts_trivially(const DTMulticurve& d, int k);

/// True iff the twist along curve k moves d (m_k > 0).
bool is_interesting(int k, const DTMulticurve& d);

/// The window [a,b] of the twist orbit through d along curve k;
/// pairwise distinct exactly when m_k > 0.
std::vector<DTMulticurve> twist_string(const DTMulticurve& d, int k, std::int64_t a,
                                       std::int64_t b);

/// Z^d orbit of commuting twists along the chosen pants curves, each of
/// which must move the base multicurve.
struct TwistLattice {
    DTMulticurve base;
    std::vector<int> axes; // 1-based pants-curve indices, distinct

    int dimension() const { return static_cast<int>(axes.size()); }
    DTMulticurve at(std::span<const std::int64_t> n) const;
};

/// Throws NotInterestingError if any selected curve has m = 0.
TwistLattice lattice_from_twists(const DTMulticurve& d, std::vector<int> ks);

/// Coloring of Z^d: one background color per sign sector plus finitely
/// many exceptional points. Sector keys are strings over '+'/'-', one
/// character per axis; coordinate >= 0 reads as '+'.
struct LatticeColoring {
    int dim = 1;
    std::map<std::string, Color> sectors;              // all 2^dim keys
    std::map<std::vector<std::int64_t>, Color> exceptions;
};

/// Validated constructor; checks the sector map is total.
LatticeColoring make_lattice_coloring(int dim, std::map<std::string, Color> sectors,
                                      std::map<std::vector<std::int64_t>, Color> exceptions);

Color color_at(const LatticeColoring& c, std::span<const std::int64_t> z);

struct ShiftDefect {
    bool finite = true;
    std::vector<std::vector<std::int64_t>> points; // exact set when finite
};

/// Classifies {z : c(z + e_axis) != c(z)} exactly. Infinite exactly when
/// dim >= 2 and some pair of sectors adjacent across the axis threshold
/// disagrees; otherwise returns the full finite set.
ShiftDefect shift_defect(const LatticeColoring& c, int axis);

/// Eventually constant color along +axis (resp. -axis) on the ray from
/// the origin. Requires every axis defect to be finite, else
/// NotAlmostInvariantError.
Color future(const LatticeColoring& c, int axis);
Color past(const LatticeColoring& c, int axis);

struct FuturePastReport {
    bool hypotheses_ok = false;
    std::vector<int> failed_axes;      // axes with infinite defect
    bool pass = false;                 // future = past verified on every axis
    std::vector<std::int64_t> region_lo, region_hi; // bounded region used
    std::vector<Color> futures, pasts; // per axis, when hypotheses hold
};

/// Checks future = past on every axis by walking an explicit lattice
/// path around the bounded region, step by step. Requires dim >= 2.
FuturePastReport future_past_check(const LatticeColoring& c);

struct CommonFutureReport {
    bool pass = false;
    Color common_future;               // when pass
    std::vector<Color> futures;        // per axis
    std::optional<std::pair<int, int>> counterexample_axes;
};

/// Verifies all axes share one future. Throws NotAlmostInvariantError if
/// any axis defect is infinite.
CommonFutureReport common_future_check(const LatticeColoring& c);

/// Textual coordinates "g,r;m1:t1,...", e.g. "2,0;3:5,0:0,1:-2".
std::string to_string(const DTMulticurve& d);
DTMulticurve parse_dt(std::string_view text);

/// JSON document {"d":...,"exceptions":...,"sectors":...}; strict parse.
std::string emit_lattice_coloring(const LatticeColoring& c);
LatticeColoring parse_lattice_coloring(const std::string& text);

} // namespace aic
