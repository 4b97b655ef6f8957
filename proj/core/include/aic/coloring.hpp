#pragma once

/**
 * @file coloring.hpp
 * @brief Almost-invariant colorings of torus curves in finite form.
 *
 * A StructuredColoring assigns a color to every curve using finite data:
 *
 *  - `anchors`: one color per word of length `level`; a curve whose tree
 *    word is at least that long inherits the color of its length-`level`
 *    prefix (so each anchor colors an entire infinite subtree);
 *  - `exceptions`: explicit colors for the finitely many shallow
 *    vertices (all levels below `level`, including (1,0));
 *  - `overrides`: a finite set of per-curve deviations, looked up first.
 *
 * Curves outside X1 take the color of their R-orbit representative, so
 * an override-free coloring is exactly R-invariant. Every coloring in
 * this form is almost invariant: R moves only override points and S
 * moves only a finite, exactly computable set (see defect()).
 *
 * Colors are opaque non-empty strings compared by equality.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aic/torus_curve.hpp"
#include "aic/tree.hpp"

namespace aic {

using Color = std::string;

struct StructuredColoring {
    int level = 0;
    std::map<TreeWord, Color> anchors;      // exactly 2^level entries
    std::map<TorusCurve, Color> exceptions; // exactly 2^level entries
    std::map<TorusCurve, Color> overrides;  // finite, may be empty

    friend bool operator==(const StructuredColoring&, const StructuredColoring&) = default;
};

enum class Generator { S, R };

struct DefectReport {
    Generator generator = Generator::S;
    std::vector<TorusCurve> defect; // exact, sorted by (p,q)
    bool certified = false;
};

struct BallReport {
    std::int64_t radius = 0;
    std::vector<TorusCurve> s_violations;     // brute-force scan of the ball
    std::vector<TorusCurve> r_violations;
    std::vector<TorusCurve> s_defect_in_ball; // structural defect, restricted
    std::vector<TorusCurve> r_defect_in_ball;
    bool consistent = false;                  // scan matches structural defect
};

struct EquivalenceResult {
    bool equivalent = false;
    std::vector<TorusCurve> differences;          // full set, when equivalent
    std::optional<TreeWord> disagreement_word;    // one bad anchor, when not
};

/// Anchor coloring with `palette[i]` on the i-th length-k word in
/// lexicographic order. Shallow vertices missing from `exception_colors`
/// default to the anchor of their leftmost level-k descendant ((1,0)
/// defaults to the root's, i.e. the all-'1' word's anchor). Overrides
/// start empty.
StructuredColoring construct(int k, const std::vector<Color>& palette,
                             const std::map<TorusCurve, Color>& exception_colors = {});

Color color_of(const StructuredColoring& c, TorusCurve x);

/// The exact set {x : c(gx) != c(x)}, computed over a certified finite
/// candidate set: every curve is a tree label or the S-image of one, and
/// labels deeper than `level` keep their color under S unless an
/// override interferes.
DefectReport defect(const StructuredColoring& c, Generator g);

/// Brute-force scan of ball(n) for both generators, cross-checked
/// against the structural defect sets.
BallReport verify_ball(const StructuredColoring& c, std::int64_t n);

/// Post-composition with a color map; `f` must cover every color used.
StructuredColoring simplify(const StructuredColoring& c, const std::map<Color, Color>& f);

/// Two-coloring with classes "0" (colors in c0) and "1" (the rest).
/// Each side must capture at least one anchor, so both classes contain
/// an infinite subtree; otherwise TrivialSplitError.
StructuredColoring binarize(const StructuredColoring& c, const std::set<Color>& c0);

/// True when all anchors agree: the coloring differs from a constant one
/// at finitely many points only.
bool is_trivial(const StructuredColoring& c);

/// Decides whether the colorings differ at only finitely many curves.
/// Both are refined to the common anchor level; the refined anchor maps
/// are equal exactly when the colorings are equivalent.
EquivalenceResult equivalent(const StructuredColoring& c1, const StructuredColoring& c2);

/// Canonical form: R-invariant, override-free, anchored at the smallest
/// level K below which S fixes every label's color. Equivalent to the
/// input, reproduces it exactly off the overridden R-orbits, and is a
/// fixed point of normalize.
StructuredColoring normalize(const StructuredColoring& c);

/// JSON document {"anchors":...,"exceptions":...,"level":...,"overrides":...}
/// with sorted keys and a trailing newline; parse is strict (unknown or
/// missing fields, wrong key sets and non-canonical curve keys are all
/// rejected).
std::string emit_coloring(const StructuredColoring& c);
StructuredColoring parse_coloring(const std::string& text);

} // namespace aic
