#pragma once

/**
 * @file tree.hpp
 * @brief The labelled binary tree of positive primitive pairs.
 *
 * Every curve (p,q) with p,q >= 1 is reached from (1,1) by a unique
 * sequence of steps
 *
 *   '1' : (p,q) -> (p+q, q)      (left child)
 *   '2' : (p,q) -> (p, p+q)      (right child)
 *
 * so words over {'1','2'} are in bijection with the positive quadrant.
 * A word is stored in application order: the first character is the
 * first step taken from the root. The extra vertex (1,0) below the root
 * carries the sentinel word "-" and level -1.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "aic/torus_curve.hpp"

namespace aic {

/// Path from the root, characters '1' (left) and '2' (right).
using TreeWord = std::string;

inline constexpr const char* kSpecialWord = "-";

struct TreeVertex {
    TreeWord word;
    TorusCurve label;

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

enum class TreeFormat { Dot, Json };

/// Label of the vertex reached by the word; the empty word gives (1,1).
TorusCurve evaluate(const TreeWord& w);

/// Unique word with evaluate(word) == x. Requires p,q >= 1; (1,0) has no
/// word and raises NotInPositiveQuadrantError. Runs in O(log max(p,q))
/// using run-length division steps.
TreeWord factorize(TorusCurve x);

/// -1 for (1,0), otherwise the word length. Requires x in X1.
int level_of(TorusCurve x);

TreeVertex root_vertex();
TreeVertex special_vertex();
TreeVertex vertex_for(TorusCurve x);

/// Left and right children; the special vertex has none.
std::pair<TreeVertex, TreeVertex> children(const TreeVertex& v);

/// The 2^k labels at level k in lexicographic word order.
std::vector<TorusCurve> enumerate_level(int k);

/// All vertices of level <= depth plus the (1,0) vertex, with parent
/// edges, as DOT or JSON text. Byte-deterministic.
std::string emit_tree(int depth, TreeFormat format);

} // namespace aic
