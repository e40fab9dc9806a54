#pragma once

#include "heptalab/coloring.hpp"
#include "heptalab/structures.hpp"

namespace heptalab {

/// Colors the parts in the circular runs {0,1,2}, {3,4,5}, {6,7,8}, {9,10}.
/// Parts within a run are at cyclic distance at most 2, hence anticomplete.
/// Throws std::invalid_argument when the witness does not verify.
Coloring four_color_t11(const Graph& g, const T11Witness& w);

struct StructuredColoring {
    Coloring coloring;
    std::size_t omega = 0;
    /// True when the Y parts could not be placed into the fixed classes and
    /// the exact 4-coloring search was used instead.
    bool used_fallback = false;
};

/// Classes W[0]+W[3], W[1]+W[4], W[2]+W[5], W[6]; Y vertices are placed into
/// these by backtracking. Throws std::invalid_argument when the witness does
/// not verify and std::runtime_error when no 4-coloring exists.
StructuredColoring four_color_heptagram_type(const Graph& g, const HeptagramTypeWitness& w);

} // namespace heptalab
