#ifndef TSOL_COMPONENTS_HPP
#define TSOL_COMPONENTS_HPP

#include <vector>

#include "tsol/tournament.hpp"

namespace tsol {

// A partition of the alternatives into components together with the
// quotient tournament on the blocks. Blocks are kept sorted by their
// lowest member; summary vertex i corresponds to blocks[i].
struct decomposition {
    std::vector<mask_t> blocks;
    tournament summary;
};

// True iff every outside alternative relates uniformly to all of b.
bool is_component(const tournament& t, mask_t b);

// All components (exhaustive subset scan for order <= 12; pair-closure
// heuristic beyond, which may miss exotic unions).
std::vector<mask_t> all_components(const tournament& t);

// Builds a decomposition from a block partition, validating that each
// block is a component.
decomposition decomposition_from_blocks(const tournament& t, std::vector<mask_t> blocks);

// The trivial decompositions plus, for every inclusion-maximal proper
// component, the decomposition isolating it; if the maximal proper
// components tile the whole set, that partition as well.
std::vector<decomposition> find_components(const tournament& t);

// Replaces summary vertex i by parts[i]; parts are relabeled onto
// consecutive index ranges.
tournament product(const tournament& summary, const std::vector<tournament>& parts);

}  // namespace tsol

#endif
