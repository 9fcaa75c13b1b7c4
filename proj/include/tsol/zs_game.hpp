#ifndef TSOL_ZS_GAME_HPP
#define TSOL_ZS_GAME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tsol/bits.hpp"
#include "tsol/tournament.hpp"

namespace tsol {

// g[a][b] = 1 if a beats b, -1 if b beats a, 0 on the diagonal.
std::vector<std::vector<int>> skew_adjacency(const tournament& t);

// The unique symmetric equilibrium of the skew-adjacency game, with the
// data needed to certify it: odd support, odd cleared weights, strictly
// positive slack on every unchosen column.
struct equilibrium {
    std::vector<mpq_class> probabilities;
    mask_t support = 0;
    std::vector<mpz_class> scaled_weights;  // probabilities cleared of denominators, gcd 1
};

// Phase-1 simplex over exact rationals with Bland's rule; every returned
// equilibrium has passed certification (feasibility, odd support, odd
// weights, strict off-support slacks). Certification failure throws
// invariant_error.
equilibrium maximin(const tournament& t);

// Independent oracle: enumerates candidate supports of odd size
// (ascending size, then ascending mask) and solves the support system
// directly. Guarded to order 13.
equilibrium maximin_support_enumeration(const tournament& t);

inline constexpr int kMaxSupportEnumerationOrder = 13;

// a is in the support of the full equilibrium iff, in the tournament
// without a, the equilibrium puts more mass on a's dominion than on its
// dominators. Requires order >= 2.
bool membership_test(const tournament& t, int a);

std::string equilibrium_to_json(const equilibrium& e);

}  // namespace tsol

#endif
