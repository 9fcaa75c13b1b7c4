#ifndef TSOL_ENUMERATE_HPP
#define TSOL_ENUMERATE_HPP

#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tsol/tournament.hpp"

namespace tsol {

inline constexpr int kMaxLabeledOrder = 7;
inline constexpr int kMaxNonisomorphicOrder = 8;

// 2^(n(n-1)/2)
mpz_class labeled_count(int n);

// Streams all labeled tournaments of order n in ascending code order.
// Code bit k (LSB first) decides pair k in the sequence
// (0,1),(0,2),...,(0,n-1),(1,2),...: set = lower index wins.
void enumerate_labeled(int n, const std::function<void(const tournament&)>& f);

tournament labeled_from_code(int n, std::uint64_t code);
std::uint64_t labeled_to_code(const tournament& t);

// Exactly one representative per isomorphism class, in ascending
// matrix order; each representative is in canonical labeling.
// Built by single-vertex extension of the order n-1 classes.
const std::vector<tournament>& nonisomorphic(int n);

// Counts per order 1..8: 1, 1, 2, 4, 12, 56, 456, 6880.
std::size_t nonisomorphic_count(int n);

tournament random_labeled(int n, std::mt19937_64& rng);

}  // namespace tsol

#endif
