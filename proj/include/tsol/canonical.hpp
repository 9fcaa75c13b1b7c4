#ifndef TSOL_CANONICAL_HPP
#define TSOL_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsol/tournament.hpp"

namespace tsol {

// Orders above this refuse canonicalization (resource guard).
inline constexpr int kMaxCanonicalOrder = 10;

// Total-order key: equal iff the tournaments are isomorphic (and, for the
// distinguished variant, some isomorphism maps the marked alternatives to
// each other).
struct certificate {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const certificate&) const = default;
    std::string hex() const;
};

struct canonical_form {
    certificate cert;
    std::vector<int> labeling;  // labeling[new_index] = old_index
};

// Minimizes the relabeled dominance matrix over all permutations
// (prefix-pruned exhaustive search); with `distinguished` set, only
// permutations placing that alternative first are considered.
canonical_form canonical_form_of(const tournament& t, std::optional<int> distinguished = std::nullopt);

certificate canonical_certificate(const tournament& t, std::optional<int> distinguished = std::nullopt);

// The canonical representative itself (relabeled copy of t).
tournament canonical_representative(const tournament& t);

bool isomorphic(const tournament& a, const tournament& b);

}  // namespace tsol

#endif
