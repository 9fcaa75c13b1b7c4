#ifndef TSOL_TOURNAMENT_HPP
#define TSOL_TOURNAMENT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsol/bits.hpp"

namespace tsol {

// Largest order representable with single-word row bitsets.
inline constexpr int kMaxOrder = 31;

// A complete asymmetric digraph on n alternatives. Row i holds the
// dominion of alternative i as dense index bits; immutable after
// construction, so all queries are safe to run concurrently.
class tournament {
public:
    // Checks irreflexivity and asymmetry/connexity; reports the first
    // violating cell (row-major scan) via parse_error.
    static tournament validate(const std::vector<std::vector<bool>>& matrix);

    // Trusted constructor for internal call sites that build rows directly.
    static tournament from_rows(int n, std::vector<mask_t> rows);

    int order() const { return n_; }
    mask_t all() const { return full_mask(n_); }

    bool dominates(int i, int j) const { return contains(rows_[static_cast<size_t>(i)], j); }

    // D(a) and D-bar(a), optionally restricted to a feasible subset.
    mask_t dominion(int a) const { return rows_[static_cast<size_t>(a)]; }
    mask_t dominators(int a) const { return cols_[static_cast<size_t>(a)]; }
    mask_t dominion_in(int a, mask_t within) const { return rows_[static_cast<size_t>(a)] & within; }
    mask_t dominators_in(int a, mask_t within) const { return cols_[static_cast<size_t>(a)] & within; }

    int out_degree(int a) const { return popcount(dominion(a)); }
    int in_degree(int a) const { return popcount(dominators(a)); }

    // Row-major bit encoding; total order used for deterministic reports.
    std::vector<std::uint8_t> matrix_bytes() const;
    friend std::strong_ordering operator<=>(const tournament& a, const tournament& b);
    friend bool operator==(const tournament& a, const tournament& b);

    void check_alternative(int a) const;  // throws on out-of-range

private:
    tournament(int n, std::vector<mask_t> rows);

    int n_;
    std::vector<mask_t> rows_;  // rows_[i] bit j: i beats j
    std::vector<mask_t> cols_;  // cols_[j] bit i: i beats j
};

struct restriction {
    tournament sub;            // dense re-indexed subtournament
    std::vector<int> members;  // members[new_index] = original index

    mask_t to_original(mask_t sub_mask) const;
    mask_t to_sub(mask_t original_mask) const;  // original_mask must be within members
};

restriction restrict(const tournament& t, mask_t subset);

// T^a: all edges incident to a flipped.
tournament local_reverse(const tournament& t, int a);

// T-bar: every edge reversed.
tournament reverse_all(const tournament& t);

// Single-edge reversal; used by monotonicity checks.
tournament with_edge_flipped(const tournament& t, int i, int j);

// Relabels so that new index i is old index perm[i].
tournament apply_permutation(const tournament& t, const std::vector<int>& perm);

bool is_regular(const tournament& t);

// a covers b iff D(b) is contained in D(a); requires a != b.
bool covers(const tournament& t, int a, int b);

std::optional<int> condorcet_winner(const tournament& t);
std::optional<int> condorcet_loser(const tournament& t);

// .trn text format: first line n, then n lines of n '0'/'1' characters,
// char j of matrix line i set iff i dominates j. Bit-exact writer.
tournament parse_trn(std::istream& in);
tournament parse_trn_string(const std::string& text);
std::string format_trn(const tournament& t);

}  // namespace tsol

#endif
