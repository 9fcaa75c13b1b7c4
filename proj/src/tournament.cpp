#include "tsol/tournament.hpp"

#include <istream>
#include <sstream>

#include "tsol/error.hpp"

namespace tsol {

tournament::tournament(int n, std::vector<mask_t> rows) : n_(n), rows_(std::move(rows)) {
    cols_.assign(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        for_each_bit(rows_[static_cast<size_t>(i)], [&](int j) { cols_[static_cast<size_t>(j)] |= bit(i); });
    }
}

tournament tournament::from_rows(int n, std::vector<mask_t> rows) {
    if (n < 1 || n > kMaxOrder) throw resource_limit_error("tournament order out of range: " + std::to_string(n));
    if (static_cast<int>(rows.size()) != n) throw invariant_error("from_rows: row count mismatch");
    return tournament(n, std::move(rows));
}

tournament tournament::validate(const std::vector<std::vector<bool>>& matrix) {
    int n = static_cast<int>(matrix.size());
    if (n < 1) throw parse_error("tournament must have at least one alternative");
    if (n > kMaxOrder) throw resource_limit_error("tournament order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxOrder));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[static_cast<size_t>(i)].size()) != n)
            throw parse_error("matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int i = 0; i < n; ++i) {
        if (matrix[static_cast<size_t>(i)][static_cast<size_t>(i)])
            throw parse_error("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") must be false");
        for (int j = i + 1; j < n; ++j) {
            bool ij = matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
            bool ji = matrix[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (ij == ji)
                throw parse_error(std::string("pair (") + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                  (ij ? "symmetric" : "unrelated") + "; exactly one direction required");
        }
    }
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]) rows[static_cast<size_t>(i)] |= bit(j);
    return tournament(n, std::move(rows));
}

void tournament::check_alternative(int a) const {
    if (a < 0 || a >= n_) throw error("alternative " + std::to_string(a) + " out of range for order " + std::to_string(n_));
}

std::vector<std::uint8_t> tournament::matrix_bytes() const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n_));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | (dominates(i, j) ? 1 : 0));
            if (++nbits == 8) {
                out.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return out;
}

std::strong_ordering operator<=>(const tournament& a, const tournament& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    // row-major cell order; raw row words would compare high column bits first
    for (int i = 0; i < a.n_; ++i) {
        for (int j = 0; j < a.n_; ++j) {
            bool x = a.dominates(i, j), y = b.dominates(i, j);
            if (x != y) return x <=> y;
        }
    }
    return std::strong_ordering::equal;
}

bool operator==(const tournament& a, const tournament& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
}

mask_t restriction::to_original(mask_t sub_mask) const {
    mask_t out = 0;
    for_each_bit(sub_mask, [&](int i) { out |= bit(members[static_cast<size_t>(i)]); });
    return out;
}

mask_t restriction::to_sub(mask_t original_mask) const {
    mask_t out = 0;
    for (size_t i = 0; i < members.size(); ++i)
        if (contains(original_mask, members[i])) out |= bit(static_cast<int>(i));
    return out;
}

restriction restrict(const tournament& t, mask_t subset) {
    if (subset == 0) throw error("cannot restrict to the empty set");
    if (!subset_of(subset, t.all())) throw error("restriction set not within the tournament");
    std::vector<int> members = mask_to_indices(subset);
    int m = static_cast<int>(members.size());
    std::vector<mask_t> rows(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        mask_t dom = t.dominion_in(members[static_cast<size_t>(i)], subset);
        for (int j = 0; j < m; ++j)
            if (contains(dom, members[static_cast<size_t>(j)])) rows[static_cast<size_t>(i)] |= bit(j);
    }
    return restriction{tournament::from_rows(m, std::move(rows)), std::move(members)};
}

tournament local_reverse(const tournament& t, int a) {
    t.check_alternative(a);
    int n = t.order();
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = t.dominion(i);
    mask_t others = t.all() & ~bit(a);
    rows[static_cast<size_t>(a)] = t.dominators(a);
    for_each_bit(others, [&](int i) {
        if (t.dominates(i, a))
            rows[static_cast<size_t>(i)] &= ~bit(a);
        else
            rows[static_cast<size_t>(i)] |= bit(a);
    });
    return tournament::from_rows(n, std::move(rows));
}

tournament reverse_all(const tournament& t) {
    int n = t.order();
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = t.dominators(i);
    return tournament::from_rows(n, std::move(rows));
}

tournament with_edge_flipped(const tournament& t, int i, int j) {
    t.check_alternative(i);
    t.check_alternative(j);
    if (i == j) throw error("cannot flip a loop edge");
    int n = t.order();
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) rows[static_cast<size_t>(k)] = t.dominion(k);
    if (t.dominates(i, j)) {
        rows[static_cast<size_t>(i)] &= ~bit(j);
        rows[static_cast<size_t>(j)] |= bit(i);
    } else {
        rows[static_cast<size_t>(j)] &= ~bit(i);
        rows[static_cast<size_t>(i)] |= bit(j);
    }
    return tournament::from_rows(n, std::move(rows));
}

tournament apply_permutation(const tournament& t, const std::vector<int>& perm) {
    int n = t.order();
    if (static_cast<int>(perm.size()) != n) throw error("permutation length mismatch");
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && t.dominates(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                rows[static_cast<size_t>(i)] |= bit(j);
    return tournament::from_rows(n, std::move(rows));
}

bool is_regular(const tournament& t) {
    int n = t.order();
    for (int a = 0; a < n; ++a)
        if (t.out_degree(a) != t.in_degree(a)) return false;
    return true;
}

bool covers(const tournament& t, int a, int b) {
    t.check_alternative(a);
    t.check_alternative(b);
    if (a == b) throw error("covering is only defined for distinct alternatives");
    return subset_of(t.dominion(b), t.dominion(a));
}

std::optional<int> condorcet_winner(const tournament& t) {
    for (int a = 0; a < t.order(); ++a)
        if (t.dominion(a) == (t.all() & ~bit(a))) return a;
    return std::nullopt;
}

std::optional<int> condorcet_loser(const tournament& t) {
    for (int a = 0; a < t.order(); ++a)
        if (t.dominators(a) == (t.all() & ~bit(a))) return a;
    return std::nullopt;
}

tournament parse_trn(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("trn: missing order line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw parse_error("trn: trailing characters after order");
    } catch (const std::invalid_argument&) {
        throw parse_error("trn: order line is not a number: '" + line + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("trn: order out of range: '" + line + "'");
    }
    if (n < 1) throw parse_error("trn: order must be at least 1");
    if (n > kMaxOrder) throw resource_limit_error("trn: order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxOrder));
    std::vector<std::vector<bool>> matrix(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw parse_error("trn: missing matrix line " + std::to_string(i + 1));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n)
            throw parse_error("trn: matrix line " + std::to_string(i + 1) + " has length " + std::to_string(line.size()) + ", expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            char c = line[static_cast<size_t>(j)];
            if (c == '1')
                matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
            else if (c != '0')
                throw parse_error(std::string("trn: invalid character '") + c + "' at line " + std::to_string(i + 2) + ", column " + std::to_string(j + 1));
        }
    }
    return tournament::validate(matrix);
}

tournament parse_trn_string(const std::string& text) {
    std::istringstream in(text);
    return parse_trn(in);
}

std::string format_trn(const tournament& t) {
    std::string out = std::to_string(t.order());
    out += '\n';
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j) out += t.dominates(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace tsol
