#include "tsol/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "tsol/canonical.hpp"
#include "tsol/error.hpp"

namespace tsol {

mpz_class labeled_count(int n) {
    if (n < 1) throw error("order must be positive");
    mpz_class one = 1;
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(n) * (static_cast<mp_bitcnt_t>(n) - 1) / 2);
    return out;
}

tournament labeled_from_code(int n, std::uint64_t code) {
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if ((code >> k) & 1)
                rows[static_cast<size_t>(i)] |= bit(j);
            else
                rows[static_cast<size_t>(j)] |= bit(i);
        }
    }
    return tournament::from_rows(n, std::move(rows));
}

std::uint64_t labeled_to_code(const tournament& t) {
    std::uint64_t code = 0;
    int k = 0;
    for (int i = 0; i < t.order(); ++i)
        for (int j = i + 1; j < t.order(); ++j, ++k)
            if (t.dominates(i, j)) code |= std::uint64_t{1} << k;
    return code;
}

void enumerate_labeled(int n, const std::function<void(const tournament&)>& f) {
    if (n < 1) throw error("order must be positive");
    if (n > kMaxLabeledOrder)
        throw resource_limit_error("labeled enumeration limited to order " + std::to_string(kMaxLabeledOrder));
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) f(labeled_from_code(n, code));
}

const std::vector<tournament>& nonisomorphic(int n) {
    if (n < 1) throw error("order must be positive");
    if (n > kMaxNonisomorphicOrder)
        throw resource_limit_error("non-isomorphic enumeration limited to order " + std::to_string(kMaxNonisomorphicOrder));
    static std::mutex mutex;
    static std::vector<std::vector<tournament>> table;  // table[k] = order k+1
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) < n) {
        int next = static_cast<int>(table.size()) + 1;
        if (next == 1)
            table.push_back({tournament::from_rows(1, {0})});
        else {
            // recursion bottoms out: previous order is already in the table
            const std::vector<tournament>& prev = table[static_cast<size_t>(next - 2)];
            std::map<certificate, tournament> classes;
            for (const tournament& base : prev) {
                mask_t patterns = full_mask(next - 1);
                for (mask_t p = 0;; ++p) {
                    std::vector<mask_t> rows(static_cast<size_t>(next), 0);
                    for (int i = 0; i < next - 1; ++i) {
                        rows[static_cast<size_t>(i)] = base.dominion(i);
                        if (!contains(p, i)) rows[static_cast<size_t>(i)] |= bit(next - 1);
                    }
                    rows[static_cast<size_t>(next - 1)] = p;
                    tournament cand = tournament::from_rows(next, std::move(rows));
                    canonical_form form = canonical_form_of(cand);
                    if (!classes.count(form.cert)) classes.emplace(form.cert, apply_permutation(cand, form.labeling));
                    if (p == patterns) break;
                }
            }
            std::vector<tournament> out;
            out.reserve(classes.size());
            for (auto& [cert, t] : classes) out.push_back(t);
            std::sort(out.begin(), out.end());
            table.push_back(std::move(out));
        }
    }
    return table[static_cast<size_t>(n - 1)];
}

std::size_t nonisomorphic_count(int n) {
    return nonisomorphic(n).size();
}

tournament random_labeled(int n, std::mt19937_64& rng) {
    if (n < 1) throw error("order must be positive");
    if (n > kMaxOrder) throw resource_limit_error("order exceeds limit");
    std::vector<mask_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1)
                rows[static_cast<size_t>(i)] |= bit(j);
            else
                rows[static_cast<size_t>(j)] |= bit(i);
        }
    }
    return tournament::from_rows(n, std::move(rows));
}

}  // namespace tsol
