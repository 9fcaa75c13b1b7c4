#include "tsol/canonical.hpp"

#include <mutex>
#include <unordered_map>

#include "tsol/error.hpp"

namespace tsol {

namespace {

// Bit order for the minimized matrix: when a vertex is placed at position
// k, its row bits against positions 0..k-1 are revealed, then its column
// bits. Any fixed cell order yields a valid canonical key; this one lets
// the search prune on partial assignments.
struct canon_search {
    const tournament& t;
    int n;
    bool has_root;
    int root;

    bool found = false;
    std::vector<std::uint8_t> best;     // bit per entry
    std::vector<int> best_perm;
    std::vector<std::uint8_t> current;
    std::vector<int> perm;
    std::vector<bool> used;

    explicit canon_search(const tournament& t_, std::optional<int> distinguished)
        : t(t_), n(t_.order()), has_root(distinguished.has_value()), root(distinguished.value_or(0)) {
        size_t total = static_cast<size_t>(n) * static_cast<size_t>(n - 1);
        best.assign(total, 2);  // 2 = +infinity sentinel
        best_perm.assign(static_cast<size_t>(n), 0);
        current.assign(total, 0);
        perm.assign(static_cast<size_t>(n), 0);
        used.assign(static_cast<size_t>(n), false);
    }

    void run() {
        if (has_root) {
            perm[0] = root;
            used[static_cast<size_t>(root)] = true;
            place(1, 0, false);
        } else {
            place(0, 0, false);
        }
    }

    // offset = number of bits already emitted; strictly_less = current
    // prefix already beats best.
    void place(int k, size_t offset, bool strictly_less) {
        if (k == n) {
            if (strictly_less || !found) {
                best = current;
                best_perm = perm;
                found = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            size_t pos = offset;
            bool less = strictly_less;
            bool pruned = false;
            for (int phase = 0; phase < 2 && !pruned; ++phase) {
                for (int j = 0; j < k; ++j) {
                    std::uint8_t b = phase == 0 ? (t.dominates(v, perm[static_cast<size_t>(j)]) ? 1 : 0)
                                                : (t.dominates(perm[static_cast<size_t>(j)], v) ? 1 : 0);
                    if (!less) {
                        std::uint8_t bb = best[pos];
                        if (b > bb) {
                            pruned = true;
                            break;
                        }
                        if (b < bb) less = true;
                    }
                    current[pos++] = b;
                }
            }
            if (pruned) continue;
            perm[static_cast<size_t>(k)] = v;
            used[static_cast<size_t>(v)] = true;
            place(k + 1, pos, less);
            used[static_cast<size_t>(v)] = false;
        }
    }
};

std::string cache_key(const tournament& t, std::optional<int> distinguished) {
    auto raw = t.matrix_bytes();
    std::string key(raw.begin(), raw.end());
    key.push_back(static_cast<char>(distinguished ? *distinguished + 1 : 0));
    return key;
}

std::mutex g_cache_mutex;
std::unordered_map<std::string, canonical_form>& cache() {
    static std::unordered_map<std::string, canonical_form> c;
    return c;
}

}  // namespace

std::string certificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

canonical_form canonical_form_of(const tournament& t, std::optional<int> distinguished) {
    if (t.order() > kMaxCanonicalOrder)
        throw resource_limit_error("canonical form limited to order " + std::to_string(kMaxCanonicalOrder) +
                                   ", got " + std::to_string(t.order()));
    if (distinguished) t.check_alternative(*distinguished);

    std::string key = cache_key(t, distinguished);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }

    canon_search search(t, distinguished);
    search.run();

    canonical_form result;
    result.labeling = search.best_perm;
    result.cert.bytes.push_back(distinguished ? 1 : 0);
    result.cert.bytes.push_back(static_cast<std::uint8_t>(t.order()));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (std::uint8_t b : search.best) {
        acc = static_cast<std::uint8_t>((acc << 1) | b);
        if (++nbits == 8) {
            result.cert.bytes.push_back(acc);
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) result.cert.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));

    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        cache().emplace(key, result);
    }
    return result;
}

certificate canonical_certificate(const tournament& t, std::optional<int> distinguished) {
    return canonical_form_of(t, distinguished).cert;
}

tournament canonical_representative(const tournament& t) {
    return apply_permutation(t, canonical_form_of(t).labeling);
}

bool isomorphic(const tournament& a, const tournament& b) {
    if (a.order() != b.order()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace tsol
