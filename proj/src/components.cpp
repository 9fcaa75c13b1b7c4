#include "tsol/components.hpp"

#include <algorithm>
#include <set>

#include "tsol/error.hpp"

namespace tsol {

bool is_component(const tournament& t, mask_t b) {
    if (b == 0 || !subset_of(b, t.all())) return false;
    mask_t outside = t.all() & ~b;
    bool ok = true;
    for_each_bit(outside, [&](int a) {
        mask_t beats_a = t.dominators_in(a, b);
        if (beats_a != 0 && beats_a != b) ok = false;
    });
    return ok;
}

namespace {

inline constexpr int kExhaustiveComponentOrder = 12;

// Smallest component containing the given seed set.
mask_t component_closure(const tournament& t, mask_t seed) {
    mask_t b = seed;
    bool grew = true;
    while (grew && b != t.all()) {
        grew = false;
        mask_t outside = t.all() & ~b;
        for_each_bit(outside, [&](int a) {
            mask_t beats_a = t.dominators_in(a, b);
            if (beats_a != 0 && beats_a != b) {
                b |= bit(a);
                grew = true;
            }
        });
    }
    return b;
}

}  // namespace

std::vector<mask_t> all_components(const tournament& t) {
    std::vector<mask_t> out;
    if (t.order() <= kExhaustiveComponentOrder) {
        for_each_nonempty_subset(t.all(), [&](mask_t b) {
            if (is_component(t, b)) out.push_back(b);
        });
        return out;
    }
    // pair-closure heuristic: closures of all pairs, then merge overlaps
    std::set<mask_t> found;
    for (int i = 0; i < t.order(); ++i) found.insert(bit(i));
    found.insert(t.all());
    for (int i = 0; i < t.order(); ++i)
        for (int j = i + 1; j < t.order(); ++j) found.insert(component_closure(t, bit(i) | bit(j)));
    bool merged = true;
    while (merged) {
        merged = false;
        for (auto it1 = found.begin(); it1 != found.end() && !merged; ++it1)
            for (auto it2 = std::next(it1); it2 != found.end() && !merged; ++it2) {
                if ((*it1 & *it2) != 0 && !subset_of(*it1, *it2) && !subset_of(*it2, *it1)) {
                    mask_t u = *it1 | *it2;
                    if (is_component(t, u) && !found.count(u)) {
                        found.insert(u);
                        merged = true;
                    }
                }
            }
    }
    for (mask_t b : found)
        if (is_component(t, b)) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

decomposition decomposition_from_blocks(const tournament& t, std::vector<mask_t> blocks) {
    if (blocks.empty()) throw error("decomposition needs at least one block");
    mask_t seen = 0;
    for (mask_t b : blocks) {
        if (b == 0) throw error("decomposition block must be nonempty");
        if ((seen & b) != 0) throw error("decomposition blocks overlap");
        if (!is_component(t, b)) throw error("decomposition block " + mask_to_string(b) + " is not a component");
        seen |= b;
    }
    if (seen != t.all()) throw error("decomposition blocks do not cover the tournament");
    std::sort(blocks.begin(), blocks.end(), [](mask_t a, mask_t b) { return lowest_bit(a) < lowest_bit(b); });
    int k = static_cast<int>(blocks.size());
    std::vector<mask_t> rows(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        int rep_i = lowest_bit(blocks[static_cast<size_t>(i)]);
        for (int j = 0; j < k; ++j)
            if (i != j && t.dominates(rep_i, lowest_bit(blocks[static_cast<size_t>(j)]))) rows[static_cast<size_t>(i)] |= bit(j);
    }
    return decomposition{std::move(blocks), tournament::from_rows(k, std::move(rows))};
}

std::vector<decomposition> find_components(const tournament& t) {
    std::vector<decomposition> out;
    std::set<std::vector<mask_t>> seen;
    auto add = [&](std::vector<mask_t> blocks) {
        std::sort(blocks.begin(), blocks.end(), [](mask_t a, mask_t b) { return lowest_bit(a) < lowest_bit(b); });
        if (seen.insert(blocks).second) out.push_back(decomposition_from_blocks(t, blocks));
    };

    std::vector<mask_t> singletons;
    for (int i = 0; i < t.order(); ++i) singletons.push_back(bit(i));
    add(singletons);
    add({t.all()});

    std::vector<mask_t> comps = all_components(t);
    std::vector<mask_t> maximal_proper;
    for (mask_t b : comps) {
        if (popcount(b) < 2 || b == t.all()) continue;
        bool is_max = true;
        for (mask_t c : comps)
            if (c != b && c != t.all() && subset_of(b, c)) is_max = false;
        if (is_max) maximal_proper.push_back(b);
    }
    for (mask_t b : maximal_proper) {
        std::vector<mask_t> blocks{b};
        for_each_bit(t.all() & ~b, [&](int i) { blocks.push_back(bit(i)); });
        add(blocks);
    }
    mask_t covered = 0;
    bool disjoint = true;
    for (mask_t b : maximal_proper) {
        if ((covered & b) != 0) disjoint = false;
        covered |= b;
    }
    if (disjoint && !maximal_proper.empty()) {
        std::vector<mask_t> blocks = maximal_proper;
        for_each_bit(t.all() & ~covered, [&](int i) { blocks.push_back(bit(i)); });
        add(blocks);
    }
    return out;
}

tournament product(const tournament& summary, const std::vector<tournament>& parts) {
    if (parts.empty()) throw error("product needs at least one part");
    if (summary.order() != static_cast<int>(parts.size()))
        throw error("summary order must match the number of parts");
    int total = 0;
    std::vector<int> offset(parts.size(), 0);
    for (size_t i = 0; i < parts.size(); ++i) {
        offset[i] = total;
        total += parts[i].order();
    }
    if (total > kMaxOrder) throw resource_limit_error("product order exceeds limit");
    std::vector<std::vector<bool>> m(static_cast<size_t>(total), std::vector<bool>(static_cast<size_t>(total), false));
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int a = 0; a < parts[i].order(); ++a)
            for (int b = 0; b < parts[i].order(); ++b)
                if (parts[i].dominates(a, b)) m[static_cast<size_t>(offset[i] + a)][static_cast<size_t>(offset[i] + b)] = true;
        for (size_t j = 0; j < parts.size(); ++j) {
            if (i == j || !summary.dominates(static_cast<int>(i), static_cast<int>(j))) continue;
            for (int a = 0; a < parts[i].order(); ++a)
                for (int b = 0; b < parts[j].order(); ++b)
                    m[static_cast<size_t>(offset[i] + a)][static_cast<size_t>(offset[j] + b)] = true;
        }
    }
    return tournament::validate(m);
}

}  // namespace tsol
