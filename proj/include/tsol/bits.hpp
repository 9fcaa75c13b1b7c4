#ifndef TSOL_BITS_HPP
#define TSOL_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tsol {

// Alternative sets are bitmasks over dense indices; bit i = alternative i.
using mask_t = std::uint32_t;

constexpr mask_t bit(int i) {
    return mask_t{1} << i;
}

constexpr mask_t full_mask(int n) {
    return n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

constexpr int popcount(mask_t m) {
    return std::popcount(m);
}

constexpr bool contains(mask_t m, int i) {
    return (m >> i) & 1u;
}

constexpr bool subset_of(mask_t a, mask_t b) {
    return (a & ~b) == 0;
}

constexpr int lowest_bit(mask_t m) {
    return std::countr_zero(m);
}

template <typename F>
void for_each_bit(mask_t m, F&& f) {
    while (m) {
        int i = std::countr_zero(m);
        f(i);
        m &= m - 1;
    }
}

inline std::vector<int> mask_to_indices(mask_t m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(m)));
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return out;
}

inline mask_t indices_to_mask(const std::vector<int>& idx) {
    mask_t m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

// Visits every nonempty submask of m, ascending as integers.
template <typename F>
void for_each_nonempty_subset(mask_t m, F&& f) {
    if (m == 0) return;
    mask_t s = m & (~m + 1);  // lowest set bit = smallest nonempty submask
    for (;;) {
        f(s);
        if (s == m) break;
        s = (s - m) & m;  // next submask of m above s
    }
}

// "{0,2,3}" rendering used in error messages and reports.
inline std::string mask_to_string(mask_t m) {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](int i) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    });
    s += "}";
    return s;
}

}  // namespace tsol

#endif
