#include "tsol/builders.hpp"

#include <array>

#include "tsol/error.hpp"

namespace tsol {

namespace {

tournament from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> m(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (auto [i, j] : edges) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    return tournament::validate(m);
}

}  // namespace

tournament t4() {
    return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}});
}

tournament t7() {
    std::vector<std::pair<int, int>> edges;
    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6;
    edges.insert(edges.end(), {{a, b}, {b, c}, {c, a}});
    edges.insert(edges.end(), {{d, e}, {e, f}, {f, d}});
    edges.insert(edges.end(), {{d, a}, {e, b}, {f, c}});
    // every other pair between the cycles points downwards
    edges.insert(edges.end(), {{a, e}, {a, f}, {b, d}, {b, f}, {c, d}, {c, e}});
    for (int x : {a, b, c}) edges.emplace_back(g, x);
    for (int x : {d, e, f}) edges.emplace_back(x, g);
    return from_edges(7, edges);
}

tournament t13() {
    // dominator lists, 1-based alternative ids
    static const std::array<std::vector<int>, 13> dominators = {{
        {4, 5, 6, 8, 9, 12},
        {1, 6, 7, 10, 12},
        {1, 2, 6, 7, 9, 10},
        {2, 3, 7, 8, 11},
        {2, 3, 4, 8, 10, 11},
        {4, 5, 9, 11, 12},
        {1, 5, 6, 11, 12, 13},
        {2, 3, 6, 7, 12, 13},
        {2, 4, 5, 7, 8, 13},
        {1, 4, 6, 7, 8, 9, 13},
        {1, 2, 3, 8, 9, 10, 13},
        {3, 4, 5, 9, 10, 11, 13},
        {1, 2, 3, 4, 5, 6},
    }};
    std::vector<std::vector<bool>> m(13, std::vector<bool>(13, false));
    for (int j = 0; j < 13; ++j)
        for (int i : dominators[static_cast<size_t>(j)]) m[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = true;
    return tournament::validate(m);
}

tournament duplicate_link(const tournament& t, int a) {
    t.check_alternative(a);
    int n = t.order();
    if (n < 2) throw error("duplicate_link requires order at least 2");
    int m = n - 1;
    if (2 * m > kMaxOrder) throw resource_limit_error("duplicate_link result order exceeds limit");

    std::vector<int> rest = mask_to_indices(t.all() & ~bit(a));  // ascending originals
    auto x_of = [&](int k) { return k; };
    auto y_of = [&](int k) { return m + k; };

    std::vector<std::vector<bool>> out(static_cast<size_t>(2 * m), std::vector<bool>(static_cast<size_t>(2 * m), false));
    auto set_edge = [&](int i, int j) { out[static_cast<size_t>(i)][static_cast<size_t>(j)] = true; };

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && t.dominates(rest[static_cast<size_t>(i)], rest[static_cast<size_t>(j)])) {
                set_edge(x_of(i), x_of(j));
                set_edge(y_of(i), y_of(j));
            }
        }
    }
    // X1>Y2, Y2>X2, X2>Y1, Y1>X1: the X copy wins exactly across blocks
    for (int i = 0; i < m; ++i) {
        bool x_in_block1 = t.dominates(rest[static_cast<size_t>(i)], a);
        for (int j = 0; j < m; ++j) {
            bool y_in_block1 = t.dominates(rest[static_cast<size_t>(j)], a);
            if (x_in_block1 != y_in_block1)
                set_edge(x_of(i), y_of(j));
            else
                set_edge(y_of(j), x_of(i));
        }
    }
    return tournament::validate(out);
}

tournament transitive(int n) {
    std::vector<std::vector<bool>> m(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    return tournament::validate(m);
}

tournament cyclic(int n) {
    if (n % 2 == 0) throw error("cyclic builder requires odd order");
    std::vector<std::vector<bool>> m(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= (n - 1) / 2; ++k) m[static_cast<size_t>(i)][static_cast<size_t>((i + k) % n)] = true;
    return tournament::validate(m);
}

}  // namespace tsol
