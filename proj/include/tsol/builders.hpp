#ifndef TSOL_BUILDERS_HPP
#define TSOL_BUILDERS_HPP

#include "tsol/tournament.hpp"

namespace tsol {

// Order-4 tournament with edges a>b, a>c, b>c, b>d, c>d, d>a
// (indices a..d = 0..3). Its only covered alternative is c.
tournament t4();

// Regular order-7 tournament: two 3-cycles a>b>c>a and d>e>f>d
// (indices a..g = 0..6), upward edges d>a, e>b, f>c, remaining
// cross edges from {a,b,c} to {d,e,f}, and {d,e,f} > g > {a,b,c}.
tournament t7();

// Order-13 tournament with hard-wired dominator sets; the canonical
// retentiveness counterexample input. Indices 0..12 stand for x1..x13.
tournament t13();

// Two copies of T without alternative a, cross-linked in four blocks:
// X1>Y2, Y2>X2, X2>Y1, Y1>X1, where the 1-blocks are the images of the
// dominators of a and the 2-blocks the images of its dominion.
// X occupies indices [0, n-1), Y indices [n-1, 2(n-1)), both ordered by
// original index. Requires order >= 2.
tournament duplicate_link(const tournament& t, int a);

// Linear order 0 > 1 > ... > n-1.
tournament transitive(int n);

// Cycle 0 > 1 > ... > n-1 > 0 plus, for odd n, i beats the (n-1)/2
// alternatives after it; the rotational regular tournament.
tournament cyclic(int n);

}  // namespace tsol

#endif
