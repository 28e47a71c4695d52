#ifndef CWHOM_SIMPLIFY_HPP
#define CWHOM_SIMPLIFY_HPP

#include "cwhom/cell_complex.hpp"

namespace cwhom {

/// Homeomorphism-preserving simplification: whenever a k-cell has exactly two
/// cofaces with identical coboundaries and the closures of those cofaces meet
/// exactly in the closed k-cell, the three cells merge into one (k+1)-cell.
/// Scans ascending dimension then ascending index, repeated to a fixpoint.
RegularCW simplify(const RegularCW& x);

} // namespace cwhom

#endif
