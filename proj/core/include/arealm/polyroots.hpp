#ifndef AREALM_POLYROOTS_HPP
#define AREALM_POLYROOTS_HPP

#include <complex>
#include <vector>

#include "arealm/errors.hpp"

namespace arealm::polyroots {

using Complex = std::complex<double>;

// All complex roots of sum_j c_j x^j (constant term first). Leading
// coefficient must be nonzero. Simultaneous Aberth-Ehrlich iteration with a
// companion-matrix eigensolve as fallback; throws NonConvergence if both fail.
std::vector<Complex> roots(const std::vector<Complex>& coeffs);

}  // namespace arealm::polyroots

#endif
