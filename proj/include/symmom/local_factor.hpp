#ifndef SYMMOM_LOCAL_FACTOR_HPP
#define SYMMOM_LOCAL_FACTOR_HPP

#include "symmom/conjugacy.hpp"

namespace symmom {

// D(x, Sym^m, g(theta)) = prod_{k=0..m} (1 - x e^{i(m-2k)theta})^{-1}.
// Real and positive for |x| < 1; domain error otherwise.
double local_factor(double x, int m, const ConjugacyClass& c);

// log D(x, Sym^m, g(theta)), computed from the paired factors directly.
double log_local_factor(double x, int m, const ConjugacyClass& c);

}  // namespace symmom

#endif  // SYMMOM_LOCAL_FACTOR_HPP
