#pragma once

#include <complex>

#include <doctest.h>

#include "entrate/gaussian_core.hpp"

// Purely relative comparison; doctest's default Approx adds an absolute floor
// of epsilon, which hides errors in small quantities.
inline doctest::Approx near(double value, double rel_tol) {
  return doctest::Approx(value).epsilon(rel_tol).scale(0.0);
}

inline entrate::CorrelatorTriple triple(double n_plus, double n_minus, std::complex<double> xi) {
  entrate::CorrelatorTriple t;
  t.n_plus = n_plus;
  t.n_minus = n_minus;
  t.xi = xi;
  return t;
}
