// Seeded generators shared by the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "lpkit/lamperti.hpp"
#include "lpkit/laurent.hpp"
#include "lpkit/pnorm.hpp"

namespace testing_support {

using lpkit::Complex;

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

inline Complex unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

inline std::vector<Complex> gaussian_tuple(std::mt19937_64& rng, int n) {
  std::vector<Complex> v;
  for (int i = 0; i < n; ++i) v.push_back(gaussian(rng));
  return v;
}

inline lpkit::CMatrix gaussian_matrix(std::mt19937_64& rng, int n) {
  lpkit::CMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = gaussian(rng);
  }
  return a;
}

// Random Laurent polynomial with exponents in [lo, lo + span], all present.
inline lpkit::LaurentPolynomial random_laurent(std::mt19937_64& rng, int span, int lo = 0) {
  std::map<int, Complex> c;
  for (int m = lo; m <= lo + span; ++m) c[m] = gaussian(rng);
  return lpkit::LaurentPolynomial(std::move(c));
}

// Random spatial isometry built from cycles with lengths in [1, max_cycle].
inline lpkit::SpatialIsometry random_isometry(std::mt19937_64& rng, int max_atoms, int max_cycle = 4,
                                              bool random_weights = true) {
  std::uniform_int_distribution<int> atoms_d(1, max_atoms);
  std::uniform_int_distribution<int> len_d(1, max_cycle);
  std::uniform_real_distribution<double> w_d(0.25, 4.0);
  const int n = atoms_d(rng);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> T(static_cast<std::size_t>(n));
  for (int i = 0; i < n;) {
    const int len = std::min(len_d(rng), n - i);
    for (int k = 0; k < len; ++k) {
      T[static_cast<std::size_t>(order[static_cast<std::size_t>(i + k)])] =
          order[static_cast<std::size_t>(i + (k + 1) % len)];
    }
    i += len;
  }
  std::vector<double> w;
  std::vector<Complex> h;
  for (int i = 0; i < n; ++i) {
    w.push_back(random_weights ? w_d(rng) : 1.0);
    h.push_back(unimodular(rng));
  }
  return lpkit::SpatialIsometry(lpkit::AtomicSpace(std::move(w)), std::move(h), std::move(T));
}

}  // namespace testing_support
