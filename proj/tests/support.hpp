#pragma once

#include <initializer_list>
#include <random>

#include "pgma/linalg.hpp"

namespace testing {

inline const pgma::Field Q = pgma::Field::rationals();

inline pgma::Vec vec(std::initializer_list<long> xs, const pgma::Field& f = Q) {
  pgma::Vec v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

inline pgma::Matrix mat(std::size_t rows, std::size_t cols, std::initializer_list<long> xs,
                        const pgma::Field& f = Q) {
  return pgma::Matrix(f, rows, cols, vec(xs, f));
}

/// Fixed seed everywhere so failures reproduce.
inline std::mt19937_64 rng(unsigned salt = 0) { return std::mt19937_64(0x5eed0000ull + salt); }

inline pgma::Vec random_vec(std::mt19937_64& g, std::size_t n, long lo = -3, long hi = 3, const pgma::Field& f = Q) {
  std::uniform_int_distribution<long> d(lo, hi);
  pgma::Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(d(g)));
  return v;
}

}  // namespace testing
