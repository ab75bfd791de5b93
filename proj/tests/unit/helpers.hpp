#pragma once

#include "hodgealg/matrix.hpp"
#include "hodgealg/random.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::Mat to_oracle(const hodgealg::RationalMatrix& m) {
  oracle::Mat o(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) o[i][j] = m(i, j);
  return o;
}

inline hodgealg::RationalMatrix random_matrix(hodgealg::Rng& rng, std::size_t r, std::size_t c, long bound = 3,
                                              int zero_bias = 0) {
  hodgealg::RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero_bias && rng.below(static_cast<std::uint64_t>(zero_bias + 1)) != 0) continue;
      m(i, j) = hodgealg::make_rational(rng.range(-bound, bound), rng.range(1, 3));
    }
  return m;
}

inline hodgealg::RationalMatrix random_symmetric(hodgealg::Rng& rng, std::size_t n, long bound = 3, int zero_bias = 0) {
  auto m = random_matrix(rng, n, n, bound, zero_bias);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

}  // namespace testutil
