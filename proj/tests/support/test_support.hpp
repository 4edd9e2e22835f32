#pragma once

#include <ncnull/ncpoly.hpp>
#include <ncnull/rng.hpp>

namespace ncnull::testing {

inline Scalar random_scalar(CounterRng& rng, long range = 3, bool complex = false) {
  const long span = 2 * range + 1;
  Rational re(static_cast<long>(rng.below(span)) - range, static_cast<long>(rng.below(3)) + 1);
  re.canonicalize();
  if (!complex) return Scalar(re);
  Rational im(static_cast<long>(rng.below(span)) - range, static_cast<long>(rng.below(2)) + 1);
  im.canonicalize();
  return Scalar(re, im);
}

inline MatrixExact random_exact(CounterRng& rng, std::size_t rows, std::size_t cols, long range = 3,
                                bool complex = false) {
  MatrixExact a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_scalar(rng, range, complex);
  return a;
}

inline NcPoly random_poly(CounterRng& rng, const AlphabetPtr& alpha, std::size_t max_len, std::size_t terms,
                          bool complex = true) {
  NcPoly p(alpha);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Letter> w;
    const std::size_t len = rng.below(max_len + 1);
    for (std::size_t k = 0; k < len; ++k) w.push_back(alpha->letter_at(rng.below(alpha->slots())));
    p.add_term(Word(std::move(w)), random_scalar(rng, 3, complex));
  }
  return p;
}

inline MatrixExact unit(std::size_t n, std::size_t i, std::size_t j) { return MatrixExact::unit(n, i, j); }

}  // namespace ncnull::testing
