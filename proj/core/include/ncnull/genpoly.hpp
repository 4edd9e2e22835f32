#pragma once

#include <string>
#include <vector>

#include "ncnull/ncpoly.hpp"

namespace ncnull {

/// Alphabet of the m^2 * slots scalar letters y^{(k)}_{ij}. Names are
/// "X1[1,2]" (one-based entry indices); for m = 1 the original names are kept.
AlphabetPtr scalarized_alphabet(const Alphabet& alpha, std::size_t m);

inline std::size_t scalar_letter(std::size_t slot, std::size_t i, std::size_t j, std::size_t m) {
  return (slot * m + i) * m + j;
}

/// m x m matrix over the free algebra in scalarized letters: the image of a
/// generalized polynomial under matrix reduction.
class GenPoly {
 public:
  GenPoly(AlphabetPtr scalar_alpha, std::size_t m);
  static GenPoly constant(AlphabetPtr scalar_alpha, const MatrixExact& a);

  std::size_t m() const noexcept { return m_; }
  const AlphabetPtr& alphabet() const noexcept { return alpha_; }
  const NcPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  NcPoly& at(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }

  bool is_zero() const;
  std::size_t degree() const;
  MatrixExact constant_term() const;

  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const MatrixExact& a, const GenPoly& p);
  friend GenPoly operator*(const GenPoly& p, const MatrixExact& a);
  /// P * Y_slot, where Y_slot is the m x m matrix of its scalar letters.
  GenPoly times_letter(std::size_t slot) const;
  /// The m x m matrix of scalar letters standing for Y_slot.
  static GenPoly letter_matrix(AlphabetPtr scalar_alpha, std::size_t m, std::size_t slot);

  friend bool operator==(const GenPoly& a, const GenPoly& b);
  friend bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

  /// "[p11, p12; p21, p22]"; the bare polynomial when m = 1.
  std::string to_string() const;

  /// Substitutes y^{(k)}_{ij} by block (i, j) of point[k], each (m s) x (m s);
  /// the result is the (m s) x (m s) block matrix of entry values.
  MatrixExact evaluate(const std::vector<MatrixExact>& point) const;

 private:
  AlphabetPtr alpha_;
  std::size_t m_;
  std::vector<NcPoly> entries_;
};

}  // namespace ncnull
