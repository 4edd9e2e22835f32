#include "ncnull/genpoly.hpp"

namespace ncnull {

AlphabetPtr scalarized_alphabet(const Alphabet& alpha, std::size_t m) {
  std::vector<std::string> names;
  names.reserve(alpha.slots() * m * m);
  for (std::size_t s = 0; s < alpha.slots(); ++s) {
    const std::string base = alpha.name(alpha.letter_at(s));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        names.push_back(m == 1 ? base : base + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]");
  }
  return Alphabet::named(std::move(names), false);
}

GenPoly::GenPoly(AlphabetPtr scalar_alpha, std::size_t m)
    : alpha_(std::move(scalar_alpha)), m_(m), entries_(m * m, NcPoly(alpha_)) {}

GenPoly GenPoly::constant(AlphabetPtr scalar_alpha, const MatrixExact& a) {
  GenPoly p(std::move(scalar_alpha), a.rows());
  if (!a.is_square()) throw DimensionMismatch("generalized polynomial constant must be square");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p.at(i, j).add_term(Word(), a(i, j));
  return p;
}

bool GenPoly::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t GenPoly::degree() const {
  std::size_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

MatrixExact GenPoly::constant_term() const {
  MatrixExact r(m_, m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) r(i, j) = (*this)(i, j).coefficient(Word());
  return r;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  if (m_ != o.m_) throw DimensionMismatch("generalized polynomials of different size");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  if (m_ != o.m_) throw DimensionMismatch("generalized polynomials of different size");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  if (a.m_ != b.m_) throw DimensionMismatch("generalized polynomials of different size");
  GenPoly r(a.alpha_, a.m_);
  for (std::size_t i = 0; i < a.m_; ++i)
    for (std::size_t j = 0; j < a.m_; ++j)
      for (std::size_t k = 0; k < a.m_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) r.at(i, j) += a(i, k) * b(k, j);
  return r;
}

GenPoly operator*(const MatrixExact& a, const GenPoly& p) {
  if (a.rows() != p.m_ || a.cols() != p.m_) throw DimensionMismatch("constant factor size");
  GenPoly r(p.alpha_, p.m_);
  for (std::size_t i = 0; i < p.m_; ++i)
    for (std::size_t k = 0; k < p.m_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < p.m_; ++j)
        if (!p(k, j).is_zero()) r.at(i, j) += p(k, j) * a(i, k);
    }
  return r;
}

GenPoly operator*(const GenPoly& p, const MatrixExact& a) {
  if (a.rows() != p.m_ || a.cols() != p.m_) throw DimensionMismatch("constant factor size");
  GenPoly r(p.alpha_, p.m_);
  for (std::size_t i = 0; i < p.m_; ++i)
    for (std::size_t k = 0; k < p.m_; ++k) {
      if (p(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < p.m_; ++j)
        if (!a(k, j).is_zero()) r.at(i, j) += p(i, k) * a(k, j);
    }
  return r;
}

GenPoly GenPoly::times_letter(std::size_t slot) const {
  GenPoly r(alpha_, m_);
  for (std::size_t rr = 0; rr < m_; ++rr)
    for (std::size_t i = 0; i < m_; ++i) {
      const NcPoly& p = (*this)(rr, i);
      if (p.is_zero()) continue;
      for (std::size_t c = 0; c < m_; ++c) {
        const Letter y = alpha_->letter_at(scalar_letter(slot, i, c, m_));
        r.at(rr, c) += p * NcPoly::letter(alpha_, y);
      }
    }
  return r;
}

GenPoly GenPoly::letter_matrix(AlphabetPtr scalar_alpha, std::size_t m, std::size_t slot) {
  return GenPoly::constant(std::move(scalar_alpha), MatrixExact::identity(m)).times_letter(slot);
}

bool operator==(const GenPoly& a, const GenPoly& b) { return a.m_ == b.m_ && a.entries_ == b.entries_; }

std::string GenPoly::to_string() const {
  if (m_ == 1) return entries_.front().to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < m_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
  }
  return s + "]";
}

MatrixExact GenPoly::evaluate(const std::vector<MatrixExact>& point) const {
  if (point.empty()) throw MissingLetter("empty point");
  const std::size_t big = point.front().rows();
  if (big % m_ != 0) throw SizeMismatch("point size must be a multiple of m");
  const std::size_t s = big / m_;
  if (point.size() * m_ * m_ != alpha_->slots()) throw MissingLetter("point does not match the letter count");
  std::vector<MatrixExact> blocks;
  blocks.reserve(alpha_->slots());
  for (const auto& p : point) {
    if (p.rows() != big || p.cols() != big) throw SizeMismatch("point matrices differ in size");
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) blocks.push_back(p.block(i * s, j * s, s, s));
  }
  MatrixExact r(big, big);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      if (!(*this)(i, j).is_zero()) r.set_block(i * s, j * s, eval_poly((*this)(i, j), blocks, StarRule::formal));
  return r;
}

}  // namespace ncnull
