#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace garside {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable `t`, stored densely over the
/// exponent window [low(), high()]. The zero polynomial has an empty window.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}

  static LaurentPoly monomial(BigInt c, int exponent);
  /// Parses e.g. "-t", "1 - t^2", "3t^-1 + 2". Throws Error{Parse}.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;
  /// Sum of absolute values of the coefficients.
  BigInt abs_sum() const;
  /// True when the polynomial is c·t^k with c = ±1.
  bool is_unit_monomial() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Value at t = point modulo `prime`; `point_inv` is point^{-1} mod prime.
  std::uint64_t eval_mod(std::uint64_t point, std::uint64_t point_inv, std::uint64_t prime) const;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t dim);

  static LaurentMatrix identity(std::size_t dim);
  /// Rows separated by ';', entries by ','.
  static LaurentMatrix parse(std::string_view text);

  std::size_t dim() const { return dim_; }
  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  LaurentPoly determinant() const;
  /// Exact inverse; requires the determinant to be ±t^k.
  /// Throws Error{NonInvertibleGenerator} otherwise.
  LaurentMatrix inverse() const;

  int min_exponent() const;
  int max_exponent() const;
  /// Max over rows of the summed absolute coefficients (an upper bound on
  /// the ∞-norm growth factor per unit of t-magnitude).
  BigInt row_abs_sum() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<LaurentPoly> entries_;
};

}  // namespace garside
