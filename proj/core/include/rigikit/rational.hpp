#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace rigikit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  /// Copy with the listed rows only.
  RationalMatrix select_rows(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Bareiss fraction-free elimination after clearing denominators
/// row by row.
std::size_t rank_fraction_free(const RationalMatrix& m);

/// Basis of the right null space {x : m x = 0}, from the reduced row
/// echelon form. One vector per free column, in column order.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// `[numerator, denominator]`; components are JSON integers when they fit in
/// 64 bits and decimal strings otherwise.
nlohmann::json rational_to_json(const Rational& q);
/// Accepts `[n, d]` (integers or decimal strings) or a bare integer.
Rational rational_from_json(const nlohmann::json& j, const std::string& location);

}  // namespace rigikit
