#include "rigikit/rational.hpp"

#include <limits>
#include <utility>

#include "rigikit/errors.hpp"

namespace rigikit {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& keep) const {
  RationalMatrix out(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep[i], c);
  return out;
}

std::size_t rank_fraction_free(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RationalMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

namespace {

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError(where, "not a decimal integer");
    return z;
  }
  throw InputError(where, "expected an integer or a decimal string");
}

}  // namespace

nlohmann::json rational_to_json(const Rational& q) {
  return nlohmann::json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where, "rational must be [numerator, denominator]");
    Integer num = integer_from_json(j[0], where + "[0]");
    Integer den = integer_from_json(j[1], where + "[1]");
    if (den == 0) throw InputError(where, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return Rational(integer_from_json(j, where));
}

}  // namespace rigikit
