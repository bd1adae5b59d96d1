#include "rigikit/modular.hpp"

#include <stdexcept>

namespace rigikit::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a) {
  if (a == 0) throw std::domain_error("modp::inverse of zero");
  return pow(a, kPrime - 2);
}

std::uint64_t from_signed(std::int64_t x) {
  if (x >= 0) return static_cast<std::uint64_t>(x) % kPrime;
  const std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return neg(mag % kPrime);
}

std::uint64_t Sampler::next() {
  for (;;) {
    const std::uint64_t x = engine_() >> 3;
    if (x < kPrime) return x;
  }
}

std::uint64_t Sampler::next_nonzero() {
  for (;;) {
    const std::uint64_t x = next();
    if (x != 0) return x;
  }
}

void RowSpace::reduce(Row& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t factor = row[pivots_[i]];
    if (factor == 0) continue;
    const Row& basis = rows_[i];
    for (std::size_t c = pivots_[i]; c < columns_; ++c) {
      if (basis[c] != 0) row[c] = sub(row[c], mul(factor, basis[c]));
    }
  }
}

bool RowSpace::insert(Row row) {
  if (row.size() != columns_) throw std::invalid_argument("RowSpace: row width mismatch");
  reduce(row);
  std::size_t pivot = 0;
  while (pivot < columns_ && row[pivot] == 0) ++pivot;
  if (pivot == columns_) return false;
  const std::uint64_t inv = inverse(row[pivot]);
  for (std::size_t c = pivot; c < columns_; ++c) row[c] = mul(row[c], inv);
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::spans(Row row) const {
  if (row.size() != columns_) throw std::invalid_argument("RowSpace: row width mismatch");
  reduce(row);
  for (std::uint64_t x : row)
    if (x != 0) return false;
  return true;
}

std::size_t rank(std::span<const Row> rows, std::size_t columns) {
  RowSpace space(columns);
  for (const Row& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace rigikit::modp
