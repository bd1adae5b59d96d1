#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

// Arithmetic in the prime field of order 2^61 - 1 and row-space bookkeeping
// over it. This is the randomized rank kernel behind both the rigidity
// matroid and the frame matroid.
namespace rigikit::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kPrime - a; }

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const uint128 p = static_cast<uint128>(a) * b;
  std::uint64_t s = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  s = (s & kPrime) + (s >> 61);
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp);

/// Independent stream seed for trial `stream` (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
std::uint64_t inverse(std::uint64_t a);

/// Reduces a signed integer into the field.
std::uint64_t from_signed(std::int64_t x);

/// Uniform field elements from a seeded mt19937_64 (rejection sampling on the
/// top 61 bits, so the stream is identical on every platform).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next();
  std::uint64_t next_nonzero();

 private:
  std::mt19937_64 engine_;
};

using Row = std::vector<std::uint64_t>;

/// Incrementally maintained echelon basis of a row space.
class RowSpace {
 public:
  explicit RowSpace(std::size_t columns) : columns_(columns) {}

  /// Adds the row; returns true iff it was not already in the span.
  bool insert(Row row);
  /// True iff the row lies in the current span.
  bool spans(Row row) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return columns_; }

 private:
  void reduce(Row& row) const;

  std::size_t columns_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(std::span<const Row> rows, std::size_t columns);

}  // namespace rigikit::modp
