#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "combmat/matrix.hpp"

namespace combmat {

enum class Group {
  general_linear,
  special_linear_integer,
  upper_triangular,
  lower_triangular,
  diagonal,
  orthogonal,
  permutation,
};

std::string to_string(Group g);
/// Throws DomainError for unknown names.
Group parse_group(std::string_view name);

struct SampleSpec {
  Group group = Group::general_linear;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::uint64_t bound = 5;  // cap on |numerator| and denominator of generated parameters
  std::size_t steps = 0;    // elementary factors for special_linear_integer; 0 means 2 * dim
  int det_sign = 1;         // special_linear_integer and orthogonal only

  /// Throws DomainError when dim, bound or det_sign is invalid.
  void validate() const;
};

/// Seeded generator. The raw engine is std::mt19937_64, whose output sequence
/// is fixed by the C++ standard; bounded draws use rejection sampling on the
/// raw 64-bit output instead of the library distributions, whose algorithms
/// are implementation-defined. The same seed therefore yields the same values
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(std::uint64_t bound);
  Rational nonzero_rational(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent 64-bit seed from a base seed and a stream index
/// (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// A matrix certified to lie in spec.group. Throws Error if a rejection loop
/// exhausts its iteration cap.
Matrix sample(const SampleSpec& spec);

/// Q = (I - S)(I + S)^{-1} for skew-symmetric S. Throws DomainError if S is
/// not skew-symmetric.
Matrix cayley_transform(const Matrix& s);

struct Certification {
  bool member = true;
  std::string reason;  // empty for members
};

Certification certify(const Matrix& m, Group group);

}  // namespace combmat
