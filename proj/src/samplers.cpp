#include "combmat/samplers.hpp"

#include <numeric>
#include <vector>

#include "combmat/combined.hpp"

namespace combmat {

namespace {

constexpr int kRejectionCap = 10000;

}  // namespace

std::string to_string(Group g) {
  switch (g) {
    case Group::general_linear:
      return "general_linear";
    case Group::special_linear_integer:
      return "special_linear_integer";
    case Group::upper_triangular:
      return "upper_triangular";
    case Group::lower_triangular:
      return "lower_triangular";
    case Group::diagonal:
      return "diagonal";
    case Group::orthogonal:
      return "orthogonal";
    case Group::permutation:
      return "permutation";
  }
  return "unknown";
}

Group parse_group(std::string_view name) {
  for (Group g : {Group::general_linear, Group::special_linear_integer, Group::upper_triangular,
                  Group::lower_triangular, Group::diagonal, Group::orthogonal, Group::permutation}) {
    if (name == to_string(g)) return g;
  }
  throw DomainError("unknown group '" + std::string(name) + "'");
}

void SampleSpec::validate() const {
  if (dim < 1) throw DomainError("sample: dim must be >= 1");
  if (bound < 1) throw DomainError("sample: bound must be >= 1");
  if (det_sign != 1 && det_sign != -1) throw DomainError("sample: det sign must be 1 or -1");
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational Rng::rational(std::uint64_t bound) {
  const auto b = static_cast<std::int64_t>(bound);
  const auto p = between(-b, b);
  const auto q = between(1, b);
  return Rational(static_cast<long>(p), static_cast<long>(q));
}

Rational Rng::nonzero_rational(std::uint64_t bound) {
  for (;;) {
    Rational r = rational(bound);
    if (!r.is_zero()) return r;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix cayley_transform(const Matrix& s) {
  require_square(s, "cayley_transform");
  if (!(transpose(s) == scale(s, Rational(-1)))) {
    throw DomainError("cayley_transform: matrix is not skew-symmetric");
  }
  const Matrix id = Matrix::identity(s.rows());
  // I + S is nonsingular: x^T (I + S) x = |x|^2 for real x.
  return matmul(id - s, inverse(id + s));
}

namespace {

Matrix reflect_first(Matrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, 0) = -m(i, 0);
  return m;
}

Matrix sample_general_linear(const SampleSpec& spec, Rng& rng) {
  const std::size_t n = spec.dim;
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(spec.bound);
    if (!det(m).is_zero()) return m;
  }
  throw Error("sample(general_linear): no nonsingular matrix within the rejection cap");
}

Matrix sample_special_linear(const SampleSpec& spec, Rng& rng) {
  const std::size_t n = spec.dim;
  const std::size_t steps = spec.steps == 0 ? 2 * n : spec.steps;
  Matrix m = Matrix::identity(n);
  if (n >= 2) {
    const auto b = static_cast<std::int64_t>(spec.bound);
    for (std::size_t s = 0; s < steps; ++s) {
      // Elementary row operation: row i += k * row j.
      const auto i = static_cast<std::size_t>(rng.below(n));
      auto j = static_cast<std::size_t>(rng.below(n - 1));
      if (j >= i) ++j;
      std::int64_t k = 0;
      while (k == 0) k = rng.between(-b, b);
      Matrix e = Matrix::identity(n);
      e(i, j) = Rational(static_cast<long>(k));
      m = matmul(e, m);
    }
  }
  if (spec.det_sign < 0) m = reflect_first(std::move(m));  // right-multiply by diag(-1, 1, ..., 1)
  return m;
}

Matrix sample_triangular(const SampleSpec& spec, Rng& rng, bool upper) {
  const std::size_t n = spec.dim;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = rng.nonzero_rational(spec.bound);
      } else if (upper ? j > i : j < i) {
        m(i, j) = rng.rational(spec.bound);
      }
    }
  }
  return m;
}

Matrix sample_diagonal(const SampleSpec& spec, Rng& rng) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < spec.dim; ++i) d.push_back(rng.nonzero_rational(spec.bound));
  return Matrix::diagonal(d);
}

Matrix sample_orthogonal(const SampleSpec& spec, Rng& rng) {
  const std::size_t n = spec.dim;
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = rng.rational(spec.bound);
      s(j, i) = -s(i, j);
    }
  }
  Matrix q = cayley_transform(s);
  if (spec.det_sign < 0) q = reflect_first(std::move(q));
  return q;
}

Matrix sample_permutation(const SampleSpec& spec, Rng& rng) {
  const std::size_t n = spec.dim;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
  return m;
}

}  // namespace

Matrix sample(const SampleSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  switch (spec.group) {
    case Group::general_linear:
      return sample_general_linear(spec, rng);
    case Group::special_linear_integer:
      return sample_special_linear(spec, rng);
    case Group::upper_triangular:
      return sample_triangular(spec, rng, true);
    case Group::lower_triangular:
      return sample_triangular(spec, rng, false);
    case Group::diagonal:
      return sample_diagonal(spec, rng);
    case Group::orthogonal:
      return sample_orthogonal(spec, rng);
    case Group::permutation:
      return sample_permutation(spec, rng);
  }
  throw DomainError("sample: unknown group");
}

Certification certify(const Matrix& m, Group group) {
  if (!m.is_square()) return {false, "not square"};
  const std::size_t n = m.rows();
  const Rational d = det(m);
  if (d.is_zero()) return {false, "det = 0"};
  switch (group) {
    case Group::general_linear:
      return {};
    case Group::special_linear_integer:
      for (const auto& x : m.entries()) {
        if (!x.is_integer()) return {false, "non-integer entry " + x.str()};
      }
      if (d != Rational(1) && d != Rational(-1)) return {false, "det = " + d.str()};
      return {};
    case Group::upper_triangular:
      if (!is_upper_triangular(m)) return {false, "nonzero entry below the diagonal"};
      return {};
    case Group::lower_triangular:
      if (!is_lower_triangular(m)) return {false, "nonzero entry above the diagonal"};
      return {};
    case Group::diagonal:
      if (!is_diagonal(m)) return {false, "nonzero off-diagonal entry"};
      return {};
    case Group::orthogonal:
      if (!is_orthogonal(m)) return {false, "M M^T != I"};
      return {};
    case Group::permutation:
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones_in_row = 0;
        std::size_t ones_in_col = 0;
        for (std::size_t j = 0; j < n; ++j) {
          for (const Rational* x : {&m(i, j), &m(j, i)}) {
            if (!x->is_zero() && *x != Rational(1)) return {false, "entry " + x->str() + " is not 0 or 1"};
          }
          if (m(i, j) == Rational(1)) ++ones_in_row;
          if (m(j, i) == Rational(1)) ++ones_in_col;
        }
        if (ones_in_row != 1) return {false, "row " + std::to_string(i + 1) + " does not hold exactly one 1"};
        if (ones_in_col != 1) return {false, "column " + std::to_string(i + 1) + " does not hold exactly one 1"};
      }
      return {};
  }
  return {false, "unknown group"};
}

}  // namespace combmat
