#include "combmat/harness.hpp"

#include <chrono>
#include <sstream>

#include "combmat/combined.hpp"
#include "combmat/matrix_io.hpp"
#include "combmat/spectra.hpp"

namespace combmat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::gap_documented:
      return "gap_documented";
  }
  return "fail";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "gap_documented") return Verdict::gap_documented;
  throw DomainError("unknown verdict '" + std::string(s) + "'");
}

TrialContext::TrialContext(std::size_t dim, std::size_t index, std::uint64_t seed, const SuiteOptions& opts)
    : dim_(dim), index_(index), seed_(seed), opts_(&opts), rng_(derive_seed(seed, ~std::uint64_t{0})) {}

Matrix TrialContext::draw(Group group, int det_sign) { return draw(group, dim_, det_sign); }

Matrix TrialContext::draw(Group group, std::size_t dim, int det_sign) {
  SampleSpec spec;
  spec.group = group;
  spec.dim = dim;
  spec.seed = derive_seed(seed_, draws_++);
  spec.bound = opts_->bound;
  spec.steps = opts_->steps;
  spec.det_sign = det_sign;
  return sample(spec);
}

namespace {

using Found = std::optional<Counterexample>;

Counterexample witness(std::vector<Matrix> inputs, std::string expected, std::string actual) {
  return {std::move(inputs), std::move(expected), std::move(actual)};
}

std::string m2s(const Matrix& m) { return render_matrix_compact(m); }

Found expect_equal(const std::vector<Matrix>& inputs, const std::string& what, const Matrix& expected,
                   const Matrix& actual) {
  if (expected == actual) return std::nullopt;
  return witness(inputs, what + " = " + m2s(expected), what + " = " + m2s(actual));
}

Found expect_equal(const std::vector<Matrix>& inputs, const std::string& what, const Rational& expected,
                   const Rational& actual) {
  if (expected == actual) return std::nullopt;
  return witness(inputs, what + " = " + expected.str(), what + " = " + actual.str());
}

Found expect_equal(const std::vector<Matrix>& inputs, const std::string& what, const Polynomial& expected,
                   const Polynomial& actual) {
  if (expected == actual) return std::nullopt;
  return witness(inputs, what + " = " + expected.str(), what + " = " + actual.str());
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// --- Theorem on GL_n: items 1-5 -------------------------------------------

Found check_cofactor_form(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  return expect_equal({a}, "C(A)", combined(a).combined, combined_via_cofactors(a));
}

Found check_trace_form(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  return expect_equal({a}, "Tr C(A)", trace(combined(a).combined), combined_trace(a));
}

Found check_fixed_vector(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Matrix c = combined(a).combined;
  if (auto r = fixed_eigenpair_check(c); !r.holds) {
    return witness({a}, "every row of C(A) sums to 1", "row " + std::to_string(r.violating_row) + " does not");
  }
  if (auto r = column_sum_check(c); !r.holds) {
    return witness({a}, "every column of C(A) sums to 1",
                   "column " + std::to_string(r.violating_row) + " does not");
  }
  const std::vector<Rational> ones(a.rows(), Rational(1));
  if (mat_vec(c, ones) != ones) return witness({a}, "C(A) (1,...,1)^T = (1,...,1)^T", "differs");
  return std::nullopt;
}

Found check_galois_bound(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const std::size_t n = a.rows();
  const Polynomial p = charpoly(combined(a).combined);
  const Rational at_one = p(Rational(1));
  if (!at_one.is_zero()) return witness({a}, "p(1) = 0", "p(1) = " + at_one.str());
  const Polynomial q = deflate_at_one(p);
  if (auto f = expect_equal({a}, "(λ-1) q", p, Polynomial::linear_factor(Rational(1)) * q)) return f;
  if (q.degree() != static_cast<int>(n) - 1) {
    return witness({a}, "deg q = " + std::to_string(n - 1), "deg q = " + std::to_string(q.degree()));
  }
  const GaloisTag tag = galois_tag(q);
  if (n - 1 <= 3) {
    const unsigned order = tag_order(tag);
    if (order == 0 || factorial(n - 1) % order != 0) {
      return witness({a}, "tag order divides " + std::to_string(factorial(n - 1)), "tag " + to_string(tag));
    }
  } else if (tag != GaloisTag::undetermined) {
    return witness({a}, "tag undetermined above degree 3", "tag " + to_string(tag));
  }
  return std::nullopt;
}

Found check_reversing_commute(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  return expect_equal({a}, "C(R(A)) vs R(C(A))", reversing(combined(a).combined),
                      combined(reversing(a)).combined);
}

Found check_reversing_hadamard_morphism(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Matrix b = t.draw(Group::general_linear);
  if (auto f = expect_equal({a, b}, "R(A∘B)", hadamard(reversing(a), reversing(b)), reversing(hadamard(a, b)))) {
    return f;
  }
  if (auto f = expect_equal({a}, "R(R(A))", a, reversing(reversing(a)))) return f;
  const ReversingPair m = reversing_pair(a.rows());
  return expect_equal({a}, "M_rc A M_rr", reversing(a), matmul(matmul(m.m_rc, a), m.m_rr));
}

Found check_combined_symmetries(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Matrix c = combined(a).combined;
  const Matrix ct = transpose(c);
  if (auto f = expect_equal({a}, "C(A^T)", ct, combined(transpose(a)).combined)) return f;
  if (auto f = expect_equal({a}, "C(A^-1)", ct, combined(inverse(a)).combined)) return f;
  const Rational s = t.rng().nonzero_rational(t.options().bound);
  return expect_equal({a}, "C(" + s.str() + " A)", c, combined(scale(a, s)).combined);
}

// --- Triangular and orthogonal subgroups ---------------------------------

Found check_triangular_hadamard(TrialContext& t) {
  const Matrix u = t.draw(Group::upper_triangular);
  const Matrix l = t.draw(Group::lower_triangular);
  return expect_equal({u, l}, "U∘L", matmul(diagonal_part(u), diagonal_part(l)), hadamard(u, l));
}

Found check_triangular_identity(TrialContext& t) {
  for (Group g : {Group::upper_triangular, Group::lower_triangular, Group::diagonal}) {
    const Matrix m = t.draw(g);
    if (!triangular_identity_check(m)) {
      return witness({m}, "C(T) = I", "C(T) = " + m2s(combined(m).combined));
    }
  }
  return std::nullopt;
}

Found check_triangular_morphism(TrialContext& t) {
  for (Group g : {Group::upper_triangular, Group::lower_triangular}) {
    const Matrix a = t.draw(g);
    const Matrix b = t.draw(g);
    if (auto f = expect_equal({a, b}, "C(AB)", matmul(combined(a).combined, combined(b).combined),
                              combined(matmul(a, b)).combined)) {
      return f;
    }
  }
  return std::nullopt;
}

Found check_orthogonal_shortcut(TrialContext& t) {
  const int sign = t.index() % 2 == 0 ? 1 : -1;
  const Matrix q = t.draw(Group::orthogonal, sign);
  if (det(q) != Rational(sign)) return witness({q}, "det Q = " + std::to_string(sign), "det Q = " + det(q).str());
  if (orthogonal_shortcut_check(q) != OrthogonalShortcut::orthogonal_and_matches) {
    return witness({q}, "C(Q) = Q∘Q", "C(Q) = " + m2s(combined(q).combined));
  }
  const Matrix p = t.draw(Group::permutation);
  if (orthogonal_shortcut_check(p) != OrthogonalShortcut::orthogonal_and_matches) {
    return witness({p}, "C(P) = P∘P", "C(P) = " + m2s(combined(p).combined));
  }
  return expect_equal({p}, "C(P)", p, combined(p).combined);
}

// --- 2x2 closed forms ---------------------------------------------------

Found check_gl2_closed_forms(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Matrix c = combined(a).combined;
  const Combined2Report cf = combined2_closed_form(a);
  if (auto f = expect_equal({a}, "charpoly C(A)", charpoly(c), cf.eigen.charpoly)) return f;
  if (auto f = expect_equal({a}, "det C(A)", det(c), cf.det_c)) return f;
  if (auto f = expect_equal({a}, "Tr C(A)", trace(c), Rational(1) + cf.det_c)) return f;
  const auto general = rational_roots(charpoly(c));
  if (general != cf.eigen.rational_eigenvalues) {
    return witness({a}, "eigenvalues {1, det C(A)}", "general path disagrees");
  }
  const auto& vs = *cf.eigen.eigenvectors_2x2;
  const Rational lambdas[2] = {Rational(1), cf.det_c};
  for (int k = 0; k < 2; ++k) {
    std::vector<Rational> expected = vs[k];
    for (auto& x : expected) x *= lambdas[k];
    if (mat_vec(c, vs[k]) != expected) {
      return witness({a}, "C v = λ v for λ = " + lambdas[k].str(), "eigenpair fails");
    }
  }
  const Rational d = cf.det_c;
  return expect_equal({a}, "f(C) with f(x) = x^2", matmul(c, c), matrix_function_2x2(a, Rational(1), d * d));
}

Found check_sl2_closed_forms(TrialContext& t) {
  const int sign = t.index() % 2 == 0 ? 1 : -1;
  const Matrix a = t.draw(Group::special_linear_integer, sign);
  if (det(a) != Rational(sign)) return witness({a}, "det A = " + std::to_string(sign), "det A = " + det(a).str());
  const Matrix c = combined(a).combined;
  const Sl2Forms s = sl2_closed_form(a);
  if (auto f = expect_equal({a}, "Tr C(A)", trace(c), s.trace)) return f;
  if (auto f = expect_equal({a}, "Tr C(A)", Rational(2) + Rational(2 * sign) * a(0, 1) * a(1, 0), s.trace)) {
    return f;
  }
  if (auto f = expect_equal({a}, "det C(A)", det(c), s.det_c)) return f;
  if (auto f = expect_equal({a}, "det C(A)", trace(c) - Rational(1), det(c))) return f;
  return expect_equal({a}, "charpoly C(A)", charpoly(c), s.charpoly);
}

Found check_gl2_galois_identity(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const EigenReport r = eigen_report(combined(a).combined);
  if (r.galois_tag != GaloisTag::identity) return witness({a}, "tag identity", "tag " + to_string(r.galois_tag));
  if (r.quotient.degree() != 1) return witness({a}, "deg q = 1", "deg q = " + std::to_string(r.quotient.degree()));
  return std::nullopt;
}

Found check_diagonalization_2x2(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Combined2Report cf = combined2_closed_form(a);
  if (auto f = expect_equal({a}, "P P^-1", Matrix::identity(2), matmul(cf.p, cf.p_inv))) return f;
  return expect_equal({a}, "P D P^-1", combined(a).combined, matmul(matmul(cf.p, cf.d), cf.p_inv));
}

Found check_matrix_function_2x2(TrialContext& t) {
  const Matrix a = t.draw(Group::general_linear);
  const Matrix c = combined(a).combined;
  const Rational d = combined2_closed_form(a).det_c;
  if (auto f = expect_equal({a}, "f(C), f = id", c, matrix_function_2x2(a, Rational(1), d))) return f;
  if (auto f = expect_equal({a}, "f(C), f = x^2", matmul(c, c), matrix_function_2x2(a, Rational(1), d * d))) {
    return f;
  }
  if (auto f = expect_equal({a}, "f(C), f = 1", Matrix::identity(2), matrix_function_2x2(a, 1, 1))) return f;
  if (!d.is_zero()) {
    return expect_equal({a}, "f(C), f = 1/x", inverse(c), matrix_function_2x2(a, Rational(1), d.reciprocal()));
  }
  return std::nullopt;
}

// --- Gap searches ---------------------------------------------------------

// Nonsingular A, B with A∘B singular: (GL_n, ∘) is not closed.
Found search_hadamard_group_claim(TrialContext& t) {
  const std::size_t n = t.dim();
  auto small_nonsingular = [&]() {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(t.rng().between(-1, 1)));
      if (!det(m).is_zero()) return m;
    }
  };
  const Matrix a = small_nonsingular();
  const Matrix b = small_nonsingular();
  const Rational d = det(hadamard(a, b));
  if (!d.is_zero()) return std::nullopt;
  return witness({a, b}, "det(A∘B) != 0 for nonsingular A, B", "det(A∘B) = 0 with det A = " + det(a).str() +
                                                                    ", det B = " + det(b).str());
}

// Values p/q with |p|, q <= 3 in order of height, then sign.
std::vector<Rational> small_rationals() {
  std::vector<Rational> out{Rational(0)};
  for (long h = 1; h <= 3; ++h) {
    for (long q = 1; q <= h; ++q) {
      for (long p = 1; p <= h; ++p) {
        if (std::max(p, q) != h) continue;
        const Rational r(p, q);
        if (r.num() != p) continue;  // not in lowest terms, already listed
        out.push_back(r);
        out.push_back(-r);
      }
    }
  }
  return out;
}

// Non-orthogonal A with C(A) = A∘A. Candidates are alpha J + beta I for small
// rationals alpha, beta, enumerated by trial index, then conjugated by a random
// signed permutation (which preserves both sides of the question).
Found search_orthogonality_converse(TrialContext& t) {
  static const std::vector<Rational> values = small_rationals();
  const std::size_t n = t.dim();
  const std::size_t per_dim = t.options().trials;
  const std::size_t slot = per_dim == 0 ? 0 : t.index() % per_dim;
  const std::size_t pair = slot % (values.size() * values.size());
  const Rational& alpha = values[pair / values.size()];
  const Rational& beta = values[pair % values.size()];

  Matrix a = scale(Matrix::ones(n, n), alpha) + scale(Matrix::identity(n), beta);
  if (det(a).is_zero()) return std::nullopt;
  const Matrix p = t.draw(Group::permutation);
  Matrix signs = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.rng().below(2) == 1) signs(i, i) = -1;
  }
  const Matrix sp = matmul(signs, p);
  a = matmul(matmul(sp, a), transpose(sp));
  if (is_orthogonal(a)) return std::nullopt;
  if (combined(a).combined != hadamard(a, a)) return std::nullopt;
  return witness({a}, "C(A) = A∘A implies A A^T = I", "C(A) = A∘A but A A^T = " + m2s(matmul(a, transpose(a))));
}

std::vector<PropertySuite> build_registry() {
  return {
      {"cofactor_form", "C(A) entries equal (-1)^(i+j) a_ij A_ij / det A", false, 0, check_cofactor_form},
      {"trace_form", "Tr C(A) = (1/det A) sum a_ii A_ii", false, 0, check_trace_form},
      {"fixed_vector", "C(A) (1,...,1)^T = (1,...,1)^T; rows and columns sum to 1", false, 0,
       check_fixed_vector},
      {"galois_bound", "charpoly C(A) vanishes at 1; quotient has degree n-1; Gal order divides (n-1)!", false,
       0, check_galois_bound},
      {"reversing_commute", "C(R(A)) = R(C(A))", false, 0, check_reversing_commute},
      {"reversing_hadamard_morphism", "R(A∘B) = R(A)∘R(B); R is an involution", false, 0,
       check_reversing_hadamard_morphism},
      {"combined_symmetries", "C(A^T) = C(A)^T = C(A^-1); C(sA) = C(A)", false, 0, check_combined_symmetries},
      {"triangular_hadamard", "T+ ∘ T- = diag(T+) diag(T-)", false, 0, check_triangular_hadamard},
      {"triangular_identity", "C(T) = I for triangular and diagonal T", false, 0, check_triangular_identity},
      {"triangular_morphism", "C(AB) = C(A) C(B) for same-orientation triangular A, B", false, 0,
       check_triangular_morphism},
      {"orthogonal_shortcut", "orthogonal Q has C(Q) = Q∘Q", false, 0, check_orthogonal_shortcut},
      {"gl2_closed_forms", "2x2 closed-form charpoly, eigenvalues {1, det C(A)}, eigenvectors", false, 2,
       check_gl2_closed_forms},
      {"sl2_closed_forms", "det A = ±1: Tr C(A) = 2 + 2 det(A) a12 a21, det C(A) = Tr C(A) - 1", false, 2,
       check_sl2_closed_forms},
      {"gl2_galois_identity", "2x2: Galois group of the quotient is trivial", false, 2, check_gl2_galois_identity},
      {"diagonalization_2x2", "2x2: C(A) = P D P^-1", false, 2, check_diagonalization_2x2},
      {"matrix_function_2x2", "2x2: f(C(A)) = P diag(f(1), f(det C(A))) P^-1", false, 2,
       check_matrix_function_2x2},
      {"hadamard_group_claim", "(GL_n, ∘) is closed under the Hadamard product", true, 3,
       search_hadamard_group_claim},
      {"orthogonality_converse", "C(A) = A∘A implies A orthogonal", true, 0, search_orthogonality_converse},
  };
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<PropertySuite>& registry() {
  static const std::vector<PropertySuite> suites = build_registry();
  return suites;
}

const PropertySuite* find_suite(std::string_view name) {
  for (const auto& s : registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

PropertyReport run_suite(const PropertySuite& suite, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.suite = suite.name;
  report.seed = opts.seed;

  std::size_t lo = opts.dim_lo;
  std::size_t hi = opts.dim_hi;
  if (suite.fixed_dim != 0) lo = hi = suite.fixed_dim;
  if (lo < 1 || hi < lo) throw DomainError("run_suite: invalid dimension range");

  const std::uint64_t suite_seed = derive_seed(opts.seed, fnv1a(suite.name));
  std::size_t index = 0;
  bool done = false;
  for (std::size_t dim = lo; dim <= hi && !done; ++dim) {
    for (std::size_t k = 0; k < opts.trials && !done; ++k, ++index) {
      TrialContext ctx(dim, index, derive_seed(suite_seed, index), opts);
      std::optional<Counterexample> found;
      try {
        found = suite.check(ctx);
      } catch (const Error& e) {
        if (suite.gap_search) throw;
        found = witness({}, "no error", e.what());
      }
      ++report.trials;
      if (found) {
        report.verdict = suite.gap_search ? Verdict::gap_documented : Verdict::fail;
        report.counterexample = std::move(found);
        done = true;
      }
    }
  }
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

PropertyReport run_suite(std::string_view name, const SuiteOptions& opts) {
  if (const auto* s = find_suite(name)) return run_suite(*s, opts);
  std::string names;
  for (const auto& s : registry()) names += (names.empty() ? "" : ", ") + s.name;
  throw DomainError("unknown suite '" + std::string(name) + "'; registered: " + names);
}

std::vector<PropertyReport> run_all(const SuiteOptions& opts) {
  std::vector<PropertyReport> out;
  for (const auto& s : registry()) out.push_back(run_suite(s, opts));
  return out;
}

nlohmann::ordered_json report_to_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["verdict"] = to_string(r.verdict);
  if (r.counterexample) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
    for (const auto& m : r.counterexample->inputs) inputs.push_back(matrix_to_json(m));
    j["counterexample"] = {{"inputs", std::move(inputs)},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  }
  j["millis"] = r.millis;
  return j;
}

PropertyReport report_from_json(const nlohmann::json& j) {
  PropertyReport r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (j.contains("counterexample")) {
      const auto& c = j.at("counterexample");
      Counterexample ce;
      for (const auto& m : c.at("inputs")) ce.inputs.push_back(parse_matrix_json(m));
      ce.expected = c.at("expected").get<std::string>();
      ce.actual = c.at("actual").get<std::string>();
      r.counterexample = std::move(ce);
    }
    r.millis = j.at("millis").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string render_report_text(const PropertyReport& r) {
  std::ostringstream os;
  os << r.suite << ' ' << to_string(r.verdict) << " trials=" << r.trials << " seed=" << r.seed
     << " millis=" << r.millis << '\n';
  if (r.counterexample) {
    for (std::size_t i = 0; i < r.counterexample->inputs.size(); ++i) {
      os << "  input " << (i + 1) << ": " << render_matrix_compact(r.counterexample->inputs[i]) << '\n';
    }
    os << "  expected: " << r.counterexample->expected << '\n';
    os << "  actual:   " << r.counterexample->actual << '\n';
  }
  return os.str();
}

}  // namespace combmat
