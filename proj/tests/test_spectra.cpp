#include <doctest.h>

#include "combmat/combined.hpp"
#include "combmat/spectra.hpp"
#include "oracles.hpp"

using namespace combmat;

namespace {

Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(std::vector<Rational>(ascending)); }

Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  Polynomial p = Polynomial::constant(lead);
  for (const auto& r : roots) p = p * Polynomial::linear_factor(r);
  return p;
}

Matrix paper_combined() { return scale(Matrix{{4, 4, 1}, {1, 4, 4}, {4, 1, 4}}, Rational(1, 9)); }

Polynomial power_of_linear(std::size_t k) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) p = p * Polynomial::linear_factor(1);
  return p;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Polynomial p = poly({-5, 4, 1});
  CHECK(p.degree() == 2);
  CHECK(p(Rational(1)) == Rational(0));
  CHECK(p.str() == "\xCE\xBB^2 + 4\xCE\xBB - 5");
  CHECK(poly({Rational(1, 9), Rational(-1, 3), 1}).str("x") == "x^2 - (1/3)x + 1/9");
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().str() == "0");
  CHECK(poly({0, 0, 0}).is_zero());
  const DivMod dm = divmod(poly({1, 0, 1}), poly({1, 1}));
  CHECK(dm.quotient == poly({-1, 1}));
  CHECK(dm.remainder == poly({2}));
  CHECK(gcd(from_roots({1, 2, 2}), from_roots({2, 3})) == from_roots({2}));
  CHECK_THROWS_AS(divmod(p, Polynomial()), DivisionByZero);
}

TEST_CASE("charpoly examples") {
  const Polynomial p = charpoly(Matrix{{-2, 3}, {3, -2}});
  CHECK(p == poly({-5, 4, 1}));
  for (std::size_t n = 0; n <= 5; ++n) CHECK(charpoly(Matrix::identity(n)) == power_of_linear(n));
  const Polynomial expected = Polynomial::linear_factor(1) * poly({Rational(1, 9), Rational(-1, 3), 1});
  CHECK(oracle::charpoly_laplace(paper_combined()) == expected.coeffs());
  CHECK(charpoly(paper_combined()) == expected);
  CHECK_THROWS_AS(charpoly(Matrix(2, 3)), ShapeError);
}

TEST_CASE("Faddeev-LeVerrier matches symbolic cofactor expansion") {
  oracle::Gen gen(21);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      const Matrix m = gen.matrix(n, n);
      const Polynomial p = charpoly(m);
      CHECK(p.coeffs() == oracle::charpoly_laplace(m));
      CHECK(p.is_monic());
    }
  }
}

TEST_CASE("deflate_at_one") {
  CHECK(deflate_at_one(poly({-5, 4, 1})) == poly({5, 1}));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(deflate_at_one(power_of_linear(n)) == power_of_linear(n - 1));
  const Polynomial q = poly({Rational(1, 9), Rational(-1, 3), 1});
  CHECK(deflate_at_one(Polynomial::linear_factor(1) * q) == q);
  try {
    deflate_at_one(poly({1, 1}));
    FAIL("expected DeflationError");
  } catch (const DeflationError& e) {
    CHECK(e.value_at_one() == Rational(2));
  }
}

TEST_CASE("rational_roots examples") {
  using R = std::vector<RootMultiplicity>;
  CHECK(rational_roots(poly({-5, 4, 1})) == R{{Rational(-5), 1}, {Rational(1), 1}});
  CHECK(rational_roots(poly({Rational(1, 9), Rational(-1, 3), 1})).empty());
  CHECK(rational_roots(power_of_linear(3)) == R{{Rational(1), 3}});
  CHECK(rational_roots(poly({0, 0, 3})) == R{{Rational(0), 2}});
  CHECK(rational_roots(poly({7})).empty());
  CHECK(rational_roots(poly({-2, 0, 1})).empty());
  CHECK(rational_roots(from_roots({Rational(2, 3), Rational(-7, 5), Rational(2, 3)}, Rational(-6))) ==
        R{{Rational(-7, 5), 1}, {Rational(2, 3), 2}});
  // Half-integer and huge roots exercise the search's endpoint handling and bounds.
  CHECK(rational_roots(from_roots({Rational(1, 2), Rational(5, 2), Rational(3)})) ==
        R{{Rational(1, 2), 1}, {Rational(5, 2), 1}, {Rational(3), 1}});
  const Rational huge(Integer("123456789012345678901234567"), Integer(7));
  CHECK(rational_roots(from_roots({huge, -huge}) * poly({1, 0, 1})) == R{{-huge, 1}, {huge, 1}});
  CHECK_THROWS_AS(rational_roots(Polynomial()), DomainError);
}

TEST_CASE("rational_roots matches rational-root-theorem enumeration") {
  oracle::Gen gen(22);
  for (int t = 0; t < 300; ++t) {
    // Random products of small linear factors and an irreducible-ish remainder.
    Polynomial p = Polynomial::constant(Rational(gen.integer(1, 4) * (gen.integer(0, 1) ? 1 : -1)));
    const long k = gen.integer(0, 3);
    for (long i = 0; i < k; ++i) {
      p = p * poly({Rational(gen.integer(-6, 6)), Rational(gen.integer(1, 4))});
    }
    std::vector<Rational> extra;
    for (long i = 0; i <= gen.integer(0, 2); ++i) extra.push_back(Rational(gen.integer(-9, 9)));
    extra.push_back(Rational(gen.integer(1, 3)));
    p = p * Polynomial(extra);
    if (p.is_zero()) continue;
    CHECK(rational_roots(p) == oracle::rational_roots_bruteforce(p.coeffs()));
  }
}

TEST_CASE("galois_tag") {
  CHECK(galois_tag(poly({5, 1})) == GaloisTag::identity);
  CHECK(galois_tag(poly({7})) == GaloisTag::identity);
  CHECK(galois_tag(poly({Rational(1, 9), Rational(-1, 3), 1})) == GaloisTag::order_2);
  CHECK(quadratic_discriminant(poly({Rational(1, 9), Rational(-1, 3), 1})) == Rational(-1, 3));
  CHECK(galois_tag(poly({2, -3, 1})) == GaloisTag::identity);
  CHECK(galois_tag(poly({1, -2, 1})) == GaloisTag::identity);
  // x^3 - 3x + 1: irreducible with discriminant 81.
  CHECK(cubic_discriminant(poly({1, -3, 0, 1})) == Rational(81));
  CHECK(galois_tag(poly({1, -3, 0, 1})) == GaloisTag::cyclic_3);
  // x^3 - 2: discriminant -108.
  CHECK(cubic_discriminant(poly({-2, 0, 0, 1})) == Rational(-108));
  CHECK(galois_tag(poly({-2, 0, 0, 1})) == GaloisTag::sym_3);
  CHECK(galois_tag(Polynomial::linear_factor(1) * poly({1, 0, 1})) == GaloisTag::order_2);
  CHECK(galois_tag(from_roots({1, 2, 3}, Rational(5, 2))) == GaloisTag::identity);
  CHECK(galois_tag(power_of_linear(4)) == GaloisTag::undetermined);
  CHECK(tag_order(GaloisTag::sym_3) == 6);
  CHECK(to_string(GaloisTag::cyclic_3) == "cyclic_3");
}

TEST_CASE("eigen_report of combined matrices") {
  const EigenReport r = eigen_report(paper_combined());
  CHECK(r.quotient == poly({Rational(1, 9), Rational(-1, 3), 1}));
  CHECK(r.galois_tag == GaloisTag::order_2);
  CHECK(r.rational_eigenvalues == std::vector<RootMultiplicity>{{Rational(1), 1}});
  CHECK_FALSE(r.eigenvectors_2x2);

  oracle::Gen gen(23);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      const Matrix c = combined(gen.nonsingular(n)).combined;
      const EigenReport e = eigen_report(c);
      CHECK(e.charpoly(Rational(1)) == Rational(0));
      CHECK(Polynomial::linear_factor(1) * e.quotient == e.charpoly);
      CHECK(e.quotient.degree() == static_cast<int>(n) - 1);
      REQUIRE_FALSE(e.rational_eigenvalues.empty());
      bool has_one = false;
      for (const auto& [v, m] : e.rational_eigenvalues) has_one = has_one || (v == Rational(1) && m >= 1);
      CHECK(has_one);
      if (n <= 4) CHECK(e.galois_tag != GaloisTag::undetermined);
      if (n == 2) CHECK(e.galois_tag == GaloisTag::identity);
    }
  }
}

TEST_CASE("combined2_closed_form") {
  const Matrix a{{1, 2}, {3, 4}};
  const Combined2Report r = combined2_closed_form(a);
  CHECK(r.det_c == Rational(-5));
  CHECK(r.eigen.charpoly == charpoly(combined(a).combined));
  CHECK(r.eigen.rational_eigenvalues == std::vector<RootMultiplicity>{{Rational(-5), 1}, {Rational(1), 1}});
  const Matrix c = combined(a).combined;
  CHECK(mat_vec(c, Vector{1, -1}) == Vector{-5, 5});
  CHECK(mat_vec(c, Vector{1, 1}) == Vector{1, 1});
  CHECK(matmul(r.p, r.p_inv) == Matrix::identity(2));
  CHECK(r.p_inv == inverse(r.p));
  CHECK(matmul(matmul(r.p, r.d), r.p_inv) == c);

  const Combined2Report id = combined2_closed_form(Matrix::identity(2));
  CHECK(id.d == Matrix::identity(2));
  CHECK(id.eigen.rational_eigenvalues == std::vector<RootMultiplicity>{{Rational(1), 2}});

  const Combined2Report tri = combined2_closed_form(Matrix{{2, 7}, {0, Rational(1, 3)}});
  CHECK(tri.det_c == Rational(1));
  CHECK(tri.d == Matrix::identity(2));

  CHECK_THROWS_AS(combined2_closed_form(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
  CHECK_THROWS_AS(combined2_closed_form(Matrix::identity(3)), ShapeError);
}

TEST_CASE("sl2_closed_form") {
  const Matrix a{{2, 3}, {1, 2}};
  CHECK(combined(a).combined == Matrix{{4, -3}, {-3, 4}});
  Sl2Forms s = sl2_closed_form(a);
  CHECK(s.trace == Rational(8));
  CHECK(s.det_c == Rational(7));
  CHECK(s.charpoly == charpoly(combined(a).combined));
  CHECK(rational_roots(s.charpoly) == std::vector<RootMultiplicity>{{Rational(1), 1}, {Rational(7), 1}});

  s = sl2_closed_form(Matrix::identity(2));
  CHECK(s.trace == Rational(2));
  CHECK(s.det_c == Rational(1));

  const Matrix swap{{0, 1}, {1, 0}};
  CHECK(combined(swap).combined == swap);
  s = sl2_closed_form(swap);
  CHECK(s.trace == Rational(0));
  CHECK(s.det_c == Rational(-1));
  CHECK(rational_roots(s.charpoly) == std::vector<RootMultiplicity>{{Rational(-1), 1}, {Rational(1), 1}});

  CHECK_THROWS_AS(sl2_closed_form(Matrix{{1, 2}, {3, 4}}), DomainError);
}

TEST_CASE("matrix_function_2x2") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix c = combined(a).combined;
  CHECK(matrix_function_2x2(a, 1, -5) == Matrix{{-2, 3}, {3, -2}});
  CHECK(matrix_function_2x2(a, 1, 1) == Matrix::identity(2));
  CHECK(matmul(c, c) == Matrix{{13, -12}, {-12, 13}});
  CHECK(matrix_function_2x2(a, 1, 25) == matmul(c, c));
  CHECK(matrix_function_2x2(a, 1, Rational(-1, 5)) == inverse(c));
  CHECK_THROWS_AS(matrix_function_2x2(Matrix{{1, 1}, {1, 1}}, 1, 1), SingularMatrix);
}
