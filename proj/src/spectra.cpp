#include "combmat/spectra.hpp"

#include <algorithm>
#include <functional>

#include "combmat/combined.hpp"

namespace combmat {

std::string to_string(GaloisTag tag) {
  switch (tag) {
    case GaloisTag::identity:
      return "identity";
    case GaloisTag::order_2:
      return "order_2";
    case GaloisTag::cyclic_3:
      return "cyclic_3";
    case GaloisTag::sym_3:
      return "sym_3";
    case GaloisTag::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

unsigned tag_order(GaloisTag tag) {
  switch (tag) {
    case GaloisTag::identity:
      return 1;
    case GaloisTag::order_2:
      return 2;
    case GaloisTag::cyclic_3:
      return 3;
    case GaloisTag::sym_3:
      return 6;
    case GaloisTag::undetermined:
      return 0;
  }
  return 0;
}

Polynomial charpoly(const Matrix& m) {
  require_square(m, "charpoly");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix acc(n, n);  // N_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    acc = matmul(m, acc);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    c[n - k] = -trace(matmul(m, acc)) / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

// Synthetic division by (x - r); the remainder must already be known zero.
Polynomial deflate_root(const Polynomial& p, const Rational& r) {
  const auto& a = p.coeffs();
  if (a.size() <= 1) return {};
  std::vector<Rational> q(a.size() - 1);
  Rational carry = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = a[k] + carry * r;
  }
  return Polynomial(std::move(q));
}

int sign_at(const Polynomial& p, const Rational& x) { return p(x).sign(); }

// Sign changes along a Sturm sequence at x, zeros skipped.
int variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = sign_at(s, x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& h) {
  std::vector<Polynomial> seq{h, h.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

Rational half_above(const Integer& k) { return Rational(2 * k + 1, Integer(2)); }

// Integer roots of a monic polynomial with integer coefficients.
//
// Works on the square-free part h, whose real roots are simple, and bisects
// integer ranges [lo, hi] represented as the half-open real intervals
// (lo - 1/2, hi + 1/2], counting roots with Sturm's theorem. Endpoints are
// half-integers; if one happens to be a root of h it is a non-integer rational
// root, so it is divided out and the search restarts.
std::vector<Integer> integer_roots_monic(const Polynomial& g) {
  if (g.degree() < 1) return {};
  Polynomial h = divmod(g, gcd(g, g.derivative())).quotient.monic();

  Integer bound = 1;
  for (int k = 0; k < h.degree(); ++k) {
    const Rational c = abs(h.coeff(static_cast<std::size_t>(k)));
    Integer ceil_c;
    mpz_cdiv_q(ceil_c.get_mpz_t(), c.num().get_mpz_t(), c.den().get_mpz_t());
    bound = std::max(bound, Integer(ceil_c + 1));
  }

  for (;;) {
    if (h.degree() < 1) return {};
    const auto seq = sturm_sequence(h);
    std::vector<Integer> roots;
    bool restart = false;

    auto endpoint_ok = [&](const Rational& x) {
      if (h(x).is_zero()) {
        h = deflate_root(h, x);
        restart = true;
        return false;
      }
      return true;
    };

    std::function<void(const Integer&, const Integer&, int, int)> search =
        [&](const Integer& lo, const Integer& hi, int v_lo, int v_hi) {
          if (restart || v_lo - v_hi <= 0) return;
          if (lo == hi) {
            if (h(Rational(lo)).is_zero()) roots.push_back(lo);
            return;
          }
          Integer mid;
          mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(lo + hi).get_mpz_t(), 1);
          const Rational cut = half_above(mid);
          if (!endpoint_ok(cut)) return;
          const int v_mid = variations(seq, cut);
          search(lo, mid, v_lo, v_mid);
          search(Integer(mid + 1), hi, v_mid, v_hi);
        };

    const Integer lo = -bound;
    const Integer hi = bound;
    const Rational left = half_above(Integer(lo - 1));
    const Rational right = half_above(hi);
    if (!endpoint_ok(left) || !endpoint_ok(right)) continue;
    search(lo, hi, variations(seq, left), variations(seq, right));
    if (!restart) return roots;
  }
}

}  // namespace

Polynomial deflate_at_one(const Polynomial& p) {
  const Rational at_one = p(Rational(1));
  if (!at_one.is_zero()) throw DeflationError(at_one);
  return deflate_root(p, Rational(1));
}

std::vector<RootMultiplicity> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> candidates;
  Polynomial rest = p;
  if (rest.coeff(0).is_zero()) {
    candidates.emplace_back(0);
    while (rest.coeff(0).is_zero()) rest = deflate_root(rest, Rational(0));
  }

  if (rest.degree() >= 1) {
    // Primitive integer multiple F of rest, then the monic integer polynomial
    // g(y) = c_d^(d-1) F(y / c_d). Rational roots x of F correspond exactly to
    // integer roots y = c_d x of g.
    Integer den_lcm = 1;
    for (const auto& c : rest.coeffs()) {
      const Integer d = c.den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> f;
    Integer content = 0;
    for (const auto& c : rest.coeffs()) {
      f.push_back(c.num() * (den_lcm / c.den()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), f.back().get_mpz_t());
    }
    for (auto& c : f) c /= content;
    const std::size_t d = f.size() - 1;
    const Integer lead = f[d];
    std::vector<Rational> g(d + 1);
    Integer power = 1;  // lead^(d-1-k), built from k = d-1 downwards
    for (std::size_t k = d; k-- > 0;) {
      g[k] = Rational(Integer(f[k] * power));
      power *= lead;
    }
    g[d] = 1;
    for (const auto& y : integer_roots_monic(Polynomial(std::move(g)))) {
      candidates.emplace_back(y, lead);
    }
  }

  std::sort(candidates.begin(), candidates.end());
  std::vector<RootMultiplicity> out;
  Polynomial work = p;
  for (const auto& r : candidates) {
    std::size_t mult = 0;
    while (work.degree() >= 1 && work(r).is_zero()) {
      work = deflate_root(work, r);
      ++mult;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  return out;
}

Rational quadratic_discriminant(const Polynomial& q) {
  if (q.degree() != 2) throw DomainError("quadratic_discriminant: degree must be 2");
  const Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
  return b * b - Rational(4) * a * c;
}

Rational cubic_discriminant(const Polynomial& q) {
  if (q.degree() != 3) throw DomainError("cubic_discriminant: degree must be 3");
  const Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  return b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d -
         Rational(27) * a * a * d * d + Rational(18) * a * b * c * d;
}

GaloisTag galois_tag(const Polynomial& q) {
  switch (q.degree()) {
    case -1:
    case 0:
    case 1:
      return GaloisTag::identity;
    case 2:
      return rat_is_square(quadratic_discriminant(q)) ? GaloisTag::identity : GaloisTag::order_2;
    case 3: {
      const auto roots = rational_roots(q);
      if (!roots.empty()) return galois_tag(deflate_root(q, roots.front().first));
      // An irreducible cubic has nonzero discriminant.
      return rat_is_square(cubic_discriminant(q)) ? GaloisTag::cyclic_3 : GaloisTag::sym_3;
    }
    default:
      return GaloisTag::undetermined;
  }
}

namespace {

std::array<Vector, 2> standard_eigenvectors() {
  return {Vector{Rational(1), Rational(1)}, Vector{Rational(1), Rational(-1)}};
}

}  // namespace

EigenReport eigen_report(const Matrix& c) {
  EigenReport r;
  r.charpoly = charpoly(c);
  r.quotient = deflate_at_one(r.charpoly);
  r.rational_eigenvalues = rational_roots(r.charpoly);
  r.galois_tag = galois_tag(r.quotient);
  if (c.rows() == 2) r.eigenvectors_2x2 = standard_eigenvectors();
  return r;
}

namespace {

void require_2x2(const Matrix& a, const char* op) {
  if (a.rows() != 2 || a.cols() != 2) throw ShapeError(std::string(op) + ": 2x2 matrix required");
}

Matrix eigenbasis() { return Matrix{{1, -1}, {1, 1}}; }

Matrix eigenbasis_inverse() { return Matrix{{Rational(1, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)}}; }

}  // namespace

Combined2Report combined2_closed_form(const Matrix& a) {
  require_2x2(a, "combined2_closed_form");
  const Rational diag = a(0, 0) * a(1, 1);
  const Rational anti = a(0, 1) * a(1, 0);
  const Rational det_a = diag - anti;
  if (det_a.is_zero()) throw SingularMatrix();

  Combined2Report out;
  out.det_c = (diag + anti) / det_a;
  EigenReport& e = out.eigen;
  e.charpoly = Polynomial({out.det_c, -(Rational(2) * diag / det_a), Rational(1)});
  e.quotient = Polynomial::linear_factor(out.det_c);
  if (out.det_c == Rational(1)) {
    e.rational_eigenvalues = {{Rational(1), 2}};
  } else {
    e.rational_eigenvalues = {{Rational(1), 1}, {out.det_c, 1}};
    std::sort(e.rational_eigenvalues.begin(), e.rational_eigenvalues.end());
  }
  e.galois_tag = GaloisTag::identity;
  e.eigenvectors_2x2 = standard_eigenvectors();
  out.p = eigenbasis();
  out.d = Matrix{{1, 0}, {0, out.det_c}};
  out.p_inv = eigenbasis_inverse();
  return out;
}

Sl2Forms sl2_closed_form(const Matrix& a) {
  require_2x2(a, "sl2_closed_form");
  const Rational eps = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (eps != Rational(1) && eps != Rational(-1)) {
    throw DomainError("sl2_closed_form: det A must be 1 or -1, got " + eps.str());
  }
  Sl2Forms out;
  out.trace = Rational(2) + Rational(2) * eps * a(0, 1) * a(1, 0);
  out.det_c = out.trace - Rational(1);
  out.charpoly = Polynomial({out.det_c, -out.trace, Rational(1)});
  return out;
}

Matrix matrix_function_2x2(const Matrix& a, const Rational& f1, const Rational& f2) {
  require_2x2(a, "matrix_function_2x2");
  if (det(a).is_zero()) throw SingularMatrix();
  return matmul(matmul(eigenbasis(), Matrix{{f1, 0}, {0, f2}}), eigenbasis_inverse());
}

}  // namespace combmat
