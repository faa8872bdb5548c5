#include "combmat/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "combmat/combined.hpp"
#include "combmat/harness.hpp"
#include "combmat/matrix_io.hpp"
#include "combmat/samplers.hpp"
#include "combmat/spectra.hpp"

namespace combmat {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Matrix load_matrix(const std::string& path) { return parse_matrix(read_text_file(path)); }

std::string vec_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string coeff_list(const Polynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + p.coeffs()[i].str();
  return s + "]";
}

std::string roots_str(const std::vector<RootMultiplicity>& roots) {
  if (roots.empty()) return "none";
  std::string s;
  for (const auto& [r, m] : roots) s += (s.empty() ? "" : ", ") + r.str() + " (x" + std::to_string(m) + ")";
  return s;
}

void parse_dims(const std::string& text, SuiteOptions& opts) {
  auto to_count = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--dims", "expected 'a..b' or 'n', got '" + text + "'");
    }
    return std::stoul(s);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    opts.dim_lo = to_count(text.substr(0, dots));
    opts.dim_hi = to_count(text.substr(dots + 2));
  } else {
    opts.dim_lo = opts.dim_hi = to_count(text);
  }
  if (opts.dim_lo < 1 || opts.dim_hi < opts.dim_lo) {
    throw CLI::ValidationError("--dims", "empty or invalid range '" + text + "'");
  }
}

int cmd_combined(const std::string& file, bool json, std::ostream& out) {
  const CombinedResult r = combined(load_matrix(file));
  if (json) {
    nlohmann::ordered_json j;
    j["combined"] = matrix_to_json(r.combined);
    j["det_source"] = r.det_source.str();
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "C(A) = " << render_matrix_compact(r.combined) << '\n';
  out << "det A = " << r.det_source << '\n';
  out << render_matrix_text(r.combined);
  return kExitOk;
}

int cmd_reverse(const std::string& file, bool json, std::ostream& out) {
  const Matrix r = reversing(load_matrix(file));
  if (json) {
    out << matrix_to_json(r).dump(2) << '\n';
  } else {
    out << render_matrix_text(r);
  }
  return kExitOk;
}

int cmd_charpoly(const std::string& file, bool raw, std::ostream& out) {
  const Matrix a = load_matrix(file);
  const Matrix m = raw ? (require_square(a, "charpoly"), a) : combined(a).combined;
  const Polynomial p = charpoly(m);
  out << "charpoly: " << p.str() << '\n';
  out << "coefficients: " << coeff_list(p) << '\n';
  const Rational at_one = p(Rational(1));
  if (at_one.is_zero()) {
    const Polynomial q = deflate_at_one(p);
    out << "quotient: " << q.str() << '\n';
    out << "rational roots: " << roots_str(rational_roots(p)) << '\n';
    out << "galois: " << to_string(galois_tag(q)) << '\n';
  } else {
    out << "quotient: none (p(1) = " << at_one << ")\n";
    out << "rational roots: " << roots_str(rational_roots(p)) << '\n';
  }
  return kExitOk;
}

int cmd_eigen2(const std::string& file, std::ostream& out) {
  const Matrix a = load_matrix(file);
  const Combined2Report r = combined2_closed_form(a);
  const Matrix c = combined(a).combined;
  out << "A = " << render_matrix_compact(a) << '\n';
  out << "det A = " << det(a) << '\n';
  out << "C(A) = " << render_matrix_compact(c) << '\n';
  out << "charpoly: " << r.eigen.charpoly.str() << '\n';
  out << "trace C(A) = " << trace(c) << '\n';
  out << "det C(A) = " << r.det_c << '\n';
  const auto& vs = *r.eigen.eigenvectors_2x2;
  if (r.det_c == Rational(1)) {
    out << "eigenvalue 1 (x2): eigenvectors " << vec_str(vs[0]) << ", " << vec_str(vs[1]) << '\n';
  } else {
    out << "eigenvalue 1: eigenvector " << vec_str(vs[0]) << '\n';
    out << "eigenvalue " << r.det_c << ": eigenvector " << vec_str(vs[1]) << '\n';
  }
  out << "galois: " << to_string(r.eigen.galois_tag) << '\n';
  out << "P = " << render_matrix_compact(r.p) << '\n';
  out << "D = " << render_matrix_compact(r.d) << '\n';
  out << "P^-1 = " << render_matrix_compact(r.p_inv) << '\n';
  const bool ok = matmul(matmul(r.p, r.d), r.p_inv) == c;
  out << "P D P^-1 = C(A): " << (ok ? "yes" : "NO") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_sample(const SampleSpec& spec, bool json, std::ostream& out) {
  const Matrix m = sample(spec);
  if (json) {
    out << matrix_to_json(m).dump(2) << '\n';
  } else {
    out << render_matrix_text(m);
  }
  return kExitOk;
}

int cmd_check(const std::string& suite, const SuiteOptions& opts, bool json, std::ostream& out) {
  std::vector<PropertyReport> reports;
  if (suite == "all") {
    reports = run_all(opts);
  } else {
    reports.push_back(run_suite(suite, opts));
  }
  bool any_fail = false;
  for (const auto& r : reports) any_fail = any_fail || r.verdict == Verdict::fail;

  if (json) {
    nlohmann::ordered_json j;
    j["seed"] = opts.seed;
    j["trials_per_dim"] = opts.trials;
    j["dims"] = {opts.dim_lo, opts.dim_hi};
    j["bound"] = opts.bound;
    j["steps"] = opts.steps;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    std::size_t pass = 0, gap = 0, fail = 0;
    for (const auto& r : reports) {
      out << render_report_text(r);
      (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? fail : gap)++;
    }
    out << reports.size() << " suites: " << pass << " pass, " << gap << " gap_documented, " << fail << " fail\n";
  }
  return any_fail ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combined matrices C(A) = A ∘ A^-T over the rationals", "combmat"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool raw = false;

  auto* combined_cmd = app.add_subcommand("combined", "Print C(A) and det A");
  combined_cmd->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  combined_cmd->add_flag("--json", json, "Emit JSON");

  auto* reverse_cmd = app.add_subcommand("reverse", "Print the 180-degree rotation R(A)");
  reverse_cmd->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  reverse_cmd->add_flag("--json", json, "Emit JSON");

  auto* charpoly_cmd = app.add_subcommand(
      "charpoly", "Characteristic polynomial of C(A), its quotient by (λ-1), rational roots, Galois tag");
  charpoly_cmd->add_option("file", file, "Matrix file ('-' for stdin)")->required();
  charpoly_cmd->add_flag("--raw", raw, "Analyze the matrix itself instead of C(A)");

  auto* eigen2_cmd = app.add_subcommand("eigen2", "Closed-form eigen-data and diagonalization of C(A), A 2x2");
  eigen2_cmd->add_option("file", file, "Matrix file ('-' for stdin)")->required();

  SampleSpec spec;
  std::string group_name;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a seeded random element of a matrix group");
  sample_cmd->add_option("--group", group_name, "general_linear | special_linear_integer | upper_triangular | "
                                                "lower_triangular | diagonal | orthogonal | permutation")
      ->required();
  sample_cmd->add_option("--dim", spec.dim, "Order n")->required();
  sample_cmd->add_option("--seed", spec.seed, "64-bit seed")->required();
  sample_cmd->add_option("--bound", spec.bound, "Magnitude cap for generated parameters")->capture_default_str();
  sample_cmd->add_option("--steps", spec.steps, "Elementary factors for special_linear_integer (default 2n)");
  sample_cmd->add_option("--det-sign", spec.det_sign, "Determinant sign, 1 or -1")->capture_default_str();
  sample_cmd->add_flag("--json", json, "Emit JSON");

  SuiteOptions opts;
  std::string suite_name;
  std::string dims = "2..5";
  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("--suite", suite_name, "Suite name or 'all'")->required();
  check_cmd->add_option("--trials", opts.trials, "Trials per dimension")->capture_default_str();
  check_cmd->add_option("--dims", dims, "Dimension range a..b")->capture_default_str();
  check_cmd->add_option("--seed", opts.seed, "64-bit seed")->capture_default_str();
  check_cmd->add_option("--bound", opts.bound, "Magnitude cap for sampled parameters")->capture_default_str();
  check_cmd->add_option("--steps", opts.steps, "Elementary factors for SL samples (default 2n)");
  check_cmd->add_flag("--json", json, "Emit JSON reports");

  auto* suites_cmd = app.add_subcommand("suites", "List registered property suites");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (check_cmd->parsed()) parse_dims(dims, opts);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (combined_cmd->parsed()) return cmd_combined(file, json, out);
    if (reverse_cmd->parsed()) return cmd_reverse(file, json, out);
    if (charpoly_cmd->parsed()) return cmd_charpoly(file, raw, out);
    if (eigen2_cmd->parsed()) return cmd_eigen2(file, out);
    if (sample_cmd->parsed()) {
      spec.group = parse_group(group_name);
      return cmd_sample(spec, json, out);
    }
    if (check_cmd->parsed()) {
      if (suite_name != "all" && find_suite(suite_name) == nullptr) {
        run_suite(suite_name, opts);  // throws with the registry listing
      }
      return cmd_check(suite_name, opts, json, out);
    }
    if (suites_cmd->parsed()) {
      for (const auto& s : registry()) {
        out << s.name << (s.gap_search ? " [gap search]" : "") << ": " << s.claim << '\n';
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace combmat
