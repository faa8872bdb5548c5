#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "combmat/matrix.hpp"
#include "combmat/samplers.hpp"

namespace combmat {

enum class Verdict { pass, fail, gap_documented };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view s);

/// Inputs that falsify (or, for gap searches, witness) a claim, plus what was
/// expected and what was observed. Inputs are enough to recheck the claim
/// from scratch.
struct Counterexample {
  std::vector<Matrix> inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct PropertyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;  // trials actually run
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> counterexample;
  std::int64_t millis = 0;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t trials = 200;  // per dimension
  std::size_t dim_lo = 2;
  std::size_t dim_hi = 5;
  std::uint64_t bound = 5;
  std::size_t steps = 0;  // 0: 2 * dim
};

/// Per-trial state handed to a checker. Every matrix a checker draws comes from
/// a seed derived from (suite seed, suite name, trial index, draw index), so a
/// trial replays identically.
class TrialContext {
 public:
  TrialContext(std::size_t dim, std::size_t index, std::uint64_t seed, const SuiteOptions& opts);

  std::size_t dim() const noexcept { return dim_; }
  /// Global trial index within the suite run.
  std::size_t index() const noexcept { return index_; }
  const SuiteOptions& options() const noexcept { return *opts_; }

  Matrix draw(Group group, int det_sign = 1);
  Matrix draw(Group group, std::size_t dim, int det_sign);
  /// Generator for checkers that build candidates themselves.
  Rng& rng() noexcept { return rng_; }

 private:
  std::size_t dim_;
  std::size_t index_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  const SuiteOptions* opts_;
  Rng rng_;
};

using Checker = std::function<std::optional<Counterexample>(TrialContext&)>;

struct PropertySuite {
  std::string name;
  std::string claim;
  /// Gap searches look for witnesses against a claim that is stated but not
  /// established; finding one gives gap_documented, not fail.
  bool gap_search = false;
  /// Fixed dimension; 0 means the dimensions from SuiteOptions.
  std::size_t fixed_dim = 0;
  Checker check;
};

const std::vector<PropertySuite>& registry();
const PropertySuite* find_suite(std::string_view name);

PropertyReport run_suite(const PropertySuite& suite, const SuiteOptions& opts);
/// Throws DomainError naming every registered suite when `name` is unknown.
PropertyReport run_suite(std::string_view name, const SuiteOptions& opts);
/// Every registered suite, in registry order.
std::vector<PropertyReport> run_all(const SuiteOptions& opts);

nlohmann::ordered_json report_to_json(const PropertyReport& r);
PropertyReport report_from_json(const nlohmann::json& j);

/// One summary line, followed by counterexample lines when present.
std::string render_report_text(const PropertyReport& r);

}  // namespace combmat
