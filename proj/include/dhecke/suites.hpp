#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dhecke/json_io.hpp"

namespace dhecke {

struct RunConfig {
  std::string group = "PGL2";
  Int q = 7;
  Int ell = 3;
  int r = 1;
  /// Negative: each suite uses its own default.
  int max_degree = -1;
  int support = 2;
  int depth = 2;
  int precision = 1;
  /// Number of polynomial variables for the Koszul suite.
  int vars = 3;
  /// Character values for the Iwahori suite, one per basis vector of X_*.
  std::vector<Int> chi;
  std::optional<Json> manifold;
  /// Random pairs per datum in the commutativity suite.
  int samples = 50;
  unsigned seed = 1;
};

class SuiteReport {
 public:
  explicit SuiteReport(std::string suite) : suite_(std::move(suite)) {}

  /// Records one check; failing checks keep their witness.
  bool check(bool ok, const Json& witness);
  void note(const std::string& key, Json value) { details_[key] = std::move(value); }

  const std::string& suite() const { return suite_; }
  std::size_t passed() const { return passed_; }
  std::size_t failed() const { return failed_; }
  const std::vector<Json>& witnesses() const { return witnesses_; }
  const Json& details() const { return details_; }
  bool pass() const { return failed_ == 0 && passed_ > 0; }

  Json to_json() const;

 private:
  std::string suite_;
  std::size_t passed_ = 0, failed_ = 0;
  std::vector<Json> witnesses_;
  Json details_ = Json::object();
};

const std::vector<std::string>& suite_names();

/// Suites that depend on q run validate_regime first and throw RegimeError.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

SuiteReport suite_satake_oracle(const RunConfig& cfg);
SuiteReport suite_commutativity(const RunConfig& cfg);
SuiteReport suite_presentation(const RunConfig& cfg);
SuiteReport suite_splitness(const RunConfig& cfg);
SuiteReport suite_iwahori(const RunConfig& cfg);
SuiteReport suite_koszul(const RunConfig& cfg);
SuiteReport suite_manifold(const RunConfig& cfg);
SuiteReport suite_cohomology(const RunConfig& cfg);

}  // namespace dhecke
