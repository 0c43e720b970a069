// The acceptance battery: twelve criteria, each evaluated by exhaustive
// computation, plus a record of the claims it adjudicates.

#ifndef REFLECTWIST_SUITE_HPP_
#define REFLECTWIST_SUITE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "reflectwist/io.hpp"

namespace reflectwist {

  enum class SuiteLevel { quick, full };
  char const* to_string(SuiteLevel l);

  struct SuiteOptions {
    SuiteLevel       level = SuiteLevel::quick;
    unsigned         jobs  = 1;
    std::vector<int> only;  // criterion ids; empty means all
  };

  struct CriterionResult {
    int         id = 0;
    std::string key;
    bool        pass = false;
    std::string summary;
    io::Json    details;
    double      seconds = 0;  // not part of the JSON report
  };

  struct SuiteResult {
    SuiteLevel                   level = SuiteLevel::quick;
    std::vector<CriterionResult> criteria;
    io::Json                     discrepancies = io::Json::array();

    bool     all_pass() const;
    io::Json to_json() const;
  };

  // `on_result` is called as soon as each criterion finishes.
  SuiteResult run_suite(
      SuiteOptions const&                          opt,
      std::function<void(CriterionResult const&)> on_result = {});

}  // namespace reflectwist

#endif  // REFLECTWIST_SUITE_HPP_
