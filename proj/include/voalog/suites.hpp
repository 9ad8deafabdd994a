#ifndef VOALOG_SUITES_HPP
#define VOALOG_SUITES_HPP

#include <string>
#include <vector>

#include "voalog/report.hpp"

namespace voalog {

struct SuiteConfig {
  std::string suite = "all";
  long p = 2;
  long pprime = 1;
  long cutoff = 6;
  std::string cocycle = "standard";
  long jobs = 1;
};

/// Registered suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs every check of the named suite and returns the structured report.
/// Individual check failures and exceptions are captured per check; this
/// only throws ConfigError for an unknown suite or invalid parameters.
Report run_suite(const SuiteConfig& cfg);

}  // namespace voalog

#endif  // VOALOG_SUITES_HPP
