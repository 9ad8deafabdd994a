#ifndef VOALOG_REPORT_HPP
#define VOALOG_REPORT_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "voalog/fock.hpp"

namespace voalog {

using Json = nlohmann::ordered_json;

/// Outcome of one registered check. Witnesses carry the derived constants
/// and dimensions; failures always carry a reason.
struct CheckResult {
  std::string id;
  std::string description;
  std::string status;  // "pass" | "fail" | "skipped"
  Json witness = Json::object();
  double seconds = 0;
};

struct Report {
  std::string tool = "voalog";
  Json config = Json::object();
  std::vector<CheckResult> checks;
};

bool all_passed(const Report& r);

/// Full structured report. Timing fields are emitted only when requested so
/// that default output is byte-stable across runs.
Json report_json(const Report& r, bool with_timing = false);

/// Flat form: id,status,witness-digest per line, headed.
std::string report_csv(const Report& r);

/// Canonical serialization used inside witnesses.
Json rational_json(const Rational& q);
Json basis_vector_json(const FockBasisVector& b);
Json element_json(const FockElement& e);
Json dims_json(const std::map<Rational, long>& dims);

}  // namespace voalog

#endif  // VOALOG_REPORT_HPP
