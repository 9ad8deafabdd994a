#include "voalog/report.hpp"

#include <cstdint>
#include <sstream>

namespace voalog {

bool all_passed(const Report& r) {
  for (const auto& c : r.checks)
    if (c.status == "fail") return false;
  return true;
}

Json report_json(const Report& r, bool with_timing) {
  Json out;
  out["tool"] = r.tool;
  out["config"] = r.config;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["status"] = c.status;
    jc["witness"] = c.witness;
    if (with_timing) jc["seconds"] = c.seconds;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  Json summary;
  long pass = 0, fail = 0, skipped = 0;
  for (const auto& c : r.checks) {
    if (c.status == "pass") ++pass;
    if (c.status == "fail") ++fail;
    if (c.status == "skipped") ++skipped;
  }
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["skipped"] = skipped;
  summary["all_passed"] = all_passed(r);
  out["summary"] = std::move(summary);
  return out;
}

static std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "id,status,witness_digest\n";
  for (const auto& c : r.checks)
    os << c.id << "," << c.status << "," << fnv1a_hex(c.witness.dump()) << "\n";
  return os.str();
}

Json rational_json(const Rational& q) { return rat_str(q); }

Json basis_vector_json(const FockBasisVector& b) {
  Json out;
  Json bosons = Json::array();
  for (const auto& [gen, n] : b.bosons) bosons.push_back(Json::array({gen, n}));
  out["bosons"] = std::move(bosons);
  Json point = Json::array();
  for (const auto& c : b.point.c) point.push_back(rat_str(c));
  out["point"] = std::move(point);
  Json fermions = Json::array();
  for (const auto& r : b.fermions) fermions.push_back(rat_str(r));
  out["fermions"] = std::move(fermions);
  return out;
}

Json element_json(const FockElement& e) {
  Json terms = Json::array();
  for (const auto& [b, c] : e.terms()) {
    Json t = basis_vector_json(b);
    t["coeff"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

Json dims_json(const std::map<Rational, long>& dims) {
  Json out = Json::object();
  for (const auto& [w, d] : dims) out[rat_str(w)] = d;
  return out;
}

}  // namespace voalog
