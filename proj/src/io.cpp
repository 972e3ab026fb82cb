#include "chaoslab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "chaoslab/errors.hpp"

namespace chaoslab {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("certificate is missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) {
    throw InvalidInput(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double parse_decimal(const json& v) {
  if (!v.is_string()) throw InvalidInput("enclosure bounds must be decimal strings");
  const std::string s = v.get<std::string>();
  char* end = nullptr;
  const double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidInput("malformed decimal '" + s + "'");
  }
  return d;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json distance_to_json(const DistanceValue& d) {
  if (d.is_exact()) return d.exact_value().str();
  return json{{"lo", format_double(d.enclosure_value().lo)},
              {"hi", format_double(d.enclosure_value().hi)}};
}

DistanceValue distance_from_json(const json& j) {
  if (j.is_string()) return DistanceValue::exact(Rational::parse(j.get<std::string>()));
  if (j.is_object() && j.contains("lo") && j.contains("hi")) {
    return DistanceValue::enclosure(parse_decimal(j.at("lo")), parse_decimal(j.at("hi")));
  }
  throw InvalidInput("malformed distance value");
}

json certificate_to_json(const WitnessCertificate& cert) {
  return json{
      {"system", std::string(system_name(cert.system))},
      {"x", point_str(cert.center)},
      {"r", cert.radius.str()},
      {"delta", cert.delta.str()},
      {"p", point_str(cert.p)},
      {"q", point_str(cert.q)},
      {"period_p", cert.period_p},
      {"period_q", cert.period_q},
      {"k", cert.k},
      {"L", cert.L},
      {"separation_at_k", distance_to_json(cert.separation_at_k)},
      {"epsilon_used", cert.epsilon_used.str()},
      {"rho_used", cert.rho_used.str()},
  };
}

WitnessCertificate certificate_from_json(const json& j) {
  const SystemHandle& sys = SystemHandle::from_name(string_field(j, "system"));
  WitnessCertificate cert;
  cert.system = sys.id;
  cert.center = parse_point(sys, string_field(j, "x"));
  cert.radius = Rational::parse(string_field(j, "r"));
  cert.delta = Rational::parse(string_field(j, "delta"));
  cert.p = parse_point(sys, string_field(j, "p"));
  cert.q = parse_point(sys, string_field(j, "q"));
  cert.period_p = count_field(j, "period_p");
  cert.period_q = count_field(j, "period_q");
  cert.k = count_field(j, "k");
  cert.L = count_field(j, "L");
  cert.separation_at_k = distance_from_json(field(j, "separation_at_k"));
  cert.epsilon_used = Rational::parse(string_field(j, "epsilon_used"));
  cert.rho_used = Rational::parse(string_field(j, "rho_used"));
  return cert;
}

json report_to_json(const VerificationReport& report, std::size_t depth) {
  json clauses = json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"passed", report.passed()}, {"depth", depth}, {"clauses", std::move(clauses)}};
}

json a_report_to_json(const AReport& report) {
  return json{
      {"delta", report.delta.str()},
      {"samples", report.samples},
      {"seed", report.seed},
      {"all_bounds_finite", report.all_bounds_finite},
      {"max_bound", report.max_bound},
      {"sensitivity_failures", report.sensitivity_failures},
      {"bound_mismatches", report.bound_mismatches},
      {"periodic_in_A", report.periodic_in_A},
      {"sensitive", report.sensitive()},
      {"asymptotically_sensitive", report.asymptotically_sensitive()},
  };
}

json series_to_json(const SeparationSeries& series) {
  json rows = json::array();
  for (const auto& [n, d] : series) {
    rows.push_back(json{{"n", n},
                        {"distance", d.decimal()},
                        {"distance_exact", d.is_exact() ? d.exact_value().fraction_str() : ""}});
  }
  return rows;
}

void write_series_csv(const SeparationSeries& series, std::ostream& os) {
  if (series.empty()) throw InvalidInput("series is empty");
  os << "n,distance,distance_exact\n";
  for (const auto& [n, d] : series) {
    os << n << ',' << d.decimal() << ',';
    if (d.is_exact()) os << d.exact_value().fraction_str();
    os << '\n';
  }
}

void emit_series_csv(const SeparationSeries& series, const std::filesystem::path& path) {
  if (series.empty()) throw InvalidInput("series is empty");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_series_csv(series, out);
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

}  // namespace chaoslab
