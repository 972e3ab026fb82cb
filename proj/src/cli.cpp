#include "chaoslab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chaoslab/counterexample.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/io.hpp"
#include "chaoslab/witness.hpp"

namespace chaoslab {

namespace {

// An error attributable to one command-line flag.
class FlagError : public std::runtime_error {
 public:
  FlagError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

template <class F>
auto for_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw FlagError(flag, e.what());
  } catch (const DomainError& e) {
    throw FlagError(flag, e.what());
  }
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  return for_flag(flag, [&] { return Rational::parse(text); });
}

Rational parse_positive_flag(const std::string& flag, const std::string& text) {
  Rational r = parse_rational_flag(flag, text);
  if (r.sign() <= 0) throw FlagError(flag, "must be positive, got " + text);
  return r;
}

const SystemHandle& parse_system_flag(const std::string& text) {
  return for_flag("--system", [&]() -> const SystemHandle& { return SystemHandle::from_name(text); });
}

Point parse_point_flag(const std::string& flag, const SystemHandle& sys, const std::string& text) {
  return for_flag(flag, [&] { return parse_point(sys, text); });
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw FlagError("--out", "cannot write " + path);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::size_t thread_cap() {
  const char* env = std::getenv("CHAOSLAB_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) {
    throw FlagError("CHAOSLAB_THREADS", "must be a positive integer, got '" + std::string(env) + "'");
  }
  return static_cast<std::size_t>(v);
}

struct WitnessArgs {
  std::string system;
  std::string center;
  std::string radius;
  std::string delta;
  std::optional<std::size_t> verify;
  std::string out;
};

struct VerifyArgs {
  std::string cert;
  std::size_t depth = 1000;
  std::string out;
};

struct SeriesArgs {
  std::string system;
  std::vector<std::string> pair;
  std::size_t steps = 0;
  std::string out;
  std::string format = "csv";
};

struct PeriodicArgs {
  std::string system;
  std::size_t period = 0;
  std::string out;
};

struct CounterexampleArgs {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string delta = "1/2";
  std::string out;
};

int run_witness(const WitnessArgs& a, std::ostream& out, std::ostream& err) {
  const SystemHandle& sys = parse_system_flag(a.system);
  const Point center = parse_point_flag("--center", sys, a.center);
  const Rational radius = parse_positive_flag("--radius", a.radius);
  const Rational delta = parse_positive_flag("--delta", a.delta);
  if (delta > sys.certified_delta) {
    throw FlagError("--delta", delta.str() + " exceeds the certified constant " +
                                   sys.certified_delta.str() + " for " + std::string(sys.name()));
  }
  const WitnessCertificate cert = asymptotic_witness(sys, center, radius, delta);
  emit(dump(certificate_to_json(cert)), a.out, out);
  if (a.verify) {
    const VerificationReport report = verify_certificate(sys, cert, *a.verify);
    err << "verification (M=" << *a.verify << "): " << (report.passed() ? "pass" : "FAIL") << "\n";
    if (!report.passed()) return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.cert, std::ios::binary);
  if (!in) throw FlagError("--cert", "cannot read " + a.cert);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FlagError("--cert", std::string("malformed JSON: ") + e.what());
  }
  const WitnessCertificate cert = for_flag("--cert", [&] { return certificate_from_json(j); });
  const VerificationReport report = verify_certificate(SystemHandle::get(cert.system), cert, a.depth);
  emit(dump(report_to_json(report, a.depth)), a.out, out);
  for (const auto& c : report.clauses) {
    if (!c.passed) err << "clause " << c.name << " failed: " << c.detail << "\n";
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int run_series(const SeriesArgs& a, std::ostream& out) {
  const SystemHandle& sys = parse_system_flag(a.system);
  const Point p = parse_point_flag("--pair", sys, a.pair.at(0));
  const Point q = parse_point_flag("--pair", sys, a.pair.at(1));
  if (a.steps < 1) throw FlagError("--steps", "must be >= 1");
  const SeparationSeries series = separation_series(sys, p, q, a.steps);
  if (a.format == "json") {
    emit(dump(series_to_json(series)), a.out, out);
  } else {
    std::ostringstream csv;
    write_series_csv(series, csv);
    emit(csv.str(), a.out, out);
  }
  return kExitOk;
}

int run_periodic(const PeriodicArgs& a, std::ostream& out) {
  const SystemHandle& sys = parse_system_flag(a.system);
  if (a.period < 1 || a.period > 20) throw FlagError("--period", "must be in [1, 20]");
  nlohmann::json list = nlohmann::json::array();
  switch (sys.id) {
    case SystemId::kTent:
      for (const auto& p : tent_periodic_points(a.period)) list.push_back(p.str());
      break;
    case SystemId::kLogistic:
      for (const auto& p : logistic_periodic_points(a.period)) list.push_back(p.str());
      break;
    case SystemId::kFullShift: {
      const std::uint64_t words = std::uint64_t{1} << a.period;
      for (std::uint64_t w = 0; w < words; ++w) {
        Bits bits(a.period);
        for (std::size_t i = 0; i < a.period; ++i) {
          bits[i] = static_cast<std::uint8_t>((w >> (a.period - 1 - i)) & 1u);
        }
        list.push_back(EPWord::periodic(std::move(bits)).str());
      }
      break;
    }
  }
  emit(dump(list), a.out, out);
  return kExitOk;
}

int run_counterexample(const CounterexampleArgs& a, std::ostream& out) {
  const Rational delta = parse_positive_flag("--delta", a.delta);
  if (delta >= Rational(1)) {
    throw FlagError("--delta", delta.str() + " not below 1 for the eventually-zero shift");
  }
  if (a.samples < 1) throw FlagError("--samples", "must be >= 1");
  const AReport report = a_report(a.samples, a.seed, delta, thread_cap());
  emit(dump(a_report_to_json(report)), a.out, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chaoslab: certificates of asymptotic sensitivity"};
  app.require_subcommand(1);

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "build a periodic-pair certificate");
  witness->add_option("--system", wa.system, "full-shift | tent | logistic")->required();
  witness->add_option("--center", wa.center, "center point of the ball")->required();
  witness->add_option("--radius", wa.radius, "ball radius, a/b")->required();
  witness->add_option("--delta", wa.delta, "sensitivity constant, a/b")->required();
  witness->add_option("--verify", wa.verify, "re-verify to depth M after building");
  witness->add_option("--out", wa.out, "output path (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "independently recheck a certificate");
  verify->add_option("--cert", va.cert, "certificate JSON")->required();
  verify->add_option("--depth", va.depth, "check times k + mL for m = 0..M");
  verify->add_option("--out", va.out, "output path (default stdout)");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "separation time series of a pair");
  series->add_option("--system", sa.system, "full-shift | tent | logistic")->required();
  series->add_option("--pair", sa.pair, "two points")->required()->expected(2);
  series->add_option("--steps", sa.steps, "last time index")->required();
  series->add_option("--out", sa.out, "output path (default stdout)");
  series->add_option("--format", sa.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  PeriodicArgs pa;
  auto* periodic = app.add_subcommand("periodic", "enumerate points of period dividing n");
  periodic->add_option("--system", pa.system, "full-shift | tent | logistic")->required();
  periodic->add_option("--period", pa.period, "n in [1, 20]")->required();
  periodic->add_option("--out", pa.out, "output path (default stdout)");

  CounterexampleArgs ca;
  auto* counter = app.add_subcommand("counterexample", "report on the eventually-zero shift");
  counter->add_option("--samples", ca.samples, "number of sampled pairs");
  counter->add_option("--seed", ca.seed, "RNG seed");
  counter->add_option("--delta", ca.delta, "sensitivity constant below 1");
  counter->add_option("--out", ca.out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*witness) return run_witness(wa, out, err);
    if (*verify) return run_verify(va, out, err);
    if (*series) return run_series(sa, out);
    if (*periodic) return run_periodic(pa, out);
    if (*counter) return run_counterexample(ca, out);
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const UnsupportedDelta& e) {
    err << "error: --delta: " << e.what() << "\n";
    return kExitError;
  } catch (const VerificationFailure& e) {
    err << "error: internal verification failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace chaoslab
