// su2meas: sampling and closed-form probabilities of SU(2)-invariant
// measures on C^2, plus a self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 I/O failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "su2meas/errors.hpp"
#include "su2meas/format.hpp"
#include "su2meas/measure.hpp"
#include "su2meas/radial.hpp"
#include "su2meas/rng.hpp"
#include "su2meas/sampler.hpp"
#include "su2meas/stats.hpp"
#include "profile_arg.hpp"
#include "verify.hpp"

namespace {

using namespace su2meas;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("SU2MEAS_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw std::invalid_argument(std::string("SU2MEAS_SEED is not an integer: ") + env);
    }
    return value;
  }
  return 0;  // documented default
}

/// Stdout by default, a file when --out is given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish() {
    stream().flush();
    if (!stream()) throw IoError("write failure on output stream");
  }

 private:
  std::ofstream file_;
};

struct SampleOptions {
  std::string profile = "gaussian";
  std::uint64_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string out;
};

int run_sample(const SampleOptions& opt) {
  const measure::InvariantMeasure m(
      radial::normalize(tools::parse_profile_spec(opt.profile)));
  RandomStream rng(resolve_seed(opt.seed));
  OutputTarget out(opt.out);

  if (opt.format == "csv") {
    sampler::write_csv_header(out.stream());
    sampler::stream_invariant(
        m, opt.n, rng, [&out](std::span<const coords::CartesianPoint> chunk) {
          sampler::write_csv_rows(chunk, out.stream());
        });
  } else {
    sampler::stream_invariant(
        m, opt.n, rng, [&out](std::span<const coords::CartesianPoint> chunk) {
          for (const auto& p : chunk) {
            out.stream() << "{\"x\":" << format_g17(p.x)
                         << ",\"y\":" << format_g17(p.y)
                         << ",\"u\":" << format_g17(p.u)
                         << ",\"v\":" << format_g17(p.v) << "}\n";
          }
        });
  }
  out.finish();
  return 0;
}

int run_cone(double psi_lo, double psi_hi, const std::string& out_path) {
  if (!(psi_lo >= 0.0) || !(psi_hi >= psi_lo) || !(psi_hi <= coords::half_pi)) {
    throw std::invalid_argument("angles must satisfy 0 <= psi_lo <= psi_hi <= pi/2");
  }
  // the value is profile independent; any invariant measure gives it
  const measure::InvariantMeasure m(
      radial::normalize(radial::RadialProfile::gaussian()));
  const double value = m.cone_measure(measure::AngleSet::interval(psi_lo, psi_hi));
  OutputTarget out(out_path);
  out.stream() << "{\"measure\": " << format_g17(value) << "}\n";
  out.finish();
  return 0;
}

struct BornOptions {
  double a = 0.0;
  double b = 0.0;
  bool monte_carlo = false;
  std::string profile = "gaussian";
  std::uint64_t n = 1000000;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_born(const BornOptions& opt) {
  const double closed = measure::born_probability(opt.a, opt.b);
  OutputTarget out(opt.out);
  if (!opt.monte_carlo) {
    out.stream() << "{\"born\": " << format_g17(closed) << "}\n";
    out.finish();
    return 0;
  }
  const measure::InvariantMeasure m(
      radial::normalize(tools::parse_profile_spec(opt.profile)));
  RandomStream rng(resolve_seed(opt.seed));
  const auto batch = sampler::sample_invariant(m, opt.n, rng);
  const double estimate = stats::estimate_born(batch, opt.a, opt.b);
  out.stream() << "{\"born\": " << format_g17(closed)
               << ", \"estimate\": " << format_g17(estimate)
               << ", \"difference\": " << format_g17(std::abs(estimate - closed))
               << "}\n";
  out.finish();
  return 0;
}

struct VerifyOptions {
  std::string profile = "gaussian";
  std::uint64_t n = 100000;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_verify(const VerifyOptions& opt) {
  tools::VerifyConfig cfg;
  cfg.profile = tools::parse_profile_spec(opt.profile);
  cfg.n = opt.n;
  cfg.seed = resolve_seed(opt.seed);
  const auto reports = tools::run_verify_suite(cfg);
  OutputTarget out(opt.out);
  bool all_pass = true;
  for (const auto& r : reports) {
    out.stream() << stats::to_json_line(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  out.finish();
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "su2meas: SU(2)-invariant probability measures on C^2.\n"
      "Draws samples, evaluates closed-form cone/shell/Born probabilities\n"
      "and runs a statistical verification suite.\n"
      "Seeds come from --seed, else the SU2MEAS_SEED environment variable, "
      "else 0."};
  app.require_subcommand(1);

  const std::string profile_help =
      "gaussian | exponential:<rate> | ball:<R> | tabulated:<path>";

  SampleOptions sample_opt;
  auto* sample = app.add_subcommand(
      "sample", "Draw i.i.d. points of an invariant measure (CSV `x,y,u,v`)");
  sample->add_option("--profile", sample_opt.profile, profile_help)
      ->capture_default_str();
  sample->add_option("--n", sample_opt.n, "number of points")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_opt.seed, "64-bit seed");
  sample->add_option("--format", sample_opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sample->add_option("--out", sample_opt.out, "output path (default stdout)");

  double cone_lo = 0.0;
  double cone_hi = 0.0;
  std::string cone_out;
  auto* cone = app.add_subcommand(
      "cone", "Closed-form measure of the cone psi in [psi_lo, psi_hi] "
              "(radians; profile independent)");
  cone->add_option("psi_lo", cone_lo, "lower angle in [0, pi/2]")->required();
  cone->add_option("psi_hi", cone_hi, "upper angle in [0, pi/2]")->required();
  cone->add_option("--out", cone_out, "output path (default stdout)");

  BornOptions born_opt;
  auto* born = app.add_subcommand(
      "born", "Born probability a^2/(a^2+b^2), optionally with a Monte "
              "Carlo estimate");
  born->add_option("a", born_opt.a, "amplitude magnitude |a| >= 0")->required();
  born->add_option("b", born_opt.b, "amplitude magnitude |b| >= 0")->required();
  born->add_flag("--mc", born_opt.monte_carlo,
                 "also estimate from --n samples of --profile");
  born->add_option("--profile", born_opt.profile, profile_help)
      ->capture_default_str();
  born->add_option("--n", born_opt.n, "sample count for --mc")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  born->add_option("--seed", born_opt.seed, "64-bit seed");
  born->add_option("--out", born_opt.out, "output path (default stdout)");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "Run the verification suite; JSON-lines reports, exit 1 on "
                "any failure");
  verify->add_option("--profile", verify_opt.profile, profile_help)
      ->capture_default_str();
  verify->add_option("--n", verify_opt.n, "sample count (>= 1000)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", verify_opt.seed, "64-bit seed");
  verify->add_option("--out", verify_opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) return run_sample(sample_opt);
    if (cone->parsed()) return run_cone(cone_lo, cone_hi, cone_out);
    if (born->parsed()) return run_born(born_opt);
    if (verify->parsed()) return run_verify(verify_opt);
  } catch (const ProfileParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DivergentMomentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
