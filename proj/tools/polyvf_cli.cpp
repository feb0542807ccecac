#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyvf/errors.hpp"
#include "polyvf/homology.hpp"
#include "polyvf/pipelines.hpp"

using namespace polyvf;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kExhausted = 2;
constexpr int kUsage = 64;

struct ModuleArgs {
  std::size_t r = 1;
  std::string lambda = "0";
  std::string mu = "0";

  void attach(CLI::App* app) {
    app->add_option("--r", r, "Number of tensor factors")->check(CLI::Range(1, 64));
    app->add_option("--lambda", lambda, "Comma separated rationals p/q, one per factor or one for all");
    app->add_option("--mu", mu, "Comma separated rationals p/q, one per factor or one for all");
  }

  ModuleDescriptor descriptor() const { return make_descriptor(r, lambda, mu); }
};

struct Output {
  std::string format = "json";
  std::string path;

  void attach(CLI::App* app, std::vector<std::string> formats) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    app->add_option("--output,-o", path, "Write to this file instead of stdout");
  }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << text;
  }

  void emit(const Json& j) const {
    if (format == "text") {
      std::ostringstream os;
      for (const auto& [key, value] : j.items()) os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      emit(os.str());
    } else {
      emit(j.dump(2) + "\n");
    }
  }
};

int verdict(bool verified) { return verified ? kOk : kVerificationFailure; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial vector fields: tensor-field modules, spanning sets, Hilbert series and homology"};
  app.require_subcommand(1);

  ModuleArgs margs;
  Output out;

  auto* phi_cmd = app.add_subcommand("phi", "Determinant polynomial of the Newton operator on the degree-r component");
  std::size_t max_r = 5;
  margs.attach(phi_cmd);
  phi_cmd->add_option("--max-r", max_r, "Refuse larger r");
  out.attach(phi_cmd, {"json", "text"});

  auto* shift_cmd = app.add_subcommand("shift", "Search for a shift N with a certified graded basis");
  int bound = 10, cutoff = 8;
  margs.attach(shift_cmd);
  shift_cmd->add_option("--bound", bound, "Largest shift entry to try")->check(CLI::NonNegativeNumber);
  shift_cmd->add_option("--cutoff", cutoff, "Highest weight checked")->check(CLI::PositiveNumber);
  out.attach(shift_cmd, {"json", "text"});

  auto* span_cmd = app.add_subcommand("span", "Finite spanning set with its rank certificate");
  int d = 1;
  margs.attach(span_cmd);
  span_cmd->add_option("--bound", bound, "Largest shift entry to try")->check(CLI::NonNegativeNumber);
  span_cmd->add_option("--cutoff", cutoff, "Highest weight checked")->check(CLI::PositiveNumber);
  span_cmd->add_option("--d", d, "Use words in e_d, e_2d, ..., e_rd")->check(CLI::PositiveNumber);
  std::string given;
  span_cmd->add_option("--generators", given, "Check these exponents instead of searching, e.g. \"0,0;1,0\"");
  out.attach(span_cmd, {"json", "text"});

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Associated graded presentation, Groebner basis and Hilbert series");
  int window = 24;
  margs.attach(hilbert_cmd);
  hilbert_cmd->add_option("--bound", bound, "Largest shift entry to try")->check(CLI::NonNegativeNumber);
  hilbert_cmd->add_option("--cutoff", cutoff, "Highest weight checked")->check(CLI::PositiveNumber);
  hilbert_cmd->add_option("--window", window, "Window for the partial sum fit")->check(CLI::PositiveNumber);
  out.attach(hilbert_cmd, {"json", "text"});

  auto* homology_cmd = app.add_subcommand("homology", "Chevalley-Eilenberg homology table");
  std::string algebra = "L1:1", coeffs = "trivial";
  int pmax = 2, wmax = 10;
  unsigned jobs = 1;
  std::size_t max_slice = 20000;
  homology_cmd->add_option("--algebra", algebra, "W:n, L<d>:n or D:n");
  homology_cmd->add_option("--coeffs", coeffs, "trivial or T:<lambda list>;<mu list>");
  homology_cmd->add_option("--pmax", pmax, "Highest homological degree")->check(CLI::NonNegativeNumber);
  homology_cmd->add_option("--wmax", wmax, "Highest weight");
  homology_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  homology_cmd->add_option("--max-slice", max_slice, "Largest chain space allowed")->check(CLI::PositiveNumber);
  out.attach(homology_cmd, {"json", "csv", "text"});

  auto* weights_cmd = app.add_subcommand("weights", "Weights of V_lambda and the coordinate-sum decomposition of T_lambda");
  std::string partition = "1,0";
  std::size_t n = 2;
  int weights_wmax = 6;
  weights_cmd->add_option("--partition", partition, "Dominant weight lambda_1 >= ... >= lambda_n")->required();
  weights_cmd->add_option("--n", n, "Rank of gl_n")->check(CLI::Range(1, 16));
  weights_cmd->add_option("--wmax", weights_wmax, "Highest weight for graded dimensions")->check(CLI::NonNegativeNumber);
  out.attach(weights_cmd, {"json", "text"});

  auto* specht_cmd = app.add_subcommand("specht", "Substitution closure of polynomials and its dimension series");
  std::string generators;
  int specht_cutoff = 10, check_subs = 0;
  specht_cmd->add_option("--generators", generators, "JSON file {\"n\":..,\"polys\":[..]} or inline JSON")->required();
  specht_cmd->add_option("--cutoff", specht_cutoff, "Highest weight")->check(CLI::PositiveNumber);
  specht_cmd->add_option("--check-substitutions", check_subs, "Spot check closure under t+t^2, t^2, ... up to this many")
      ->check(CLI::NonNegativeNumber);
  out.attach(specht_cmd, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report rep;
    if (*phi_cmd) rep = run_phi(margs.descriptor(), max_r);
    if (*shift_cmd) rep = run_shift(margs.descriptor(), bound, cutoff);
    if (*span_cmd) {
      auto desc = margs.descriptor();
      std::optional<std::vector<Exponent>> exps;
      if (!given.empty()) exps = parse_exponents(given, desc.rank());
      rep = run_span(desc, cutoff, bound, d, exps);
    }
    if (*hilbert_cmd) rep = run_hilbert(margs.descriptor(), cutoff, bound, window);
    if (*homology_cmd) {
      HomologyOptions opts;
      opts.jobs = jobs;
      opts.max_slice_dim = max_slice;
      auto table = homology_table(AlgebraDescriptor::parse(algebra), Coefficients::parse(coeffs), pmax, wmax, opts);
      rep = run_homology(table);
      if (out.format == "csv") {
        out.emit(table.to_csv());
        return verdict(rep.verified);
      }
    }
    if (*weights_cmd) rep = run_weights(parse_partition(partition), n, weights_wmax);
    if (*specht_cmd) {
      Json input;
      std::ifstream file(generators);
      try {
        input = file ? Json::parse(file) : Json::parse(generators);
      } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("cannot parse generators: ") + e.what());
      }
      rep = run_specht(input, specht_cutoff, check_subs);
    }
    out.emit(rep.json);
    return verdict(rep.verified);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExhausted;
  } catch (const SearchFailure& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExhausted;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
}
