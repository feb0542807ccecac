#include "polyvf/pipelines.hpp"

#include <sstream>
#include <stdexcept>

#include "polyvf/errors.hpp"
#include "polyvf/pbw_hilbert.hpp"
#include "polyvf/spanning.hpp"
#include "polyvf/specht.hpp"

namespace polyvf {

namespace {

int small_integer(const Rat& q, const char* what) {
  if (!is_integer(q) || !q.get_num().fits_sint_p()) throw std::invalid_argument(std::string(what) + " must be integers");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

ModuleDescriptor make_descriptor(std::size_t r, const std::string& lambda, const std::string& mu) {
  auto expand = [r](const std::string& text, const char* name) {
    auto values = parse_rat_list(text);
    if (values.size() == 1 && r > 1) values.assign(r, values.front());
    if (values.size() != r) throw std::invalid_argument(std::string(name) + " needs " + std::to_string(r) + " entries");
    return values;
  };
  return ModuleDescriptor(expand(lambda, "lambda"), expand(mu, "mu"));
}

std::vector<Exponent> parse_exponents(const std::string& text, std::size_t r) {
  std::vector<Exponent> out;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    Exponent a;
    for (const auto& q : parse_rat_list(entry)) {
      int v = small_integer(q, "exponents");
      if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
      a.push_back(v);
    }
    if (a.size() != r) throw std::invalid_argument("each exponent needs " + std::to_string(r) + " entries");
    out.push_back(a);
  }
  if (out.empty()) throw std::invalid_argument("no generators given");
  return out;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> lambda;
  for (const auto& q : parse_rat_list(text)) lambda.push_back(small_integer(q, "partition entries"));
  return lambda;
}

Report run_phi(const ModuleDescriptor& desc, std::size_t max_r) {
  UPoly p = phi(desc, max_r);
  Report rep;
  rep.json["module"] = to_json(desc);
  rep.json["poly"] = p.to_string("N");
  rep.json["coefficients"] = rat_list_json(p.coefficients());
  rep.json["degree"] = p.degree();
  rep.json["leading_coefficient"] = rat_json(p.leading_coefficient());
  return rep;
}

Report run_shift(const ModuleDescriptor& desc, int bound, int cutoff) {
  auto result = find_good_shift(desc, bound, cutoff);
  return {to_json(result), result.certificate.verified};
}

Report run_span(const ModuleDescriptor& desc, int cutoff, int bound, int d,
                const std::optional<std::vector<Exponent>>& given) {
  GeneratorSet s;
  if (given)
    s = GeneratorSet::full_rank(*given, desc.rank());
  else
    s = d == 1 ? spanning_generators(desc, cutoff, bound) : spanning_generators_L_d(desc, d, cutoff, bound);
  RankCertificate cert = d == 1 ? check_spanning(s, desc, cutoff) : check_span_under_L_d(s, desc, d, cutoff);
  Report rep;
  rep.json["module"] = to_json(desc);
  rep.json["d"] = d;
  rep.json["generators"] = to_json(s);
  rep.json["certificate"] = to_json(cert);
  rep.verified = cert.verified;
  return rep;
}

Report run_hilbert(const ModuleDescriptor& desc, int cutoff, int bound, int window) {
  GeneratorSet s = spanning_generators(desc, cutoff, bound);
  auto pres = associated_graded_presentation(desc, s, cutoff);
  auto series = hilbert_series(pres);
  auto cert = certify_presentation(pres, desc, s, cutoff);
  Report rep;
  rep.json["module"] = to_json(desc);
  rep.json["generators"] = to_json(s);
  rep.json["presentation"] = to_json(pres);
  rep.json["series"] = to_json(series);
  rep.json["pole_order_at_one"] = series.pole_order_at_one();
  try {
    rep.json["partial_sums"] = to_json(partial_sum_polynomial(series, window));
  } catch (const Inconclusive& e) {
    rep.json["partial_sums"] = {{"inconclusive", e.what()}};
  }
  rep.json["certificate"] = to_json(cert);
  rep.verified = cert.verified;
  return rep;
}

Report run_homology(const HomologyTable& table) { return {to_json(table), table.d_squared_zero && table.euler_ok}; }

Report run_weights(const std::vector<int>& lambda, std::size_t n, int wmax) {
  auto support = weight_support(lambda, n);
  std::size_t total = 0;
  for (const auto& w : support) total += w.multiplicity;
  auto parts = decompose_coinduced(lambda, n);
  Json summands = Json::array();
  for (const auto& [desc, mult] : parts) summands.push_back({{"module", to_json(desc)}, {"multiplicity", mult}});
  Json graded = Json::array();
  for (int w = 0; w <= wmax; ++w) {
    Int dim = 0;
    for (const auto& [desc, mult] : parts) dim += graded_dimension(desc.rank(), w) * static_cast<unsigned long>(mult);
    graded.push_back(rat_json(Rat(dim)));
  }
  Report rep;
  rep.json["lambda"] = lambda;
  rep.json["n"] = n;
  rep.json["weights"] = to_json(support);
  rep.json["dimension"] = total;
  rep.json["summands"] = summands;
  rep.json["graded_dimensions"] = graded;
  return rep;
}

Report run_specht(const Json& input, int cutoff, int check_subs) {
  auto ts = closure_basis(polys_from_json(input), cutoff);
  Report rep;
  rep.json["closure"] = to_json(ts);
  rep.json["series"] = to_json(tspace_series(ts));
  if (check_subs > 0) {
    Json checks = Json::array();
    for (int k = 1; k <= check_subs; ++k)
      for (const auto& p : {t_power(0) + t_power(k), t_power(k)}) {
        bool ok = substitution_closed(ts, p);
        rep.verified = rep.verified && ok;
        checks.push_back({{"p", p.to_string()}, {"closed", ok}});
      }
    rep.json["substitution_checks"] = checks;
  }
  return rep;
}

}  // namespace polyvf
