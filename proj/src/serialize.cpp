#include "polyvf/serialize.hpp"

#include "polyvf/errors.hpp"

namespace polyvf {

Json rat_json(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

Json rat_list_json(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rat_json(v));
  return out;
}

namespace {

Json int_json(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json exponent_json(const Exponent& e) { return Json(e); }

}  // namespace

Json to_json(const ModuleDescriptor& d) {
  Json j;
  j["lambda"] = rat_list_json(d.lambda);
  j["mu"] = rat_list_json(d.mu);
  return j;
}

Json to_json(const RankCertificate& c) {
  Json j;
  j["module"] = to_json(c.module);
  j["shift"] = exponent_json(c.shift);
  j["cutoff"] = c.cutoff;
  Json rows = Json::array();
  for (const auto& w : c.weights)
    rows.push_back({{"weight", w.weight}, {"expected", int_json(w.expected)}, {"vectors", w.vectors},
                    {"rank", w.rank}, {"ok", w.ok}});
  j["weights"] = rows;
  j["verified"] = c.verified;
  return j;
}

Json to_json(const GeneratorSet& s) {
  Json out = Json::array();
  for (std::size_t g = 0; g < s.size(); ++g) out.push_back({{"exponent", s.exponents[g]}, {"free_rank", s.free_ranks[g]}});
  return out;
}

Json to_json(const ShiftResult& r) {
  Json j;
  j["shift"] = exponent_json(r.shift);
  j["candidates_tried"] = r.candidates_tried;
  j["certificate"] = to_json(r.certificate);
  return j;
}

Json to_json(const RationalSeries& s) {
  Json j;
  j["num"] = rat_list_json(s.numerator().coefficients());
  j["den"] = rat_list_json(s.denominator().coefficients());
  j["text"] = s.to_string();
  return j;
}

Json to_json(const PartialSumFit& f) {
  Json j;
  j["polynomial"] = f.polynomial.to_string("n");
  j["coefficients"] = rat_list_json(f.polynomial.coefficients());
  j["degree"] = f.degree;
  j["leading_constant"] = int_json(f.leading_constant);
  j["stable_from"] = f.stable_from;
  return j;
}

Json to_json(const PresentationCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"weight", r.weight}, {"series_coefficient", rat_json(r.series_coefficient)},
                    {"module_dimension", int_json(r.module_dimension)}, {"standard_monomials", r.standard_monomials},
                    {"standard_rank", r.standard_rank}});
  return {{"rows", rows}, {"verified", c.verified}};
}

Json to_json(const PolyModulePresentation& p) {
  Json j;
  j["num_generators"] = p.num_generators;
  j["ring_vars"] = p.ring_vars;
  j["variable_weights"] = p.variable_weights;
  j["generator_weights"] = p.generator_weights;
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    Json row = Json::array();
    for (const auto& c : rel) row.push_back(c.to_string());
    rels.push_back(row);
  }
  j["relations"] = rels;
  j["groebner"] = p.groebner;
  return j;
}

Json to_json(const HomologyTable& t) {
  Json j;
  j["algebra"] = t.algebra.to_string();
  j["coefficients"] = t.coefficients.to_string();
  j["p_max"] = t.p_max;
  j["w_min"] = t.w_min;
  j["w_max"] = t.w_max;
  Json dims = Json::array(), chains = Json::array(), nonzero = Json::array();
  for (int p = 0; p <= t.p_max; ++p) {
    Json drow = Json::array(), crow = Json::array();
    for (int w = t.w_min; w <= t.w_max; ++w) {
      const auto& s = t.slices.at({p, w});
      drow.push_back(s.homology());
      crow.push_back(s.chain_dim);
      if (s.homology() != 0) nonzero.push_back({{"p", p}, {"w", w}, {"dim", s.homology()}});
    }
    dims.push_back(drow);
    chains.push_back(crow);
  }
  j["homology"] = dims;
  j["chain_dims"] = chains;
  j["nonzero"] = nonzero;
  j["d_squared_zero"] = t.d_squared_zero;
  if (!t.euler.empty()) {
    Json e = Json::array();
    for (const auto& [w, v] : t.euler) e.push_back({{"w", w}, {"chains", v.first}, {"homology", v.second}});
    j["euler"] = e;
    j["euler_ok"] = t.euler_ok;
  }
  return j;
}

Json to_json(const TSpace& ts) {
  Json j;
  j["n"] = ts.n;
  j["cutoff"] = ts.cutoff;
  Json basis = Json::object();
  for (const auto& [w, polys] : ts.graded_basis) {
    Json list = Json::array();
    for (const auto& f : polys) list.push_back(f.to_string());
    basis[std::to_string(w)] = list;
  }
  j["graded_basis"] = basis;
  return j;
}

Json to_json(const TSpaceSeries& s) {
  Json j;
  j["dims"] = s.dims;
  j["denominator_order"] = s.denominator_order;
  j["numerator_degree"] = s.numerator_degree;
  j["verified_window"] = s.verified_window;
  j["fit"] = s.fit ? to_json(*s.fit) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<WeightVector>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) out.push_back({{"alpha", w.alpha}, {"multiplicity", w.multiplicity}});
  return out;
}

std::vector<MPoly> polys_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("polys"))
    throw std::invalid_argument("polynomial file needs keys 'n' and 'polys'");
  const auto n = j.at("n").get<std::size_t>();
  auto vars = default_variables(n);
  std::vector<MPoly> out;
  for (const auto& pj : j.at("polys")) {
    MPoly f(vars);
    for (const auto& tj : pj) {
      auto e = tj.at("exp").get<Exponent>();
      if (e.size() != n) throw DimensionMismatch("exponent length differs from n");
      for (int x : e)
        if (x < 0) throw std::invalid_argument("exponents must be nonnegative");
      const auto& cj = tj.at("coef");
      Rat c = cj.is_string() ? parse_rat(cj.get<std::string>()) : Rat(cj.get<long>());
      f.add_term(e, c);
    }
    out.push_back(std::move(f));
  }
  return out;
}

Json polys_to_json(const std::vector<MPoly>& polys, std::size_t n) {
  Json list = Json::array();
  for (const auto& f : polys) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
    list.push_back(terms);
  }
  return {{"n", n}, {"polys", list}};
}

}  // namespace polyvf
