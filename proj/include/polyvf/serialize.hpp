#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polyvf/homology.hpp"
#include "polyvf/pbw_hilbert.hpp"
#include "polyvf/specht.hpp"
#include "polyvf/spanning.hpp"
#include "polyvf/tensormod.hpp"
#include "polyvf/upoly.hpp"

namespace polyvf {

using Json = nlohmann::ordered_json;

/// Integers that fit a 64-bit value become JSON numbers, everything else a "p/q" string.
Json rat_json(const Rat& q);
Json rat_list_json(const std::vector<Rat>& values);

Json to_json(const ModuleDescriptor& d);
Json to_json(const RankCertificate& c);
Json to_json(const GeneratorSet& s);
Json to_json(const ShiftResult& r);
/// {"num": [...], "den": [...]}, coefficients from degree 0 upward.
Json to_json(const RationalSeries& s);
Json to_json(const PartialSumFit& f);
Json to_json(const PresentationCertificate& c);
Json to_json(const PolyModulePresentation& p);
Json to_json(const HomologyTable& t);
Json to_json(const TSpace& ts);
Json to_json(const TSpaceSeries& s);
Json to_json(const std::vector<WeightVector>& weights);

/// Reads polynomials written as {"n": n, "polys": [[{"exp": [..], "coef": "p/q"}, ...], ...]}.
std::vector<MPoly> polys_from_json(const Json& j);
Json polys_to_json(const std::vector<MPoly>& polys, std::size_t n);

}  // namespace polyvf
