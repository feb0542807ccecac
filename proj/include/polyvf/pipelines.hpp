#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyvf/homology.hpp"
#include "polyvf/serialize.hpp"
#include "polyvf/tensormod.hpp"

namespace polyvf {

/// JSON report of one pipeline run and whether every certificate in it verified.
struct Report {
  Json json;
  bool verified = true;
};

/// Descriptor from comma separated "p/q" lists; a single entry is broadcast to all r factors.
ModuleDescriptor make_descriptor(std::size_t r, const std::string& lambda, const std::string& mu);
/// Exponent vectors written "a,b;c,d", each with r entries.
std::vector<Exponent> parse_exponents(const std::string& text, std::size_t r);
/// Nonincreasing integer list "3,1,0".
std::vector<int> parse_partition(const std::string& text);

Report run_phi(const ModuleDescriptor& desc, std::size_t max_r = 5);
Report run_shift(const ModuleDescriptor& desc, int bound, int cutoff);
/// Searches a spanning set unless `given` is set, then certifies it under L_d.
Report run_span(const ModuleDescriptor& desc, int cutoff, int bound, int d = 1,
                const std::optional<std::vector<Exponent>>& given = std::nullopt);
Report run_hilbert(const ModuleDescriptor& desc, int cutoff, int bound, int window);
Report run_homology(const HomologyTable& table);
Report run_weights(const std::vector<int>& lambda, std::size_t n, int wmax);
/// Closure and series of the polynomials in `input`; checks t + t^{k+1} and t^{k+1} for k <= check_subs.
Report run_specht(const Json& input, int cutoff, int check_subs);

}  // namespace polyvf
