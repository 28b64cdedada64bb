#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "galstab/cyclotomic.hpp"
#include "galstab/serialize.hpp"

namespace galstab::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 pass, 1 ran but did not pass, 2 input error, 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `Q`, `Q(i)`, `Q(zeta_M)` or `fix:M:a1,a2,...`, as a subfield of Q(zeta_m).
SubfieldHandle parse_subfield(const std::string& spec, const CyclotomicField& field);
/// `1,2|3` (1-based coordinates) to 0-based blocks.
std::vector<std::vector<std::size_t>> parse_partition(const std::string& spec, std::size_t n);
/// Elements separated by `;`, each a comma-separated list of power-basis coefficients (`1/2` allowed).
std::vector<CycElement> parse_basis(const std::string& spec, const CyclotomicField& field);

}  // namespace galstab::cli
