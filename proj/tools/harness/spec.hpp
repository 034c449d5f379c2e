#pragma once

// JSON input specs for groups and Euclidean sets, plus the small string
// formats used on the command line.

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pompeiu/euclidean_set.hpp"
#include "pompeiu/finite_group.hpp"

namespace pompeiu::harness {

/// Malformed input; maps onto exit code 2.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"family": "cyclic|dihedral|symmetric|permutations", "n": 4,
///  "generators": [[...]], "subgroup_generators": [index | [perm] | "label"],
///  "order_cap": 5040}
std::shared_ptr<const CosetSpace> parse_group_spec(const nlohmann::json& j);
std::shared_ptr<const CosetSpace> load_group_spec(const std::string& path);

/// {"dim": 2, "shape": "ball|annulus|polytope|union", "radius", "inner",
///  "outer", "center", "vertices", "members"}
EuclideanSet parse_set_spec(const nlohmann::json& j);
EuclideanSet load_set_spec(const std::string& path);

/// "0,4" -> {0, 4}.
std::vector<std::size_t> parse_coset_list(const std::string& text);
/// "0:20" -> {0, 20}.
std::pair<double, double> parse_range(const std::string& text);
/// "3.5" or "3.5:0.25" (real:imag).
std::complex<double> parse_complex(const std::string& text);

nlohmann::json read_json_file(const std::string& path);

}  // namespace pompeiu::harness
