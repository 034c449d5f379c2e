#include "harness/spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pompeiu/error.hpp"

namespace pompeiu::harness {
namespace {

using nlohmann::json;

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw SpecError("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw SpecError("invalid " + what + ": '" + text + "'");
  return v;
}

std::size_t require_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    throw SpecError(std::string("missing or invalid non-negative integer '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw SpecError(std::string("missing or invalid number '") + key + "'");
  return j[key].get<double>();
}

Permutation parse_permutation(const json& j) {
  if (!j.is_array()) throw SpecError("permutation must be an array of images");
  Permutation p;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw SpecError("permutation entries must be >= 0");
    p.push_back(x.get<std::uint32_t>());
  }
  return p;
}

Point parse_point(const json& j, int dim) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim)) {
    throw SpecError("point must be an array of " + std::to_string(dim) + " numbers");
  }
  Point p{};
  for (int k = 0; k < dim; ++k) {
    if (!j[k].is_number()) throw SpecError("point coordinates must be numbers");
    p[k] = j[k].get<double>();
  }
  return p;
}

EuclideanSet parse_set(const json& j, int inherited_dim) {
  if (!j.is_object()) throw SpecError("set spec must be a JSON object");
  int dim = inherited_dim;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw SpecError("'dim' must be an integer");
    dim = j["dim"].get<int>();
  }
  if (dim == 0) throw SpecError("missing 'dim'");
  if (!j.contains("shape") || !j["shape"].is_string()) throw SpecError("missing 'shape'");
  const auto shape = j["shape"].get<std::string>();
  const Point center = j.contains("center") ? parse_point(j["center"], dim) : Point{};
  if (shape == "ball") return EuclideanSet::ball(dim, require_number(j, "radius"), center);
  if (shape == "annulus") {
    return EuclideanSet::annulus(dim, require_number(j, "inner"), require_number(j, "outer"), center);
  }
  if (shape == "polytope") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw SpecError("polytope needs 'vertices'");
    std::vector<Point> v;
    for (const auto& x : j["vertices"]) v.push_back(parse_point(x, dim));
    return EuclideanSet::polytope(dim, std::move(v));
  }
  if (shape == "union") {
    if (!j.contains("members") || !j["members"].is_array()) throw SpecError("union needs 'members'");
    std::vector<EuclideanSet> members;
    for (const auto& m : j["members"]) members.push_back(parse_set(m, dim));
    return EuclideanSet::disjoint_union(std::move(members));
  }
  throw SpecError("unknown shape '" + shape + "'");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("'" + path + "': " + e.what());
  }
}

std::shared_ptr<const CosetSpace> parse_group_spec(const json& j) {
  if (!j.is_object()) throw SpecError("group spec must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) throw SpecError("missing 'family'");
  const auto family = j["family"].get<std::string>();
  GroupSpec spec;
  if (j.contains("order_cap")) spec.order_cap = require_size(j, "order_cap");
  if (family == "cyclic") {
    spec.family = GroupFamily::Cyclic;
  } else if (family == "dihedral") {
    spec.family = GroupFamily::Dihedral;
  } else if (family == "symmetric") {
    spec.family = GroupFamily::Symmetric;
  } else if (family == "permutations") {
    spec.family = GroupFamily::Permutations;
  } else {
    throw SpecError("unknown family '" + family + "'");
  }
  if (spec.family == GroupFamily::Permutations) {
    if (!j.contains("generators") || !j["generators"].is_array()) throw SpecError("'permutations' needs 'generators'");
    for (const auto& g : j["generators"]) spec.generators.push_back(parse_permutation(g));
  } else {
    spec.n = require_size(j, "n");
  }
  auto group = std::make_shared<const FiniteGroup>(build_group(spec));

  std::vector<Element> k_gens;
  if (j.contains("subgroup_generators")) {
    if (!j["subgroup_generators"].is_array()) throw SpecError("'subgroup_generators' must be an array");
    for (const auto& g : j["subgroup_generators"]) {
      if (g.is_number_integer()) {
        const long long idx = g.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= group->order()) {
          throw SpecError("subgroup generator index " + std::to_string(idx) + " out of range");
        }
        k_gens.push_back(static_cast<Element>(idx));
      } else if (g.is_string()) {
        const auto found = group->find_label(g.get<std::string>());
        if (!found) throw SpecError("no element labelled '" + g.get<std::string>() + "' in " + group->name());
        k_gens.push_back(*found);
      } else if (g.is_array()) {
        if (!group->has_permutations()) throw SpecError(group->name() + " has no permutation representation");
        const auto found = group->find_permutation(parse_permutation(g));
        if (!found) throw SpecError("permutation " + g.dump() + " is not in " + group->name());
        k_gens.push_back(*found);
      } else {
        throw SpecError("subgroup generator must be an index, label or permutation");
      }
    }
  }
  return std::make_shared<const CosetSpace>(std::move(group), k_gens);
}

std::shared_ptr<const CosetSpace> load_group_spec(const std::string& path) { return parse_group_spec(read_json_file(path)); }

EuclideanSet parse_set_spec(const json& j) { return parse_set(j, 0); }

EuclideanSet load_set_spec(const std::string& path) { return parse_set_spec(read_json_file(path)); }

std::vector<std::size_t> parse_coset_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw SpecError("empty entry in coset list '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw SpecError("invalid coset index '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw SpecError("coset list is empty");
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw SpecError("range must look like LO:HI, got '" + text + "'");
  return {parse_double(text.substr(0, colon), "range"), parse_double(text.substr(colon + 1), "range")};
}

std::complex<double> parse_complex(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_double(text, "candidate"), 0.0};
  return {parse_double(text.substr(0, colon), "candidate"), parse_double(text.substr(colon + 1), "candidate")};
}

}  // namespace pompeiu::harness
