#include "resinfo/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace resinfo {
namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw std::invalid_argument(std::string("missing required field \"") + field + "\"");
  }
  return j.at(field);
}

std::vector<double> number_array(const json& j, const char* field) {
  const json& arr = require_field(j, field);
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument(std::string("field \"") + field +
                                "\" must be a nonempty array of numbers");
  }
  std::vector<double> values;
  values.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("field \"") + field +
                                  "\" must contain only numbers");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

}  // namespace

DiscreteBelief belief_from_json(const json& j) {
  return DiscreteBelief(number_array(j, "probs"));
}

SemanticPartition partition_from_json(const json& j) {
  const json& arr = require_field(j, "regions");
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument("field \"regions\" must be a nonempty array of index arrays");
  }
  std::vector<Region> regions;
  std::size_t alphabet_size = 0;
  for (const auto& r : arr) {
    if (!r.is_array()) {
      throw std::invalid_argument("field \"regions\" must contain arrays of state indices");
    }
    std::vector<std::size_t> members;
    members.reserve(r.size());
    for (const auto& v : r) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument("field \"regions\" must contain nonnegative integer indices");
      }
      const auto idx = static_cast<std::size_t>(v.get<long long>());
      members.push_back(idx);
      alphabet_size = std::max(alphabet_size, idx + 1);
    }
    regions.emplace_back(std::move(members));
  }
  return SemanticPartition(std::move(regions), alphabet_size);
}

GaussianBelief gaussian_from_json(const json& j) {
  const std::vector<double> mean = number_array(j, "mean");
  const json& cov = require_field(j, "cov");
  if (!cov.is_array() || cov.size() != mean.size()) {
    throw std::invalid_argument("field \"cov\" must be a square matrix matching \"mean\"");
  }
  Eigen::MatrixXd covariance(mean.size(), mean.size());
  for (std::size_t i = 0; i < cov.size(); ++i) {
    const auto& row = cov.at(i);
    if (!row.is_array() || row.size() != mean.size()) {
      throw std::invalid_argument("field \"cov\" must be a square matrix matching \"mean\"");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row.at(k).is_number()) {
        throw std::invalid_argument("field \"cov\" must contain only numbers");
      }
      covariance(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          row.at(k).get<double>();
    }
  }
  Eigen::VectorXd mu = Eigen::Map<const Eigen::VectorXd>(mean.data(),
                                                         static_cast<Eigen::Index>(mean.size()));
  return GaussianBelief(std::move(mu), std::move(covariance));
}

HalfSpace halfspace_from_json(const json& j) {
  const std::vector<double> w = number_array(j, "w");
  const json& t = require_field(j, "T");
  if (!t.is_number()) {
    throw std::invalid_argument("field \"T\" must be a number");
  }
  Eigen::VectorXd normal =
      Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  return HalfSpace(std::move(normal), t.get<double>());
}

OrthantPolytope polytope_from_json(const json& j) {
  const json& m = require_field(j, "m");
  const json& a = require_field(j, "a");
  if (!m.is_number_integer()) {
    throw std::invalid_argument("field \"m\" must be an integer");
  }
  if (!a.is_number()) {
    throw std::invalid_argument("field \"a\" must be a number");
  }
  return OrthantPolytope(m.get<int>(), a.get<double>());
}

}  // namespace resinfo
