#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "json.hpp"

#include "complab/composition.hpp"
#include "complab/gaussian_model.hpp"
#include "complab/logic_tasks.hpp"
#include "complab/lsa.hpp"

namespace complab {

using Json = nlohmann::json;

Json matrix_to_json(const Eigen::MatrixXd& m);  // row-major values + shape
Eigen::MatrixXd matrix_from_json(const Json& j);

/// Covariance/weight fixture document:
/// {d, K, active_sets, lambda, delta, epsilon, seed}.
Json fixture_to_json(const TaskSpace& space, const CovarianceSpec& cov, double delta,
                     RngSeed seed);
struct FixtureDoc {
    TaskSpace space;
    CovarianceSpec cov;
    double delta = 0.0;
    RngSeed seed = 0;
};
FixtureDoc fixture_from_json(const Json& j);

Json params_to_json(const LsaParams& params);
LsaParams params_from_json(const Json& j);

Json reparam_to_json(const ReparamPoint& point);
ReparamPoint reparam_from_json(const Json& j);

Json instance_to_json(const PromptInstance& instance);
PromptInstance instance_from_json(const Json& j);

/// One canonical JSON line per instance (stable key order, no padding).
std::string to_jsonl(const std::vector<PromptInstance>& instances);
std::vector<PromptInstance> read_jsonl(const std::string& path);
void write_jsonl(const std::vector<PromptInstance>& instances, const std::string& path);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace complab
