#include "complab/serialize.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace complab {

Json matrix_to_json(const Eigen::MatrixXd& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<double> values;
    values.reserve(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index c = 0; c < m.cols(); ++c) values.push_back(m(i, c));
    j["values"] = values;
    return j;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto values = j.at("values").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(values.size()) != rows * cols)
        throw std::invalid_argument("matrix_from_json: value count mismatch");
    Eigen::MatrixXd m(rows, cols);
    size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = values[k++];
    return m;
}

Json fixture_to_json(const TaskSpace& space, const CovarianceSpec& cov, double delta,
                     RngSeed seed) {
    Json j;
    j["d"] = space.d;
    j["K"] = space.K;
    j["active_sets"] = space.active_sets;
    std::vector<double> lambda;
    lambda.reserve(cov.lambda.size());
    for (int i = 0; i < cov.dim(); ++i)
        for (int c = 0; c < cov.dim(); ++c) lambda.push_back(cov.lambda(i, c));
    j["lambda"] = lambda;
    j["delta"] = delta;
    j["epsilon"] = cov.epsilon;
    j["seed"] = seed;
    return j;
}

FixtureDoc fixture_from_json(const Json& j) {
    FixtureDoc doc;
    doc.space.d = j.at("d").get<int>();
    doc.space.K = j.at("K").get<int>();
    doc.space.active_sets = j.at("active_sets").get<std::vector<std::vector<int>>>();
    doc.space.validate();
    const auto lambda = j.at("lambda").get<std::vector<double>>();
    if (lambda.size() != static_cast<size_t>(doc.space.d) * doc.space.d)
        throw std::invalid_argument("fixture_from_json: lambda size mismatch");
    Eigen::MatrixXd m(doc.space.d, doc.space.d);
    size_t k = 0;
    for (int i = 0; i < doc.space.d; ++i)
        for (int c = 0; c < doc.space.d; ++c) m(i, c) = lambda[k++];
    doc.cov = make_covariance(std::move(m), j.value("epsilon", 0.0));
    doc.delta = j.value("delta", 0.0);
    doc.seed = j.value("seed", RngSeed{0});
    return doc;
}

Json params_to_json(const LsaParams& params) {
    Json j;
    j["d"] = params.d;
    j["K"] = params.K;
    j["w_pv"] = matrix_to_json(params.w_pv);
    j["w_kq"] = matrix_to_json(params.w_kq);
    return j;
}

LsaParams params_from_json(const Json& j) {
    LsaParams p;
    p.d = j.at("d").get<int>();
    p.K = j.at("K").get<int>();
    p.w_pv = matrix_from_json(j.at("w_pv"));
    p.w_kq = matrix_from_json(j.at("w_kq"));
    const Eigen::Index de = p.d + p.K;
    if (p.w_pv.rows() != de || p.w_pv.cols() != de || p.w_kq.rows() != de ||
        p.w_kq.cols() != de)
        throw std::invalid_argument("params_from_json: shape mismatch");
    return p;
}

Json reparam_to_json(const ReparamPoint& point) {
    Json j;
    j["U"] = matrix_to_json(point.U);
    j["u"] = point.u;
    j["rank_budget"] = point.rank_budget;
    return j;
}

ReparamPoint reparam_from_json(const Json& j) {
    ReparamPoint p;
    p.U = matrix_from_json(j.at("U"));
    p.u = j.at("u").get<double>();
    p.rank_budget = j.value("rank_budget", -1);
    return p;
}

Json instance_to_json(const PromptInstance& instance) {
    Json j;
    j["id"] = instance.id;
    j["task_pair"] = instance.task_pair;
    j["mode"] = instance.mode;
    j["setting"] = instance.setting;
    j["instruction"] = instance.instruction;
    Json demos = Json::array();
    for (const auto& d : instance.demonstrations)
        demos.push_back(Json{{"input", d.input}, {"output", d.output}});
    j["demonstrations"] = demos;
    j["test_input"] = instance.test_input;
    j["gold"] = instance.gold;
    j["seed"] = instance.seed;
    return j;
}

PromptInstance instance_from_json(const Json& j) {
    PromptInstance inst;
    inst.id = j.at("id").get<std::string>();
    inst.task_pair = j.at("task_pair").get<std::string>();
    inst.mode = j.value("mode", "");
    inst.setting = j.at("setting").get<std::string>();
    inst.instruction = j.value("instruction", "");
    for (const auto& d : j.at("demonstrations"))
        inst.demonstrations.push_back(
            {d.at("input").get<std::string>(), d.at("output").get<std::string>()});
    inst.test_input = j.at("test_input").get<std::string>();
    inst.gold = j.at("gold").get<std::vector<std::string>>();
    inst.seed = j.value("seed", std::uint64_t{0});
    if (inst.gold.empty()) throw std::invalid_argument("instance_from_json: empty gold set");
    return inst;
}

std::string to_jsonl(const std::vector<PromptInstance>& instances) {
    std::string out;
    for (const auto& inst : instances) {
        out += instance_to_json(inst).dump();
        out += '\n';
    }
    return out;
}

std::vector<PromptInstance> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    std::vector<PromptInstance> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(instance_from_json(Json::parse(line)));
    }
    return out;
}

void write_jsonl(const std::vector<PromptInstance>& instances, const std::string& path) {
    write_file(path, to_jsonl(instances));
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace complab
