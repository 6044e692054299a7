#include "complab/http_client.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

// Eigen must precede httplib here: resolv.h (pulled in for DNS) defines a
// macro that collides with an Eigen parameter name.
#include "complab/serialize.hpp"

#include "httplib.h"

namespace complab {

namespace {

struct SplitUrl {
    std::string origin;       // scheme://host[:port]
    std::string path_prefix;  // "" or "/v1"-style prefix, no trailing slash
};

SplitUrl split_url(const std::string& base_url) {
    const auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos)
        throw std::invalid_argument("endpoint base_url needs a scheme: " + base_url);
    const auto path_start = base_url.find('/', scheme_end + 3);
    SplitUrl out;
    if (path_start == std::string::npos) {
        out.origin = base_url;
    } else {
        out.origin = base_url.substr(0, path_start);
        out.path_prefix = base_url.substr(path_start);
        while (!out.path_prefix.empty() && out.path_prefix.back() == '/')
            out.path_prefix.pop_back();
    }
    if (out.path_prefix.empty()) out.path_prefix = "/v1";
    return out;
}

bool retryable_status(int status) {
    return status == 408 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

std::string ModelEndpoint::descriptor() const {
    nlohmann::json j{{"base_url", base_url},
                     {"model", model},
                     {"api", api},
                     {"temperature", temperature},
                     {"max_tokens", max_tokens}};
    return j.dump();
}

void ModelEndpoint::validate() const {
    if (base_url.empty()) throw std::invalid_argument("endpoint: base_url required");
    if (model.empty()) throw std::invalid_argument("endpoint: model required");
    if (api != "completions" && api != "chat")
        throw std::invalid_argument("endpoint: api must be 'completions' or 'chat'");
    if (temperature < 0.0) throw std::invalid_argument("endpoint: temperature >= 0");
    if (max_concurrency < 1) throw std::invalid_argument("endpoint: concurrency >= 1");
    if (max_tokens < 1) throw std::invalid_argument("endpoint: max_tokens >= 1");
}

ModelEndpoint endpoint_from_json(const nlohmann::json& j) {
    ModelEndpoint e;
    e.base_url = j.at("base_url").get<std::string>();
    e.model = j.at("model").get<std::string>();
    e.api = j.value("api", std::string("completions"));
    e.api_key_env = j.value("api_key_env", std::string());
    e.temperature = j.value("temperature", 0.0);
    e.max_tokens = j.value("max_tokens", 64);
    e.timeout_seconds = j.value("timeout_seconds", 60.0);
    e.max_concurrency = j.value("max_concurrency", 4);
    e.max_retries = j.value("max_retries", 5);
    e.backoff_seconds = j.value("backoff_seconds", 0.25);
    e.validate();
    return e;
}

ModelEndpoint load_endpoint(const std::string& path) {
    return endpoint_from_json(nlohmann::json::parse(read_file(path)));
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto path = dir_ / (key + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.contains("response")) return std::nullopt;
    return j.at("response").get<std::string>();
}

void ResponseCache::store(const std::string& key, const std::string& response,
                          const nlohmann::json& meta) {
    std::lock_guard<std::mutex> lock(mutex_);
    nlohmann::json j{{"response", response}, {"meta", meta}};
    const auto tmp = dir_ / (key + ".tmp");
    const auto final_path = dir_ / (key + ".json");
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump();
    out.close();
    std::filesystem::rename(tmp, final_path);
}

CompletionClient::CompletionClient(ModelEndpoint endpoint, ResponseCache* cache)
    : endpoint_(std::move(endpoint)), cache_(cache) {
    endpoint_.validate();
    if (!endpoint_.api_key_env.empty()) {
        const char* token = std::getenv(endpoint_.api_key_env.c_str());
        if (!token || !*token)
            throw std::runtime_error("auth token env var '" + endpoint_.api_key_env +
                                     "' is not set");
        auth_token_ = token;
    }
}

std::string CompletionClient::cache_key(const ModelEndpoint& endpoint,
                                        const std::string& prompt) {
    return sha256_hex(endpoint.descriptor() + "\n" + prompt);
}

CompletionResult CompletionClient::complete(const std::string& prompt) {
    const std::string key = cache_key(endpoint_, prompt);
    if (cache_) {
        if (auto hit = cache_->lookup(key)) return {*hit, true, 0.0};
    }

    const SplitUrl url = split_url(endpoint_.base_url);
    const bool chat = endpoint_.api == "chat";
    const std::string path = url.path_prefix + (chat ? "/chat/completions" : "/completions");

    nlohmann::json body{{"model", endpoint_.model},
                        {"temperature", endpoint_.temperature},
                        {"max_tokens", endpoint_.max_tokens}};
    if (chat)
        body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
    else
        body["prompt"] = prompt;
    const std::string payload = body.dump();

    std::string last_error;
    const auto start = std::chrono::steady_clock::now();
    for (int attempt = 0; attempt <= endpoint_.max_retries; ++attempt) {
        if (attempt > 0) {
            const double delay = endpoint_.backoff_seconds * double(1 << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::duration<double>(delay));
        }
        httplib::Client client(url.origin);
        client.set_connection_timeout(std::chrono::duration<double>(endpoint_.timeout_seconds));
        client.set_read_timeout(std::chrono::duration<double>(endpoint_.timeout_seconds));
        client.set_write_timeout(std::chrono::duration<double>(endpoint_.timeout_seconds));
        httplib::Headers headers;
        if (!auth_token_.empty()) headers.emplace("Authorization", "Bearer " + auth_token_);

        network_calls_.fetch_add(1);
        auto res = client.Post(path, headers, payload, "application/json");
        if (!res) {
            last_error = "connection error: " + httplib::to_string(res.error());
            continue;
        }
        if (retryable_status(res->status)) {
            last_error = "status " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200)
            throw std::runtime_error("request " + key + " failed with status " +
                                     std::to_string(res->status) + ": " + res->body);

        nlohmann::json j = nlohmann::json::parse(res->body, nullptr, false);
        if (j.is_discarded())
            throw std::runtime_error("request " + key + ": response body is not JSON");
        std::string text;
        try {
            text = chat ? j.at("choices").at(0).at("message").at("content").get<std::string>()
                        : j.at("choices").at(0).at("text").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("request " + key +
                                     ": malformed completion body: " + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (cache_)
            cache_->store(key, text,
                          nlohmann::json{{"model", endpoint_.model}, {"attempts", attempt + 1}});
        return {text, false, ms};
    }
    throw std::runtime_error("request " + key + " exhausted retries; last error: " + last_error);
}

}  // namespace complab
