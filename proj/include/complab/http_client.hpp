#pragma once

#include <atomic>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

namespace complab {

/// An OpenAI-compatible completion endpoint.
struct ModelEndpoint {
    std::string base_url;  // e.g. "http://127.0.0.1:8080/v1"
    std::string model;
    std::string api = "completions";  // "completions" | "chat"
    std::string api_key_env;          // env var holding the bearer token; "" = none
    double temperature = 0.0;         // greedy by default
    int max_tokens = 64;
    double timeout_seconds = 60.0;
    int max_concurrency = 4;
    int max_retries = 5;
    double backoff_seconds = 0.25;

    /// Stable identity string entering cache keys (decoding params included).
    std::string descriptor() const;
    void validate() const;
};

ModelEndpoint endpoint_from_json(const nlohmann::json& j);
ModelEndpoint load_endpoint(const std::string& path);

/// Directory-backed response store keyed by request hash. Hits never touch
/// the network; writes are serialized.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir);

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& response,
               const nlohmann::json& meta);

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

struct CompletionResult {
    std::string text;
    bool from_cache = false;
    double latency_ms = 0.0;
};

/**
 * Completion client with caching and exponential-backoff retries on
 * transient failures (connection errors, 408/429/5xx). Safe for concurrent
 * use; every call is a fresh connection.
 */
class CompletionClient {
public:
    CompletionClient(ModelEndpoint endpoint, ResponseCache* cache);

    CompletionResult complete(const std::string& prompt);

    long network_calls() const { return network_calls_.load(); }
    const ModelEndpoint& endpoint() const { return endpoint_; }

    static std::string cache_key(const ModelEndpoint& endpoint, const std::string& prompt);

private:
    ModelEndpoint endpoint_;
    ResponseCache* cache_;
    std::string auth_token_;
    std::atomic<long> network_calls_{0};
};

}  // namespace complab
