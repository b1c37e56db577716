#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcrag/common/errors.hpp"

namespace hcrag::provider {

enum class Role { System, User, Assistant };

std::string to_string(Role role);

struct ChatMessage {
    Role role = Role::User;
    std::string content;
};

struct ChatRequest {
    std::string model;
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    std::optional<int> max_tokens;

    void validate() const;  // system/user content must be non-empty
};

struct ToolSpec {
    std::string name;
    std::string description;
    nlohmann::json parameters;  // JSON schema
};

struct ToolCallRequest {
    std::string model;
    std::vector<ToolSpec> tools;
    std::string tool_choice = "auto";
};

struct ToolCallResult {
    std::string name;
    nlohmann::json arguments;
};

struct ProviderConfig {
    std::string base_url = "https://api.openai.com";
    std::string api_key_env_var = "OPENAI_API_KEY";
    double timeout_seconds = 30.0;
    int max_retries = 3;
    // task -> model, e.g. {"chat": "...", "cypher": "...", "embedding": "..."}
    std::map<std::string, std::string> models;

    int backoff_base_ms = 1000;  // doubles per attempt, +/-20% jitter
    void validate() const;
    std::string model_for(const std::string& task) const;
};

struct SummaryConfig {
    int max_length = 256;  // tokens

    void validate() const;
};

class ProviderError : public Error {
public:
    enum class Kind {
        Timeout,
        HttpStatus,
        MalformedResponse,
        RetryExhausted,
        ScriptMiss,
        NoRoute,
        MissingApiKey,
    };

    ProviderError(Kind kind, const std::string& what, int status = 0)
        : Error(what), kind_(kind), status_(status) {}

    Kind kind() const { return kind_; }
    int status() const { return status_; }

private:
    Kind kind_;
    int status_;
};

}  // namespace hcrag::provider
