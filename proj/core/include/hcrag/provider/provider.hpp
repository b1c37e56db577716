#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hcrag/provider/types.hpp"
#include "hcrag/vec/index.hpp"

namespace hcrag::provider {

// Uniform LLM + embedding interface. Every network interaction in the
// engine goes through an implementation of this class.
class Provider {
public:
    virtual ~Provider() = default;

    virtual std::string chat(const ChatRequest& request) = 0;

    // Routes a query through tool selection; exactly one tool from the
    // request list is returned, or a NoRoute error.
    virtual ToolCallResult call_tool(const ToolCallRequest& request,
                                     const std::string& query) = 0;

    // One embedding per input text, order preserved.
    virtual std::vector<vec::Embedding> embed(const std::vector<std::string>& texts) = 0;

    virtual std::string summarize(const std::string& text, const SummaryConfig& config) = 0;

    virtual int dim() const = 0;
};

// Offline extractive summarizer: sentences are scored by their normalized
// term-frequency sum and emitted in original order until the token budget is
// reached. Text already within budget is returned unchanged.
std::string extractive_summary(const std::string& text, const SummaryConfig& config);

}  // namespace hcrag::provider
