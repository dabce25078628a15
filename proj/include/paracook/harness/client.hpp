#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace paracook::harness {

struct ChatResponse {
  std::string content;
  long prompt_tokens = 0;
  long completion_tokens = 0;
};

class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& what, bool retryable) : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

/// One single-turn chat completion per call. Implementations must be callable from several threads.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  /// Throws TransportError.
  virtual ChatResponse complete(const std::string& prompt) = 0;
};

struct EndpointConfig {
  std::string url;  // e.g. https://api.example.com/v1/chat/completions
  std::string model;
  std::string api_key_env;  // name of the environment variable holding the key; the key itself is never stored
  double temperature = 0.0;
  int timeout_seconds = 120;
  std::optional<int> max_tokens;
};

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};
/// Throws std::invalid_argument for anything but http(s) URLs.
ParsedUrl parse_url(const std::string& url);

/// OpenAI-style chat-completion client (messages in, choices out) over HTTP or HTTPS.
class HttpChatClient : public ChatClient {
 public:
  /// Reads the key from `config.api_key_env` (if set) once, here.
  explicit HttpChatClient(EndpointConfig config);
  ChatResponse complete(const std::string& prompt) override;

 private:
  EndpointConfig config_;
  ParsedUrl url_;
  std::string api_key_;
};

}  // namespace paracook::harness
