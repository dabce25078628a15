#include "paracook/harness/client.hpp"

#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

namespace paracook::harness {

using json = nlohmann::json;

ParsedUrl parse_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw std::invalid_argument("endpoint URL needs a scheme: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw std::invalid_argument("unsupported URL scheme '" + scheme + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.origin = url.substr(0, path_start);
  out.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (out.origin.size() <= scheme_end + 3) throw std::invalid_argument("endpoint URL has no host: " + url);
  return out;
}

HttpChatClient::HttpChatClient(EndpointConfig config) : config_(std::move(config)), url_(parse_url(config_.url)) {
  if (!config_.api_key_env.empty()) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (!key || !*key) throw std::invalid_argument("environment variable " + config_.api_key_env + " is not set");
    api_key_ = key;
  }
}

ChatResponse HttpChatClient::complete(const std::string& prompt) {
  json body{{"model", config_.model},
            {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
            {"temperature", config_.temperature}};
  if (config_.max_tokens) body["max_tokens"] = *config_.max_tokens;

  httplib::Client cli(url_.origin);
  cli.set_connection_timeout(config_.timeout_seconds, 0);
  cli.set_read_timeout(config_.timeout_seconds, 0);
  cli.set_write_timeout(config_.timeout_seconds, 0);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  auto res = cli.Post(url_.path, headers, body.dump(), "application/json");
  if (!res) throw TransportError("request failed: " + httplib::to_string(res.error()), true);
  if (res->status == 429 || res->status >= 500)
    throw TransportError("endpoint returned HTTP " + std::to_string(res->status), true);
  if (res->status >= 300) throw TransportError("endpoint returned HTTP " + std::to_string(res->status), false);

  const json reply = json::parse(res->body, nullptr, false);
  if (reply.is_discarded()) throw TransportError("endpoint returned non-JSON body", true);
  try {
    ChatResponse out;
    const json& content = reply.at("choices").at(0).at("message").at("content");
    out.content = content.is_null() ? std::string() : content.get<std::string>();
    if (reply.contains("usage") && reply.at("usage").is_object()) {
      out.prompt_tokens = reply.at("usage").value("prompt_tokens", 0L);
      out.completion_tokens = reply.at("usage").value("completion_tokens", 0L);
    }
    return out;
  } catch (const json::exception&) {
    throw TransportError("endpoint reply lacks choices[0].message.content", false);
  }
}

}  // namespace paracook::harness
