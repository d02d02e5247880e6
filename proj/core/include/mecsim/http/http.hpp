#ifndef MECSIM_HTTP_HTTP_HPP
#define MECSIM_HTTP_HTTP_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace mecsim {

// Minimal REST request/response model shared by the simulated Mp1/Mx2
// surfaces and the bridge-facing HTTP parser. Service logic sees only
// (method, path, query, body).
struct HttpRequest {
    std::string method;
    std::string path;                          // without query string
    std::map<std::string, std::string> query;
    std::string body;

    std::optional<std::string> queryParam(const std::string& key) const {
        auto it = query.find(key);
        if (it == query.end())
            return std::nullopt;
        return it->second;
    }
};

struct HttpResponse {
    int status = 200;
    std::string body;

    static HttpResponse json(int status, const nlohmann::json& doc) {
        return {status, doc.dump()};
    }
    static HttpResponse error(int status, const std::string& message) {
        return json(status, {{"error", message}});
    }
};

// Splits "path?k=v&k2=v2" into path + query map. Percent-decoding covers the
// characters the MEC APIs use (%2C, %3A, %20).
void splitTarget(const std::string& target, std::string& path,
                 std::map<std::string, std::string>& query);

// Parses a raw HTTP/1.1 request (start line, headers, optional body per
// Content-Length). Returns nullopt on a malformed start line; the caller maps
// that to 400. Methods outside {GET, POST, PUT, DELETE} are reported via
// `unsupportedMethod` so the caller can answer 501.
std::optional<HttpRequest> parseHttpRequest(const std::string& raw,
                                            bool& unsupportedMethod);

std::string serializeHttpResponse(const HttpResponse& resp);

} // namespace mecsim

#endif
