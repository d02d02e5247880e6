#include "mecsim/http/http.hpp"

#include <cctype>
#include <sstream>

namespace mecsim {

namespace {

std::string percentDecode(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size() &&
            std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
            std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
            out += static_cast<char>(std::stoi(s.substr(i + 1, 2), nullptr, 16));
            i += 2;
        } else if (s[i] == '+') {
            out += ' ';
        } else {
            out += s[i];
        }
    }
    return out;
}

const char* statusText(int status) {
    switch (status) {
        case 200: return "OK";
        case 201: return "Created";
        case 204: return "No Content";
        case 400: return "Bad Request";
        case 404: return "Not Found";
        case 500: return "Internal Server Error";
        case 501: return "Not Implemented";
        default: return "Unknown";
    }
}

} // namespace

void splitTarget(const std::string& target, std::string& path,
                 std::map<std::string, std::string>& query) {
    auto qpos = target.find('?');
    path = target.substr(0, qpos);
    query.clear();
    if (qpos == std::string::npos)
        return;
    std::string qs = target.substr(qpos + 1);
    std::istringstream in(qs);
    std::string pair;
    while (std::getline(in, pair, '&')) {
        if (pair.empty())
            continue;
        auto eq = pair.find('=');
        if (eq == std::string::npos)
            query[percentDecode(pair)] = "";
        else
            query[percentDecode(pair.substr(0, eq))] = percentDecode(pair.substr(eq + 1));
    }
}

std::optional<HttpRequest> parseHttpRequest(const std::string& raw,
                                            bool& unsupportedMethod) {
    unsupportedMethod = false;
    auto lineEnd = raw.find("\r\n");
    if (lineEnd == std::string::npos)
        lineEnd = raw.find('\n');
    if (lineEnd == std::string::npos)
        return std::nullopt;

    std::istringstream start(raw.substr(0, lineEnd));
    std::string method, target, version, extra;
    if (!(start >> method >> target >> version) || (start >> extra))
        return std::nullopt;
    if (version.rfind("HTTP/", 0) != 0)
        return std::nullopt;

    if (method != "GET" && method != "POST" && method != "PUT" && method != "DELETE") {
        unsupportedMethod = true;
        return std::nullopt;
    }

    HttpRequest req;
    req.method = method;
    splitTarget(target, req.path, req.query);

    auto headersEnd = raw.find("\r\n\r\n");
    std::size_t bodyStart;
    if (headersEnd != std::string::npos) {
        bodyStart = headersEnd + 4;
    } else {
        headersEnd = raw.find("\n\n");
        bodyStart = (headersEnd == std::string::npos) ? raw.size() : headersEnd + 2;
    }
    if (bodyStart < raw.size())
        req.body = raw.substr(bodyStart);
    return req;
}

std::string serializeHttpResponse(const HttpResponse& resp) {
    std::ostringstream out;
    out << "HTTP/1.1 " << resp.status << " " << statusText(resp.status) << "\r\n"
        << "Content-Type: application/json\r\n"
        << "Content-Length: " << resp.body.size() << "\r\n"
        << "Connection: keep-alive\r\n\r\n"
        << resp.body;
    return out.str();
}

} // namespace mecsim
