#include "mecsim/apps/wire.hpp"

#include <sstream>

#include "mecsim/errors.hpp"

namespace mecsim {

std::string encodeWire(const WireFields& fields) {
    std::string out;
    for (const auto& [key, value] : fields) {
        if (key.find_first_of("|=") != std::string::npos ||
            value.find('|') != std::string::npos)
            throw BadValueError("wire field contains reserved character");
        if (!out.empty())
            out += '|';
        out += key + "=" + value;
    }
    return out;
}

std::map<std::string, std::string> decodeWire(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string pair;
    while (std::getline(in, pair, '|')) {
        if (pair.empty())
            continue;
        auto eq = pair.find('=');
        if (eq == std::string::npos)
            throw BadValueError("wire pair without '=': " + pair);
        out[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
    return out;
}

} // namespace mecsim
