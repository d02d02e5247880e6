#include "mecsim/descriptors/resource_vector.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace mecsim {

int64_t parseQuantity(const std::string& text) {
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw BadValueError("not a quantity: '" + text + "'");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    std::string suffix = text.substr(pos);
    double scale = 1;
    if (suffix.empty() || suffix == "B")
        scale = 1;
    else if (suffix == "kB" || suffix == "KB")
        scale = 1e3;
    else if (suffix == "MB")
        scale = 1e6;
    else if (suffix == "GB")
        scale = 1e9;
    else
        throw BadValueError("unknown unit suffix in '" + text + "'");
    double scaled = value * scale;
    if (scaled < 0)
        throw BadValueError("negative quantity: '" + text + "'");
    return static_cast<int64_t>(std::llround(scaled));
}

} // namespace mecsim
