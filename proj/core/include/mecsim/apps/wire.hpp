#ifndef MECSIM_APPS_WIRE_HPP
#define MECSIM_APPS_WIRE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mecsim {

// Device-app / UE-app datagram encoding: single-line UTF-8 key=value pairs
// separated by '|', e.g. "kind=CREATE_APP|appName=MECWarningAlertApp".
// Values may contain '=' but not '|'. The same encoding carries
// WARNING_ALERT / ZONE_EXIT messages, so external apps in bridge mode speak
// it too.
using WireFields = std::vector<std::pair<std::string, std::string>>;

std::string encodeWire(const WireFields& fields);
std::map<std::string, std::string> decodeWire(const std::string& line);

} // namespace mecsim

#endif
