#include "mecsim/runner/event_log.hpp"

namespace mecsim {

EventRecord EventRecord::fromJson(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("t") || !doc.contains("node") ||
        !doc.contains("kind") || !doc.contains("attrs"))
        throw CorruptLogError("record missing t/node/kind/attrs");
    EventRecord rec;
    rec.t = doc.at("t").get<double>();
    rec.node = doc.at("node").get<std::string>();
    rec.kind = doc.at("kind").get<std::string>();
    rec.attrs = doc.at("attrs");
    return rec;
}

void EventLog::openFile(const std::string& path) {
    file_.emplace(path, std::ios::trunc);
    if (!file_->is_open())
        throw BadValueError("cannot open log file: " + path);
}

void EventLog::append(double t, const std::string& node, const std::string& kind,
                      const nlohmann::json& attrs) {
    EventRecord rec{t, node, kind, attrs};
    if (file_)
        *file_ << rec.toJson().dump() << "\n";
    records_.push_back(std::move(rec));
}

void EventLog::close() {
    if (file_) {
        file_->flush();
        file_.reset();
    }
}

std::vector<EventRecord> readEventLog(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw CorruptLogError("cannot open log file: " + path);
    std::vector<EventRecord> records;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty())
            continue;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw CorruptLogError("malformed JSON at line " + std::to_string(lineNo));
        }
        records.push_back(EventRecord::fromJson(doc));
    }
    return records;
}

} // namespace mecsim
