#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <string>

#include "json.hpp"

namespace caltrace {

struct EventRecord {
    std::uint64_t seq = 0;
    std::string op;
    nlohmann::json payload;
};

/// Append-only durability layer. Each record is framed as
///   [u32 length LE][record bytes][u32 crc32 LE]
/// where the record bytes are the JSON of {seq, op, payload}. Replay stops
/// at the first frame whose checksum or structure does not hold.
class EventLog {
public:
    EventLog() = default;

    // Opens for appending, creating the file if needed. Throws
    // std::runtime_error when the file cannot be opened.
    static EventLog open_for_append(const std::string& path);

    void append(const EventRecord& record);
    bool attached() const { return stream_.is_open(); }
    const std::string& path() const { return path_; }

    // Replays every record in sequence order. Throws std::runtime_error
    // naming the failing record index on checksum or framing corruption.
    static void replay(const std::string& path,
                       const std::function<void(const EventRecord&)>& on_record);

private:
    std::string path_;
    std::ofstream stream_;
};

}  // namespace caltrace
