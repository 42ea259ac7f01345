#include "caltrace/event_log.hpp"

#include <zlib.h>

#include <array>
#include <vector>

namespace caltrace {

namespace {

std::uint32_t crc_of(const std::string& bytes) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

std::array<char, 4> encode_u32(std::uint32_t value) {
    return {static_cast<char>(value & 0xff), static_cast<char>((value >> 8) & 0xff),
            static_cast<char>((value >> 16) & 0xff), static_cast<char>((value >> 24) & 0xff)};
}

std::uint32_t decode_u32(const char* bytes) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[0])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[3])) << 24);
}

[[noreturn]] void corrupt(std::uint64_t seq, const std::string& what) {
    throw std::runtime_error("event log corrupt at record " + std::to_string(seq) + ": " + what);
}

}  // namespace

EventLog EventLog::open_for_append(const std::string& path) {
    EventLog log;
    log.path_ = path;
    log.stream_.open(path, std::ios::binary | std::ios::app);
    if (!log.stream_) {
        throw std::runtime_error("cannot open event log '" + path + "' for append");
    }
    return log;
}

void EventLog::append(const EventRecord& record) {
    nlohmann::json body = {{"seq", record.seq}, {"op", record.op}, {"payload", record.payload}};
    std::string bytes = body.dump();
    auto len = encode_u32(static_cast<std::uint32_t>(bytes.size()));
    auto crc = encode_u32(crc_of(bytes));
    stream_.write(len.data(), len.size());
    stream_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    stream_.write(crc.data(), crc.size());
    stream_.flush();
    if (!stream_) {
        throw std::runtime_error("write to event log '" + path_ + "' failed");
    }
}

void EventLog::replay(const std::string& path,
                      const std::function<void(const EventRecord&)>& on_record) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open event log '" + path + "'");
    }
    std::uint64_t index = 1;
    while (true) {
        char header[4];
        in.read(header, sizeof(header));
        if (in.gcount() == 0 && in.eof()) break;  // clean end of log
        if (in.gcount() != sizeof(header)) corrupt(index, "truncated frame header");
        std::uint32_t length = decode_u32(header);
        std::string bytes(length, '\0');
        in.read(bytes.data(), length);
        if (in.gcount() != static_cast<std::streamsize>(length)) corrupt(index, "truncated record");
        char trailer[4];
        in.read(trailer, sizeof(trailer));
        if (in.gcount() != sizeof(trailer)) corrupt(index, "truncated checksum");
        if (decode_u32(trailer) != crc_of(bytes)) corrupt(index, "checksum mismatch");

        EventRecord record;
        try {
            nlohmann::json body = nlohmann::json::parse(bytes);
            record.seq = body.at("seq").get<std::uint64_t>();
            record.op = body.at("op").get<std::string>();
            record.payload = body.at("payload");
        } catch (const nlohmann::json::exception& e) {
            corrupt(index, e.what());
        }
        if (record.seq != index) corrupt(index, "sequence gap");
        on_record(record);
        ++index;
    }
}

}  // namespace caltrace
