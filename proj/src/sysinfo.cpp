#include "caltrace/sysinfo.hpp"

#include <sys/utsname.h>

#include <fstream>
#include <string>
#include <thread>

namespace caltrace {

namespace {

std::string proc_field(const char* path, const std::string& key) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key, 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            auto start = line.find_first_not_of(" \t", colon + 1);
            if (start == std::string::npos) return "";
            return line.substr(start);
        }
    }
    return "";
}

}  // namespace

nlohmann::json hardware_manifest() {
    nlohmann::json out;
    struct utsname uts{};
    if (uname(&uts) == 0) {
        out["os"] = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
    } else {
        out["os"] = "unknown";
    }
    std::string cpu = proc_field("/proc/cpuinfo", "model name");
    out["cpu"] = cpu.empty() ? "unknown" : cpu;
    std::string mem = proc_field("/proc/meminfo", "MemTotal");
    out["memory"] = mem.empty() ? "unknown" : mem;
    out["hardware_threads"] = std::thread::hardware_concurrency();
    return out;
}

}  // namespace caltrace
