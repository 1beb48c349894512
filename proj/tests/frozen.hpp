#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace rllsidc::test {

// key = value pairs from tests/fixtures/frozen_constants.txt
inline const std::string& frozen(const std::string& key) {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> t;
        std::ifstream in(RLLSIDC_FIXTURES "/frozen_constants.txt");
        if (!in) throw std::runtime_error("cannot open frozen_constants.txt");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find(" = ");
            if (eq != std::string::npos) t[line.substr(0, eq)] = line.substr(eq + 3);
        }
        return t;
    }();
    const auto it = table.find(key);
    if (it == table.end()) throw std::out_of_range("no frozen constant " + key);
    return it->second;
}

inline std::uint64_t frozen_u64(const std::string& key) { return std::stoull(frozen(key)); }

}  // namespace rllsidc::test
