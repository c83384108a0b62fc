#include "primeq/pi_table.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace primeq::pi_table {

std::map<int, uint64_t> parse(std::istream& in, const std::string& origin) {
    std::map<int, uint64_t> table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected 'n,pi_value'");
        try {
            size_t used = 0;
            int n = std::stoi(body.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("trailing junk");
            std::string vs = body.substr(comma + 1);
            uint64_t v = std::stoull(vs, &used);
            if (used != vs.size()) throw std::invalid_argument("trailing junk");
            if (n < 1) throw std::invalid_argument("n must be positive");
            table[n] = v;
        } catch (const std::exception&) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": malformed record '" + body + "'");
        }
    }
    return table;
}

std::map<int, uint64_t> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pi table file: " + path);
    return parse(in, path);
}

Provider table_provider(const std::map<int, uint64_t>& table) {
    return [table](int n) -> std::optional<uint64_t> {
        auto it = table.find(n);
        if (it == table.end()) return std::nullopt;
        return it->second;
    };
}

}  // namespace primeq::pi_table
