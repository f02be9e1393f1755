#include <fstream>
#include <sstream>
#include <vector>

#include "codebounds/aq_oracle.hpp"
#include "codebounds/combinatorics.hpp"

namespace codebounds {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

unsigned parse_u(const std::string& s, const char* what, std::size_t row) {
    std::string t = trim(s);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("known-values row " + std::to_string(row) + ": bad " + what +
                                 " '" + s + "'");
    unsigned long v = std::stoul(t);
    if (v > 1000000) throw std::runtime_error("known-values row " + std::to_string(row) + ": " +
                                              what + " out of range");
    return static_cast<unsigned>(v);
}

}  // namespace

KnownValuesTable KnownValuesTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("known-values file not found: " + path);

    KnownValuesTable table;
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (row == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
            line.erase(0, 3);  // UTF-8 BOM
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto fields = split_csv(stripped);
        if (!header_seen) {
            if (fields.size() < 4 || trim(fields[0]) != "q" || trim(fields[1]) != "n" ||
                trim(fields[2]) != "d" || trim(fields[3]) != "A")
                throw std::runtime_error("known-values row " + std::to_string(row) +
                                         ": expected header q,n,d,A[,source]");
            header_seen = true;
            continue;
        }
        if (fields.size() != 4 && fields.size() != 5)
            throw std::runtime_error("known-values row " + std::to_string(row) +
                                     ": expected 4 or 5 fields, got " +
                                     std::to_string(fields.size()));
        unsigned q = parse_u(fields[0], "q", row);
        unsigned n = parse_u(fields[1], "n", row);
        unsigned d = parse_u(fields[2], "d", row);
        std::string a_str = trim(fields[3]);
        if (a_str.empty() || a_str.find_first_not_of("0123456789") != std::string::npos)
            throw std::runtime_error("known-values row " + std::to_string(row) + ": bad A '" +
                                     fields[3] + "'");
        Nat value = Nat::from_decimal(a_str);
        if (q < 2 || n < 1 || d < 1 || d > n)
            throw std::runtime_error("known-values row " + std::to_string(row) +
                                     ": invalid (q,n,d)");
        if (value.is_zero() || value > pow_u(q, n))
            throw std::runtime_error("known-values row " + std::to_string(row) +
                                     ": A outside [1, q^n]");
        auto key = std::make_tuple(q, n, d);
        if (table.entries_.count(key))
            throw std::runtime_error("known-values row " + std::to_string(row) +
                                     ": duplicate entry for (" + std::to_string(q) + "," +
                                     std::to_string(n) + "," + std::to_string(d) + ")");
        Entry e{value, fields.size() == 5 ? trim(fields[4]) : ""};
        table.entries_.emplace(key, std::move(e));
    }
    if (!header_seen && row > 0) {
        // file with only comments/blank lines counts as empty
    }
    return table;
}

std::optional<Nat> KnownValuesTable::lookup(const CodeParams& p) const {
    const Entry* e = find(p.q, p.n, p.d);
    if (!e) return std::nullopt;
    return e->value;
}

const KnownValuesTable::Entry* KnownValuesTable::find(unsigned q, unsigned n, unsigned d) const {
    auto it = entries_.find(std::make_tuple(q, n, d));
    return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace codebounds
