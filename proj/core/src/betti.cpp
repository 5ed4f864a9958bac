#include "boxres/betti.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace boxres {

void BettiTable::add(int p, int q, long long value) {
    if (value == 0) return;
    auto key = std::make_pair(p, q);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, value);
    } else {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

void BettiTable::set(int p, int q, long long value) {
    if (value == 0) {
        entries_.erase(std::make_pair(p, q));
    } else {
        entries_[std::make_pair(p, q)] = value;
    }
}

long long BettiTable::at(int p, int q) const {
    auto it = entries_.find(std::make_pair(p, q));
    return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int p) const {
    long long t = 0;
    for (const auto& [pq, v] : entries_) {
        if (pq.first == p) t += v;
    }
    return t;
}

int BettiTable::max_p() const {
    int m = -1;
    for (const auto& [pq, v] : entries_) m = std::max(m, pq.first);
    return m;
}

std::string BettiTable::to_csv() const {
    std::string out = "p,q,beta\n";
    for (const auto& [pq, v] : entries_) {
        out += std::to_string(pq.first);
        out += ',';
        out += std::to_string(pq.second);
        out += ',';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

BettiTable BettiTable::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    BettiTable table;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!header_seen) {
            if (line != "p,q,beta") {
                throw std::invalid_argument("betti csv line " + std::to_string(lineno) +
                                            ": expected header 'p,q,beta'");
            }
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        long long p = 0, q = 0, v = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> p >> c1 >> q >> c2 >> v) || c1 != ',' || c2 != ',' ||
            !(row >> std::ws).eof()) {
            throw std::invalid_argument("betti csv line " + std::to_string(lineno) +
                                        ": malformed row '" + line + "'");
        }
        if (table.at(static_cast<int>(p), static_cast<int>(q)) != 0) {
            throw std::invalid_argument("betti csv line " + std::to_string(lineno) +
                                        ": duplicate cell");
        }
        table.set(static_cast<int>(p), static_cast<int>(q), v);
    }
    if (!header_seen) {
        throw std::invalid_argument("betti csv: missing header 'p,q,beta'");
    }
    return table;
}

std::vector<BettiDiff> betti_diff(const BettiTable& expected, const BettiTable& actual) {
    std::set<std::pair<int, int>> cells;
    for (const auto& [pq, v] : expected.entries()) cells.insert(pq);
    for (const auto& [pq, v] : actual.entries()) cells.insert(pq);
    std::vector<BettiDiff> out;
    for (const auto& pq : cells) {
        const long long e = expected.at(pq.first, pq.second);
        const long long a = actual.at(pq.first, pq.second);
        if (e != a) out.push_back({pq.first, pq.second, e, a});
    }
    return out;
}

}  // namespace boxres
