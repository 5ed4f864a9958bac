/**
 * Graded Betti tables: finitely supported tables beta_{p,q} with the
 * convention that row p = 0 counts minimal generators of the resolved
 * ideal.  Rendered as CSV with header "p,q,beta", rows sorted by (p, q).
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boxres {

class BettiTable {
public:
    /// Accumulate into (p, q); entries that become zero are dropped, so
    /// tables compare equal iff they have the same nonzero support.
    void add(int p, int q, long long value);
    void set(int p, int q, long long value);
    long long at(int p, int q) const;

    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Total Betti number in homological degree p.
    long long total(int p) const;
    int max_p() const;

    std::string to_csv() const;
    static BettiTable from_csv(const std::string& text);

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, int>, long long> entries_;
};

/// One cell where two tables disagree.
struct BettiDiff {
    int p;
    int q;
    long long expected;
    long long actual;
};

/// All cells where the tables differ, sorted by (p, q).
std::vector<BettiDiff> betti_diff(const BettiTable& expected, const BettiTable& actual);

}  // namespace boxres
