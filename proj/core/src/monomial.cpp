#include "boxres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boxres {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b, const char* op) {
    if (a.n() != b.n() || a.n() == 0) {
        throw std::invalid_argument(std::string(op) +
                                    ": monomials live in different rings");
    }
}

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.size() < 2) {
        throw std::invalid_argument("Monomial: need at least two variables");
    }
    for (int e : exps_) {
        if (e < 0) {
            throw std::invalid_argument("Monomial: negative exponent");
        }
    }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int var) {
    std::vector<int> e(n, 0);
    if (var < 0 || var >= n) {
        throw std::invalid_argument("Monomial::variable: index out of range");
    }
    e[var] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_indices(int n, const std::vector<int>& vars) {
    std::vector<int> e(n, 0);
    for (int v : vars) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("Monomial::from_indices: index out of range");
        }
        ++e[v];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> e;
    long long v = 0;
    while (in >> v) {
        e.push_back(static_cast<int>(v));
    }
    if (!in.eof()) {
        throw std::invalid_argument("Monomial::parse: not an exponent list: '" + text + "'");
    }
    return Monomial(std::move(e));
}

int Monomial::exponent(int var) const {
    if (var < 0 || var >= n()) {
        throw std::invalid_argument("Monomial::exponent: index out of range");
    }
    return exps_[var];
}

int Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int j = 0; j < n(); ++j) {
        if (exps_[j] > 0) s.push_back(j);
    }
    return s;
}

std::vector<int> Monomial::index_sequence() const {
    std::vector<int> seq;
    seq.reserve(degree());
    for (int j = 0; j < n(); ++j) {
        seq.insert(seq.end(), exps_[j], j);
    }
    return seq;
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_ring(*this, other, "times");
    std::vector<int> e(exps_);
    for (int j = 0; j < n(); ++j) e[j] += other.exps_[j];
    return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::quotient(const Monomial& other) const {
    require_same_ring(*this, other, "quotient");
    std::vector<int> e(exps_);
    for (int j = 0; j < n(); ++j) {
        e[j] -= other.exps_[j];
        if (e[j] < 0) return std::nullopt;
    }
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    std::string out;
    for (int j = 0; j < n(); ++j) {
        if (j) out += ' ';
        out += std::to_string(exps_[j]);
    }
    return out;
}

std::string Monomial::pretty() const {
    if (is_one()) return "1";
    std::string out;
    for (int j = 0; j < n(); ++j) {
        if (exps_[j] == 0) continue;
        out += static_cast<char>('a' + (j % 26));
        if (exps_[j] > 1) {
            out += '^';
            out += std::to_string(exps_[j]);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b, "lcm");
    std::vector<int> e(a.n());
    for (int j = 0; j < a.n(); ++j) {
        e[j] = std::max(a.exponents()[j], b.exponents()[j]);
    }
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b, "gcd");
    std::vector<int> e(a.n());
    for (int j = 0; j < a.n(); ++j) {
        e[j] = std::min(a.exponents()[j], b.exponents()[j]);
    }
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b, "divides");
    for (int j = 0; j < a.n(); ++j) {
        if (a.exponents()[j] > b.exponents()[j]) return false;
    }
    return true;
}

Monomial center_monomial(int n) {
    if (n < 2) throw std::invalid_argument("center_monomial: need n >= 2");
    return Monomial(std::vector<int>(n, 1));
}

Monomial cyclic_shift(const Monomial& f, int k) {
    const int n = f.n();
    if (n == 0) throw std::invalid_argument("cyclic_shift: null monomial");
    std::vector<int> e(n);
    for (int j = 0; j < n; ++j) {
        e[j] = f.exponents()[mod(j - k, n)];
    }
    return Monomial(std::move(e));
}

bool borel_leq(const Monomial& f, const Monomial& g, int start) {
    require_same_ring(f, g, "borel_leq");
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("borel_leq: monomials have different degrees");
    }
    // Rotate both so the order starts at x_0, then compare the sorted
    // index multisets componentwise.
    const std::vector<int> sf = cyclic_shift(f, -start).index_sequence();
    const std::vector<int> sg = cyclic_shift(g, -start).index_sequence();
    for (std::size_t t = 0; t < sf.size(); ++t) {
        if (sf[t] > sg[t]) return false;
    }
    return true;
}

int delta(const Monomial& f, int start, int end) {
    const int n = f.n();
    if (n == 0) throw std::invalid_argument("delta: null monomial");
    int acc = 0;
    int j = mod(start, n);
    const int stop = mod(end, n);
    while (true) {
        acc += f.exponents()[j] - 1;
        if (j == stop) break;
        j = mod(j + 1, n);
    }
    return acc;
}

bool in_summand(const Monomial& f, int start) {
    const int n = f.n();
    if (f.degree() != n) {
        throw std::invalid_argument("in_summand: degree must equal the variable count");
    }
    // f lies in the summand iff every partial sum of (exponent - 1) along
    // the cyclic order starting at x_start stays nonnegative.
    int acc = 0;
    for (int t = 0; t < n; ++t) {
        acc += f.exponents()[mod(start + t, n)] - 1;
        if (acc < 0) return false;
    }
    return true;
}

CyclicInterval::CyclicInterval(int n_, int start_, int end_)
    : n(n_), start(start_), end(end_) {
    if (n < 2) throw std::invalid_argument("CyclicInterval: need n >= 2");
    if (start < 0 || start >= n || end < 0 || end >= n) {
        throw std::invalid_argument("CyclicInterval: endpoint out of range");
    }
}

std::vector<int> CyclicInterval::indices() const {
    std::vector<int> out;
    int j = start;
    while (true) {
        out.push_back(j);
        if (j == end) break;
        j = mod(j + 1, n);
    }
    return out;
}

int CyclicInterval::size() const { return mod(end - start, n) + 1; }

bool CyclicInterval::contains(int var) const {
    return mod(var - start, n) <= mod(end - start, n);
}

Monomial CyclicInterval::monomial() const {
    return Monomial::from_indices(n, indices());
}

}  // namespace boxres
