#include "boxres/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace boxres {

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    if (n < 2) throw std::invalid_argument("MonomialIdeal: need n >= 2");
    if (gens.empty()) throw std::invalid_argument("MonomialIdeal: empty generating set");
    for (const Monomial& g : gens) {
        if (g.n() != n) {
            throw std::invalid_argument("MonomialIdeal: generator in wrong ring");
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Keep only minimal generators.  After sorting by degree a proper
    // divisor always precedes its multiples, so one forward pass suffices.
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : minimal) {
            if (divides(h, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = std::move(minimal);
    return I;
}

std::optional<int> MonomialIdeal::degree() const {
    if (gens_.empty()) return std::nullopt;
    const int d = gens_.front().degree();
    for (const Monomial& g : gens_) {
        if (g.degree() != d) return std::nullopt;
    }
    return d;
}

bool MonomialIdeal::contains(const Monomial& f) const {
    for (const Monomial& g : gens_) {
        if (g.degree() > f.degree()) break;  // sorted by degree
        if (divides(g, f)) return true;
    }
    return false;
}

bool MonomialIdeal::is_generator(const Monomial& f) const {
    return std::binary_search(gens_.begin(), gens_.end(), f);
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    if (n < 2 || d < 0) {
        throw std::invalid_argument("monomials_of_degree: need n >= 2, d >= 0");
    }
    // Build exponent vectors in lexicographic order, which for equal total
    // degree coincides with the global monomial order.
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            e[pos] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        e[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

MonomialIdeal power_ideal(int n, int d) {
    if (n < 2 || d < 1) {
        throw std::invalid_argument("power_ideal: need n >= 2, d >= 1");
    }
    return MonomialIdeal::from_generators(n, monomials_of_degree(n, d));
}

MonomialIdeal borel_closure(int n, const std::vector<Monomial>& gens, int start) {
    MonomialIdeal seed = MonomialIdeal::from_generators(n, gens);
    const std::optional<int> d = seed.degree();
    if (!d) {
        throw std::invalid_argument("borel_closure: generators must be equigenerated");
    }
    std::vector<Monomial> closure;
    for (const Monomial& f : monomials_of_degree(n, *d)) {
        for (const Monomial& g : seed.generators()) {
            if (borel_leq(f, g, start)) {
                closure.push_back(f);
                break;
            }
        }
    }
    return MonomialIdeal::from_generators(n, std::move(closure));
}

MonomialIdeal cyclic_prime_product(int n, const std::vector<CyclicInterval>& intervals) {
    if (intervals.empty()) {
        throw std::invalid_argument("cyclic_prime_product: empty interval list");
    }
    std::set<Monomial> products{Monomial::one(n)};
    for (const CyclicInterval& iv : intervals) {
        if (iv.n != n) {
            throw std::invalid_argument("cyclic_prime_product: interval in wrong ring");
        }
        std::set<Monomial> next;
        for (const Monomial& f : products) {
            for (int v : iv.indices()) {
                next.insert(f.times(Monomial::variable(n, v)));
            }
        }
        products = std::move(next);
    }
    return MonomialIdeal::from_generators(
        n, std::vector<Monomial>(products.begin(), products.end()));
}

MonomialIdeal star_ideal(int n) {
    if (n < 2) throw std::invalid_argument("star_ideal: need n >= 2");
    std::vector<CyclicInterval> pairs;
    pairs.reserve(n);
    for (int i = 0; i < n; ++i) {
        pairs.emplace_back(n, i, (i + 1) % n);
    }
    return cyclic_prime_product(n, pairs);
}

MonomialIdeal remove_generator(const MonomialIdeal& I, const Monomial& f) {
    if (!I.is_generator(f)) {
        throw std::invalid_argument("remove_generator: not a minimal generator");
    }
    std::vector<Monomial> gens;
    for (const Monomial& g : I.generators()) {
        if (!(g == f)) gens.push_back(g);
    }
    if (gens.empty()) {
        throw std::invalid_argument("remove_generator: ideal would become zero");
    }
    // Removing one element of a minimal generating set keeps the rest
    // minimal, so from_generators only re-sorts.
    return MonomialIdeal::from_generators(I.n(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (A.n() != B.n()) {
        throw std::invalid_argument("intersect: ideals in different rings");
    }
    std::vector<Monomial> gens;
    gens.reserve(A.generators().size() * B.generators().size());
    for (const Monomial& a : A.generators()) {
        for (const Monomial& b : B.generators()) {
            gens.push_back(lcm(a, b));
        }
    }
    return MonomialIdeal::from_generators(A.n(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& A, const MonomialIdeal& B) {
    if (A.n() != B.n()) {
        throw std::invalid_argument("sum: ideals in different rings");
    }
    std::vector<Monomial> gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return MonomialIdeal::from_generators(A.n(), std::move(gens));
}

bool is_q_borel_closed(const MonomialIdeal& I, int start) {
    const int n = I.n();
    auto order_pos = [&](int v) { return ((v - start) % n + n) % n; };
    for (const Monomial& g : I.generators()) {
        for (int j = 0; j < n; ++j) {
            if (g.exponent(j) == 0) continue;
            for (int i = 0; i < n; ++i) {
                if (order_pos(i) >= order_pos(j)) continue;
                // exchange one x_j for the earlier variable x_i
                std::vector<int> e = g.exponents();
                --e[j];
                ++e[i];
                if (!I.contains(Monomial(std::move(e)))) return false;
            }
        }
    }
    return true;
}

MonomialIdeal parse_generator_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Monomial> gens;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        Monomial g = [&] {
            try {
                return Monomial::parse(line);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("generator file line " +
                                            std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (!gens.empty() && g.n() != gens.front().n()) {
            throw std::invalid_argument("generator file line " + std::to_string(lineno) +
                                        ": inconsistent variable count");
        }
        gens.push_back(std::move(g));
    }
    if (gens.empty()) {
        throw std::invalid_argument("generator file: no generators found");
    }
    const int nvars = gens.front().n();
    return MonomialIdeal::from_generators(nvars, std::move(gens));
}

}  // namespace boxres
