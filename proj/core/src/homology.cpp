#include "boxres/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace boxres {

namespace {

// ---- field ranks -----------------------------------------------------------

long long power_mod(long long base, long long exp, long long p) {
    long long acc = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) acc = (acc * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return acc;
}

/// Rank of a dense matrix over F_p (entries reduced in place).
long long rank_mod_p(std::vector<std::vector<long long>>& m, long long p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const long long inv = power_mod(m[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            long long factor = (m[r][col] % p) * inv % p;
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] = (m[r][c] - factor * m[rank][c]) % p;
            }
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

/// Rank over the rationals via fraction-free Bareiss elimination on exact
/// big integers.
long long rank_exact(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long field_rank(std::vector<std::vector<int>>& entries_matrix, FieldSpec k) {
    if (entries_matrix.empty() || entries_matrix[0].empty()) return 0;
    if (k.characteristic == 0) {
        std::vector<std::vector<mpz_class>> m(entries_matrix.size());
        for (std::size_t r = 0; r < entries_matrix.size(); ++r) {
            m[r].assign(entries_matrix[r].begin(), entries_matrix[r].end());
        }
        return rank_exact(m);
    }
    std::vector<std::vector<long long>> m(entries_matrix.size());
    for (std::size_t r = 0; r < entries_matrix.size(); ++r) {
        m[r].assign(entries_matrix[r].begin(), entries_matrix[r].end());
    }
    return rank_mod_p(m, k.characteristic);
}

// ---- cellular chain model --------------------------------------------------

/// Flattened view of a labelled complex: faces grouped by dimension in
/// canonical order, boundary entries as index triples.  Restrictions are
/// expressed as inclusion masks over the same index space.
struct ChainModel {
    int top_dim = -1;
    std::vector<std::vector<Monomial>> labels;                 // [dim][pos]
    std::vector<std::vector<std::array<int, 3>>> boundary;     // [dim]: (row, col, sign), dim >= 1

    long long total_faces() const {
        long long t = 0;
        for (const auto& l : labels) t += static_cast<long long>(l.size());
        return t;
    }
};

ChainModel build_chain_model(const LabelledComplex& x) {
    ChainModel model;
    model.top_dim = x.dim();
    if (model.top_dim < 0) return model;
    model.labels.resize(model.top_dim + 1);
    model.boundary.resize(model.top_dim + 1);
    std::map<FaceKey, std::pair<int, int>> position;
    for (const auto& [key, f] : x.faces()) {
        position.emplace(key, std::make_pair(f.dim, static_cast<int>(model.labels[f.dim].size())));
        model.labels[f.dim].push_back(f.label);
    }
    for (const auto& [key, f] : x.faces()) {
        if (f.dim == 0) continue;
        const int col = position.at(key).second;
        for (const BoundaryEntry& b : f.boundary) {
            const auto [fd, row] = position.at(b.facet);
            if (fd != f.dim - 1) throw std::logic_error("chain model: facet dim mismatch");
            model.boundary[f.dim].push_back({row, col, b.sign});
        }
    }
    return model;
}

/// Reduced homology dimensions of the included subcomplex; layout matches
/// reduced_homology().  The mask must describe a closed subcomplex.
std::vector<long long> homology_of_mask(const ChainModel& model,
                                        const std::vector<std::vector<char>>& included,
                                        FieldSpec k) {
    if (model.top_dim < 0) return {1};
    // Reindex included faces per dimension.
    std::vector<std::vector<int>> reindex(model.top_dim + 1);
    std::vector<long long> count(model.top_dim + 1, 0);
    for (int d = 0; d <= model.top_dim; ++d) {
        reindex[d].assign(model.labels[d].size(), -1);
        for (std::size_t i = 0; i < model.labels[d].size(); ++i) {
            if (included[d][i]) reindex[d][i] = static_cast<int>(count[d]++);
        }
    }
    long long total = 0;
    for (int d = 0; d <= model.top_dim; ++d) total += count[d];
    if (total == 0) return {1};

    // ranks[d] = rank of the boundary map from d-chains; index 0 is the
    // augmentation onto the ground ring.
    std::vector<long long> ranks(model.top_dim + 2, 0);
    ranks[0] = count[0] > 0 ? 1 : 0;
    for (int d = 1; d <= model.top_dim; ++d) {
        if (count[d] == 0 || count[d - 1] == 0) {
            if (count[d] != 0) throw std::logic_error("homology: mask not closed");
            continue;
        }
        std::vector<std::vector<int>> m(count[d - 1], std::vector<int>(count[d], 0));
        for (const auto& [row, col, sign] : model.boundary[d]) {
            if (!included[d][col]) continue;
            if (!included[d - 1][row]) throw std::logic_error("homology: mask not closed");
            m[reindex[d - 1][row]][reindex[d][col]] = sign;
        }
        ranks[d] = field_rank(m, k);
    }
    std::vector<long long> h(model.top_dim + 2, 0);
    h[0] = 1 - ranks[0];  // H~_{-1}
    for (int d = 0; d <= model.top_dim; ++d) {
        h[d + 1] = count[d] - ranks[d] - ranks[d + 1];
    }
    return h;
}

bool any_positive_degree(const std::vector<long long>& h) {
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (h[i] != 0) return true;
    }
    return false;
}

/// lcm closure of a set of monomials under pairwise joins.
std::set<Monomial> lcm_closure(const std::vector<Monomial>& seeds) {
    std::set<Monomial> closure(seeds.begin(), seeds.end());
    std::vector<Monomial> worklist(closure.begin(), closure.end());
    while (!worklist.empty()) {
        const Monomial a = worklist.back();
        worklist.pop_back();
        // join the new element with everything already present
        std::vector<Monomial> fresh;
        for (const Monomial& b : closure) {
            Monomial j = lcm(a, b);
            if (!closure.count(j)) fresh.push_back(std::move(j));
        }
        for (Monomial& j : fresh) {
            if (closure.insert(j).second) worklist.push_back(j);
        }
    }
    return closure;
}

std::vector<Monomial> all_divisors(const Monomial& bound) {
    long long total = 1;
    for (int e : bound.exponents()) {
        total *= (e + 1);
        if (total > (1LL << 22)) {
            throw std::invalid_argument("exhaustive sweep: divisor lattice too large");
        }
    }
    std::vector<Monomial> out;
    out.reserve(total);
    std::vector<int> e(bound.n(), 0);
    while (true) {
        out.emplace_back(e);
        int j = 0;
        while (j < bound.n()) {
            if (++e[j] <= bound.exponents()[j]) break;
            e[j] = 0;
            ++j;
        }
        if (j == bound.n()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void run_parallel(int threads, std::size_t jobs,
                  const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || jobs <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) body(i);
        return;
    }
    const int workers = std::min<long long>(threads, static_cast<long long>(jobs));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < jobs; i += workers) body(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace

FieldSpec FieldSpec::prime(long long p) {
    FieldSpec k{p};
    k.validate();
    return k;
}

void FieldSpec::validate() const {
    if (characteristic == 0) return;
    if (characteristic < 2 || characteristic > (1LL << 31)) {
        throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime");
    }
    for (long long d = 2; d * d <= characteristic; ++d) {
        if (characteristic % d == 0) {
            throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime");
        }
    }
}

std::vector<long long> reduced_homology(const LabelledComplex& x, FieldSpec k) {
    k.validate();
    const ChainModel model = build_chain_model(x);
    std::vector<std::vector<char>> included(model.labels.size());
    for (std::size_t d = 0; d < model.labels.size(); ++d) {
        included[d].assign(model.labels[d].size(), 1);
    }
    return homology_of_mask(model, included, k);
}

SweepReport acyclicity_sweep(const LabelledComplex& x, FieldSpec k, SweepOptions opts) {
    k.validate();
    if (opts.threads < 1) {
        throw std::invalid_argument("acyclicity_sweep: thread count must be positive");
    }
    const ChainModel model = build_chain_model(x);

    const std::set<Monomial> closure = lcm_closure(x.vertex_labels());
    SweepReport report;
    report.lattice_size = static_cast<long long>(closure.size());

    std::vector<Monomial> candidates;
    if (opts.exhaustive) {
        candidates = all_divisors(x.label_lcm());
    } else {
        candidates.assign(closure.begin(), closure.end());
    }
    report.checked = static_cast<long long>(candidates.size());
    if (x.empty()) return report;

    // Restrictions with the same included face set have the same homology;
    // compute each distinct mask once.
    std::vector<std::vector<std::vector<char>>> masks;
    std::vector<std::size_t> mask_of_candidate(candidates.size());
    std::map<std::string, std::size_t> mask_index;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        std::vector<std::vector<char>> included(model.labels.size());
        std::string fingerprint;
        for (std::size_t d = 0; d < model.labels.size(); ++d) {
            included[d].resize(model.labels[d].size());
            for (std::size_t i = 0; i < model.labels[d].size(); ++i) {
                included[d][i] = divides(model.labels[d][i], candidates[ci]) ? 1 : 0;
                fingerprint += static_cast<char>('0' + included[d][i]);
            }
        }
        auto [it, inserted] = mask_index.emplace(fingerprint, masks.size());
        if (inserted) masks.push_back(std::move(included));
        mask_of_candidate[ci] = it->second;
    }

    std::vector<std::vector<long long>> homology(masks.size());
    run_parallel(opts.threads, masks.size(),
                 [&](std::size_t i) { homology[i] = homology_of_mask(model, masks[i], k); });

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const std::vector<long long>& h = homology[mask_of_candidate[ci]];
        if (any_positive_degree(h)) {
            report.failures.push_back({candidates[ci], h});
        }
    }
    return report;
}

BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, FieldSpec k, int threads) {
    k.validate();
    if (threads < 1) {
        throw std::invalid_argument("koszul_betti_oracle: thread count must be positive");
    }
    const std::set<Monomial> closure_set = lcm_closure(ideal.generators());
    const std::vector<Monomial> alphas(closure_set.begin(), closure_set.end());

    // Per-multidegree Betti contributions, merged in candidate order.
    std::vector<std::vector<std::pair<int, long long>>> contributions(alphas.size());
    run_parallel(threads, alphas.size(), [&](std::size_t ai) {
        const Monomial& alpha = alphas[ai];
        const std::vector<int> supp = alpha.support();
        const int s = static_cast<int>(supp.size());
        // Upper Koszul subcomplex as subsets of the support, bitmask coded.
        std::vector<char> member(1u << s, 0);
        std::vector<std::vector<int>> by_card(s + 1);
        for (int mask = 0; mask < (1 << s); ++mask) {
            std::vector<int> e = alpha.exponents();
            for (int b = 0; b < s; ++b) {
                if (mask & (1 << b)) --e[supp[b]];
            }
            if (ideal.contains(Monomial(e))) {
                member[mask] = 1;
                by_card[__builtin_popcount(static_cast<unsigned>(mask))].push_back(mask);
            }
        }
        if (!member[0]) return;  // alpha not in the ideal: no homology at all

        // Reduced simplicial chain complex of the subset family.  Chain
        // degree j holds subsets of cardinality j + 1; degree -1 is the
        // empty set.  M[c] maps cardinality c to cardinality c - 1.
        std::vector<long long> rank_of(s + 2, 0);
        std::vector<long long> dim_of(s + 1, 0);
        for (int c = 0; c <= s; ++c) dim_of[c] = static_cast<long long>(by_card[c].size());
        // augmentation: singletons -> empty set
        rank_of[1] = dim_of[1] > 0 ? 1 : 0;
        for (int c = 2; c <= s; ++c) {
            if (by_card[c].empty() || by_card[c - 1].empty()) continue;
            std::map<int, int> row_index;
            for (std::size_t i = 0; i < by_card[c - 1].size(); ++i) {
                row_index.emplace(by_card[c - 1][i], static_cast<int>(i));
            }
            std::vector<std::vector<int>> m(by_card[c - 1].size(),
                                            std::vector<int>(by_card[c].size(), 0));
            for (std::size_t col = 0; col < by_card[c].size(); ++col) {
                const int mask = by_card[c][col];
                int position = 0;
                for (int b = 0; b < s; ++b) {
                    if (!(mask & (1 << b))) continue;
                    const int sub = mask & ~(1 << b);
                    if (!member[sub]) throw std::logic_error("koszul: complex not closed");
                    m[row_index.at(sub)][col] = (position % 2 == 0) ? 1 : -1;
                    ++position;
                }
            }
            rank_of[c] = field_rank(m, k);
        }
        // H~_{j} for j = -1..s-1 lives at cardinality j + 1.
        std::vector<std::pair<int, long long>> local;
        for (int c = 0; c <= s; ++c) {
            const long long h = dim_of[c] - rank_of[c] - rank_of[c + 1];
            if (h != 0) local.emplace_back(c, h);  // beta_{c, alpha} = H~_{c-1}
        }
        contributions[ai] = std::move(local);
    });

    BettiTable table;
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        for (const auto& [i, h] : contributions[ai]) {
            table.add(i, alphas[ai].degree(), h);
        }
    }
    return table;
}

}  // namespace boxres
