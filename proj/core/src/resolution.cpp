#include "boxres/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace boxres {

std::vector<long long> FreeComplex::ranks() const {
    std::vector<long long> r;
    r.reserve(basis.size());
    for (const auto& b : basis) r.push_back(static_cast<long long>(b.size()));
    return r;
}

FreeComplex free_complex(const LabelledComplex& x, bool augmented) {
    FreeComplex fc;
    fc.n = x.n();
    fc.augmented = augmented;
    const int top = x.dim();
    fc.basis.resize(top + 1);
    fc.degrees.resize(top + 1);
    fc.diff.resize(top + 1);

    std::map<FaceKey, std::pair<int, int>> position;
    for (const auto& [key, f] : x.faces()) {
        position.emplace(key, std::make_pair(f.dim, static_cast<int>(fc.basis[f.dim].size())));
        fc.basis[f.dim].push_back(key);
        fc.degrees[f.dim].push_back(f.label);
    }
    for (const auto& [key, f] : x.faces()) {
        if (f.dim == 0) continue;
        const int col = position.at(key).second;
        for (const BoundaryEntry& b : f.boundary) {
            const auto [row_dim, row] = position.at(b.facet);
            const Monomial& target = fc.degrees[row_dim][row];
            auto quotient = f.label.quotient(target);
            if (!quotient) {
                throw std::logic_error("free_complex: facet label does not divide");
            }
            fc.diff[f.dim].push_back({row, col, b.sign, std::move(*quotient)});
        }
    }
    if (augmented && top >= 0) {
        for (std::size_t i = 0; i < fc.degrees[0].size(); ++i) {
            fc.diff[0].push_back({0, static_cast<int>(i), 1, fc.degrees[0][i]});
        }
    }
    for (auto& entries : fc.diff) {
        std::sort(entries.begin(), entries.end(),
                  [](const DifferentialEntry& a, const DifferentialEntry& b) {
                      return std::make_pair(a.col, a.row) < std::make_pair(b.col, b.row);
                  });
    }

    // Symbolic d^2 = 0: composite coefficients must cancel in every
    // multidegree.  Quotient multiplicativity is automatic from the label
    // divisibility chain, so sign cancellation per (source, target) pair
    // is the whole statement.
    for (int p = 2; p <= top; ++p) {
        std::map<std::pair<int, int>, long long> acc;  // (col in p, row in p-2)
        std::vector<std::vector<std::pair<int, int>>> lower(fc.basis[p - 1].size());
        for (const DifferentialEntry& e : fc.diff[p - 1]) {
            lower[e.col].emplace_back(e.row, e.sign);
        }
        for (const DifferentialEntry& e : fc.diff[p]) {
            for (const auto& [row2, sign2] : lower[e.row]) {
                acc[{e.col, row2}] += static_cast<long long>(e.sign) * sign2;
            }
        }
        for (const auto& [cell, v] : acc) {
            if (v != 0) {
                throw std::logic_error("free_complex: d^2 != 0 in degree " + std::to_string(p));
            }
        }
    }
    if (augmented && top >= 1) {
        std::vector<long long> acc(fc.basis[1].size(), 0);
        for (const DifferentialEntry& e : fc.diff[1]) acc[e.col] += e.sign;
        for (long long v : acc) {
            if (v != 0) {
                throw std::logic_error("free_complex: augmentation composite nonzero");
            }
        }
    }
    return fc;
}

bool is_minimal(const FreeComplex& f) {
    for (std::size_t p = 1; p < f.diff.size(); ++p) {
        for (const DifferentialEntry& e : f.diff[p]) {
            if (e.quotient.is_one()) return false;
        }
    }
    return true;
}

BettiTable betti_from_faces(const LabelledComplex& x) {
    BettiTable table;
    for (const auto& [key, f] : x.faces()) {
        table.add(f.dim, f.label.degree(), 1);
    }
    return table;
}

BettiTable betti_from_complex(const LabelledComplex& x, const SweepReport& sweep) {
    if (!sweep.ok()) {
        throw std::invalid_argument(
            "betti_from_complex: acyclicity sweep reported failures; complex not certified");
    }
    if (!x.d2_holds()) {
        throw std::invalid_argument("betti_from_complex: boundary does not square to zero");
    }
    if (!is_minimal(free_complex(x))) {
        throw std::invalid_argument("betti_from_complex: free complex is not minimal");
    }
    return betti_from_faces(x);
}

}  // namespace boxres
