/**
 * Monomial ideals presented by minimal generating sets, plus the specific
 * ideal constructors used by the box-complex resolutions: powers of the
 * maximal ideal, cyclic Borel closures, products of consecutive variable
 * primes, and pinched variants with one generator removed.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxres/monomial.hpp"

namespace boxres {

/// A monomial ideal, stored as its unique minimal generating set sorted in
/// the global monomial order (degree, then lex).
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Normalize an arbitrary generating set: deduplicate, discard
    /// non-minimal generators, sort.  Throws std::invalid_argument if the
    /// generators live in different rings or the list is empty.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    long long generator_count() const { return static_cast<long long>(gens_.size()); }

    /// Common generator degree when the ideal is equigenerated.
    std::optional<int> degree() const;
    bool equigenerated() const { return degree().has_value(); }

    /// Ideal membership: some generator divides f.
    bool contains(const Monomial& f) const;
    bool is_generator(const Monomial& f) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// All monomials of total degree d in n variables, in the global order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// The d-th power of the graded maximal ideal (x_0, ..., x_{n-1}).
/// Requires n >= 2, d >= 1.
MonomialIdeal power_ideal(int n, int d);

/// Smallest ideal containing the given equigenerated set that is closed
/// under Borel exchange moves for the cyclic variable order starting at
/// x_start.  In each degree this is the set of monomials lying below some
/// generator in that Borel order.  Throws if the input is not
/// equigenerated.
MonomialIdeal borel_closure(int n, const std::vector<Monomial>& gens, int start = 0);

/// Product of the monomial primes generated by the variables of each
/// cyclic interval.
MonomialIdeal cyclic_prime_product(int n, const std::vector<CyclicInterval>& intervals);

/// Product of the n primes on consecutive index pairs {x_i, x_{i+1 mod n}};
/// the symmetric ideal resolved by the star complex.
MonomialIdeal star_ideal(int n);

/// Drop one minimal generator.  Throws if f is not a generator.  The
/// remaining generators are still minimal, so no re-minimalization happens.
MonomialIdeal remove_generator(const MonomialIdeal& I, const Monomial& f);

/// Intersection / sum of ideals in the same ring.
MonomialIdeal intersect(const MonomialIdeal& A, const MonomialIdeal& B);
MonomialIdeal sum(const MonomialIdeal& A, const MonomialIdeal& B);

/// Exhaustive single-exchange test that I is Borel-closed for the cyclic
/// order starting at x_start: for every generator g and every variable
/// swap x_j -> x_i with x_i earlier in the order, g*x_i/x_j stays in I.
bool is_q_borel_closed(const MonomialIdeal& I, int start);

/// Parse a generator file: one exponent list per line, blank lines and
/// lines starting with '#' ignored.  Throws std::invalid_argument on
/// malformed or dimensionally inconsistent input.
MonomialIdeal parse_generator_file(const std::string& text);

}  // namespace boxres
