/**
 * Monomials in a fixed polynomial ring, together with the cyclic-symmetry
 * and Borel-order combinatorics that drive every construction in this
 * library.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxres {

/// A monomial in n >= 2 variables, stored as its exponent vector.
///
/// Instances are immutable after construction.  Variable indices are
/// 0-based throughout the library; the command-line layer converts to the
/// 1-based convention used in its reports.  Monomials are totally ordered
/// by total degree first and then lexicographically on the exponent
/// vector; this order is the canonical tie-breaker for every sorted
/// container in the library.
class Monomial {
public:
    /// Null monomial (zero variables).  Only valid as a placeholder; any
    /// arithmetic use of a null monomial is a programming error.
    Monomial() = default;

    /// Construct from an exponent vector.  Throws std::invalid_argument if
    /// fewer than two variables or any exponent is negative.
    explicit Monomial(std::vector<int> exponents);

    /// The constant monomial 1 in n variables.
    static Monomial one(int n);

    /// The variable x_var (0-based) in n variables.
    static Monomial variable(int n, int var);

    /// Product of x_v over a list of 0-based indices (repeats allowed).
    static Monomial from_indices(int n, const std::vector<int>& vars);

    /// Parse a whitespace-separated exponent list such as "2 1 0".
    static Monomial parse(const std::string& text);

    bool is_null() const { return exps_.empty(); }
    int n() const { return static_cast<int>(exps_.size()); }
    int exponent(int var) const;
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;
    bool is_one() const { return degree() == 0; }

    /// 0-based indices of variables with positive exponent, ascending.
    std::vector<int> support() const;

    /// The multiset of variable indices, ascending, with each index
    /// repeated according to its exponent.  For f = x_0^2 x_2 this is
    /// {0, 0, 2}.  Length equals the degree.
    std::vector<int> index_sequence() const;

    Monomial times(const Monomial& other) const;

    /// Exact quotient this / other, or nullopt when other does not divide.
    std::optional<Monomial> quotient(const Monomial& other) const;

    /// Space-separated exponent list: "2 1 0".
    std::string str() const;

    /// Human-readable form using letters a, b, c, ... ("a^2b").
    std::string pretty() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exps_;
};

/// Componentwise max / min of exponent vectors.  Both arguments must live
/// in the same ring.
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// True when a divides b componentwise.
bool divides(const Monomial& a, const Monomial& b);

/// The product x_0 x_1 ... x_{n-1}, the fixed point of the cyclic action.
Monomial center_monomial(int n);

/// Image of f under the k-th power of the cyclic relabelling
/// x_j -> x_{j+1 mod n}; k may be negative.  (sigma^k f)_j = f_{j-k mod n}.
Monomial cyclic_shift(const Monomial& f, int k);

/// Borel order for the variable order that starts at x_start and proceeds
/// cyclically.  With start = 0 this is the classical Borel (strongly
/// stable) partial order on monomials of equal degree: f <= g iff the
/// t-th smallest variable index of f is <= that of g for every t, after
/// rotating both monomials so x_start becomes the first variable.
/// Throws std::invalid_argument on degree mismatch.
bool borel_leq(const Monomial& f, const Monomial& g, int start = 0);

/// Sum of (exponent - 1) over the cyclic variable interval [start, end]
/// (inclusive, 0-based, wrapping mod n).
int delta(const Monomial& f, int start, int end);

/// Membership test for the principal cyclic-Borel ideal generated by the
/// center monomial under the variable order starting at x_start: a degree-n
/// monomial f belongs iff delta(f, start, s) >= 0 for every endpoint s.
/// Throws std::invalid_argument unless deg f equals the variable count.
bool in_summand(const Monomial& f, int start);

/// A nonempty cyclic interval of variable indices in n variables,
/// inclusive of both endpoints and wrapping mod n.  [s, s] is a single
/// index and [s, s-1 mod n] is the full cycle.
struct CyclicInterval {
    int n = 0;
    int start = 0;
    int end = 0;

    CyclicInterval() = default;
    CyclicInterval(int n, int start, int end);

    /// Indices in cyclic order from start to end.
    std::vector<int> indices() const;
    int size() const;
    bool contains(int var) const;

    /// Product of the variables in the interval.
    Monomial monomial() const;

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

}  // namespace boxres
