/**
 * Closed-form Betti tables for the resolved ideals, evaluated with exact
 * big-integer binomial arithmetic.  These are the independent targets the
 * complexes are certified against.
 */
#pragma once

#include <string>
#include <vector>

#include "boxres/betti.hpp"
#include "boxres/ideal.hpp"

namespace boxres {

/// A named closed-form Betti table.
struct FormulaTable {
    std::string name;
    BettiTable table;
};

/// Exact binomial coefficient; 0 when k < 0 or k > n.  Throws
/// std::overflow_error if the value exceeds long long.
long long binomial(long long n, long long k);

/// Number of p-dimensional boxes of the star containing the center:
/// C(n, p) for 0 <= p <= n-1 and 0 otherwise.
long long center_box_count(int n, int p);

/// The center-box counts as a table in internal degrees n + p.
FormulaTable center_box_formula(int n);

/// Betti numbers of the n-th power of the maximal ideal in n variables:
/// beta_{p,p+n} = sum_{i=p+1}^{n} C(i-1, p) * C(n+i-2, n-1).
FormulaTable power_betti_formula(int n);

/// Betti numbers of the power ideal with the center generator removed:
/// the linear strand drops by C(n, p) and a single top class appears in
/// degree (n-1, 2n).
FormulaTable pinched_betti_formula(int n);

/// Betti numbers of the product of consecutive-pair primes:
/// beta_{p,p+n} = sum_{l=1}^{n} (-1)^{l+1} 2^{n-l-p} C(n, l) C(n-l, p);
/// summands with n - l - p < 0 vanish because C(n-l, p) does.
FormulaTable star_betti_formula(int n);

/// Betti numbers of the star ideal with the center generator removed:
/// the linear strand drops by C(n, p) and a single top class appears in
/// degree (n-1, 2n).
FormulaTable collapsed_star_betti_formula(int n);

/// Eliahou-Kervaire Betti numbers of an equigenerated Borel-closed ideal
/// (classical variable order): each generator m contributes C(max(m)-1, p)
/// to beta_{p, p+deg m}, where max(m) is the 1-based largest variable
/// index dividing m.  Throws std::invalid_argument when the ideal is not
/// Borel-closed.
FormulaTable ek_betti(const MonomialIdeal& ideal);

/// All five closed forms for a given n, in a fixed order:
/// gamma, power, pinched, star, star-hat.
std::vector<FormulaTable> all_formulas(int n);

}  // namespace boxres
