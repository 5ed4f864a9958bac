#include "boxres/formulas.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace boxres {

namespace {

mpz_class big_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

long long to_long(const mpz_class& v, const char* who) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error(std::string(who) + ": value exceeds long long");
    }
    return v.get_si();
}

mpz_class power_strand(int n, int p) {
    mpz_class acc = 0;
    for (int i = p + 1; i <= n; ++i) {
        acc += big_binomial(i - 1, p) * big_binomial(n + i - 2, n - 1);
    }
    return acc;
}

mpz_class star_strand(int n, int p) {
    mpz_class acc = 0;
    for (int l = 1; l <= n; ++l) {
        const int e = n - l - p;
        if (e < 0) {
            // the matching binomial factor C(n-l, p) vanishes since p > n-l
            continue;
        }
        mpz_class term = big_binomial(n, l) * big_binomial(n - l, p);
        term <<= e;  // * 2^{n-l-p}
        if (l % 2 == 0) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return acc;
}

void require_n(int n, const char* who) {
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": need n >= 2");
    }
}

}  // namespace

long long binomial(long long n, long long k) {
    return to_long(big_binomial(n, k), "binomial");
}

long long center_box_count(int n, int p) {
    require_n(n, "center_box_count");
    if (p < 0 || p > n - 1) return 0;
    return binomial(n, p);
}

FormulaTable center_box_formula(int n) {
    require_n(n, "center_box_formula");
    FormulaTable f{"gamma", {}};
    for (int p = 0; p <= n - 1; ++p) {
        f.table.set(p, n + p, center_box_count(n, p));
    }
    return f;
}

FormulaTable power_betti_formula(int n) {
    require_n(n, "power_betti_formula");
    FormulaTable f{"power", {}};
    for (int p = 0; p <= n - 1; ++p) {
        f.table.set(p, n + p, to_long(power_strand(n, p), "power_betti_formula"));
    }
    return f;
}

FormulaTable pinched_betti_formula(int n) {
    require_n(n, "pinched_betti_formula");
    FormulaTable f{"pinched", {}};
    for (int p = 0; p <= n - 1; ++p) {
        const mpz_class v = power_strand(n, p) - big_binomial(n, p);
        f.table.set(p, n + p, to_long(v, "pinched_betti_formula"));
    }
    f.table.set(n - 1, 2 * n, 1);
    return f;
}

FormulaTable star_betti_formula(int n) {
    require_n(n, "star_betti_formula");
    FormulaTable f{"star", {}};
    for (int p = 0; p <= n - 1; ++p) {
        f.table.set(p, n + p, to_long(star_strand(n, p), "star_betti_formula"));
    }
    return f;
}

FormulaTable collapsed_star_betti_formula(int n) {
    require_n(n, "collapsed_star_betti_formula");
    FormulaTable f{"star-hat", {}};
    for (int p = 0; p <= n - 1; ++p) {
        const mpz_class v = star_strand(n, p) - big_binomial(n, p);
        f.table.set(p, n + p, to_long(v, "collapsed_star_betti_formula"));
    }
    f.table.set(n - 1, 2 * n, 1);
    return f;
}

FormulaTable ek_betti(const MonomialIdeal& ideal) {
    if (!is_q_borel_closed(ideal, 0)) {
        throw std::invalid_argument("ek_betti: ideal is not Borel-closed");
    }
    FormulaTable f{"ek", {}};
    for (const Monomial& g : ideal.generators()) {
        const std::vector<int> supp = g.support();
        const int max_var = supp.back() + 1;  // 1-based
        for (int p = 0; p <= max_var - 1; ++p) {
            f.table.add(p, g.degree() + p, binomial(max_var - 1, p));
        }
    }
    return f;
}

std::vector<FormulaTable> all_formulas(int n) {
    return {center_box_formula(n), power_betti_formula(n), pinched_betti_formula(n),
            star_betti_formula(n), collapsed_star_betti_formula(n)};
}

}  // namespace boxres
