#include "orbiseif/zlattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace orbiseif {

namespace {

// True when row t and column t are zero outside the pivot (t,t).
bool pivot_is_lone(const IntMatrix& m, std::size_t t) {
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (m.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (m.at(t, j) != 0) return false;
    return true;
}

// Position of the entry of least nonzero absolute value in the submatrix
// m[t.., t..]; false when the submatrix is zero.
bool locate_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& ir, std::size_t& ic) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
            const mpz_class& e = m.at(i, j);
            if (e == 0) continue;
            mpz_class a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                ir = i;
                ic = j;
            }
        }
    }
    return found;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<mpz_class> factors(n, 0);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t ir = t, ic = t;
        if (!locate_min_pivot(m, t, ir, ic)) break;  // remaining factors stay 0
        swap_rows(m, t, ir);
        swap_cols(m, t, ic);

        for (;;) {
            while (!pivot_is_lone(m, t)) {
                // Kill the cross through the pivot; remainders shrink, so
                // this terminates.  Re-pivot on the smallest entry each
                // sweep.
                for (std::size_t i = t + 1; i < m.rows(); ++i) {
                    if (m.at(i, t) == 0) continue;
                    mpz_class q = m.at(i, t) / m.at(t, t);
                    if (q != 0)
                        for (std::size_t j = t; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
                }
                for (std::size_t j = t + 1; j < m.cols(); ++j) {
                    if (m.at(t, j) == 0) continue;
                    mpz_class q = m.at(t, j) / m.at(t, t);
                    if (q != 0)
                        for (std::size_t i = t; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
                }
                locate_min_pivot(m, t, ir, ic);
                swap_rows(m, t, ir);
                swap_cols(m, t, ic);
            }

            // Divisibility chain: pull in a row holding an entry the pivot
            // does not divide and reduce again.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < m.cols() && divides_all; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (std::size_t jj = t; jj < m.cols(); ++jj)
                            m.at(t, jj) += m.at(i, jj);
                        divides_all = false;
                    }
            if (divides_all) break;
        }

        if (m.at(t, t) < 0)
            for (std::size_t j = t; j < m.cols(); ++j) m.at(t, j) = -m.at(t, j);
        factors[t] = m.at(t, t);
    }
    return factors;
}

mpz_class elementary_ideal(const IntMatrix& m, std::size_t i) {
    const std::size_t g = m.cols();
    if (i >= g) throw std::out_of_range("elementary_ideal: index must be below generator count");
    const std::size_t k = g - i;
    if (k > m.rows()) return 0;  // no k x k minors at all
    const std::vector<mpz_class> d = smith_normal_form(m);
    mpz_class prod = 1;
    for (std::size_t j = 0; j < k; ++j) {
        prod *= d[j];
        if (prod == 0) break;
    }
    return prod;
}

OrderResult abelianization_order(const IntMatrix& m) {
    const std::size_t g = m.cols();
    const std::vector<mpz_class> d = smith_normal_form(m);
    std::size_t rank = 0;
    mpz_class prod = 1;
    for (const mpz_class& f : d)
        if (f != 0) {
            ++rank;
            prod *= f;
        }
    if (rank < g) return infinite_order();
    return finite_order(prod);
}

std::optional<std::pair<mpz_class, mpz_class>> solve_linear(const mpz_class& a,
                                                            const mpz_class& b,
                                                            const mpz_class& target) {
    if (a == 0 && b == 0) {
        if (target == 0) return std::make_pair(mpz_class(0), mpz_class(0));
        return std::nullopt;
    }
    mpz_class g, x0, y0;
    mpz_gcdext(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (target % g != 0) return std::nullopt;
    mpz_class scale = target / g;
    mpz_class x = x0 * scale;
    mpz_class y = y0 * scale;
    if (b == 0) return std::make_pair(x, mpz_class(0));  // x forced, y free
    if (a == 0) return std::make_pair(mpz_class(0), y);
    // x is free modulo b/g: take the least nonnegative representative.
    mpz_class step = abs(b / g);
    mpz_class xr;
    mpz_mod(xr.get_mpz_t(), x.get_mpz_t(), step.get_mpz_t());
    y = (target - a * xr) / b;
    return std::make_pair(xr, y);
}

std::optional<mpz_class> solve_congruence(const mpz_class& a, const mpz_class& b,
                                          const mpz_class& m) {
    if (m < 1) throw std::invalid_argument("solve_congruence: modulus must be positive");
    mpz_class g = zgcd(a, m);  // >= 1 since m >= 1
    if (b % g != 0) return std::nullopt;
    mpz_class ar = a / g, br = b / g, mr = m / g;
    if (mr == 1) return mpz_class(0);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), ar.get_mpz_t(), mr.get_mpz_t()) == 0) return std::nullopt;
    mpz_class x = (inv * br) % mr;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mr.get_mpz_t());
    return x;
}

}  // namespace orbiseif
