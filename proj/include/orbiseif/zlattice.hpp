// Exact integer linear algebra: Smith normal form, elementary ideals,
// abelian group orders, and small diophantine solvers.  All arithmetic is
// arbitrary precision (GMP); there are no modular shortcuts anywhere.

#ifndef ORBISEIF_ZLATTICE_HPP
#define ORBISEIF_ZLATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace orbiseif {

inline mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<mpz_class>& entries() const { return entries_; }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> entries_;
};

// Invariant factors d_1 | d_2 | ... | d_k, k = min(rows, cols), each
// nonnegative, trailing zeros allowed.
std::vector<mpz_class> smith_normal_form(const IntMatrix& m);

// Nonnegative generator of the i-th elementary ideal of the ideal chain used
// here: E_i is generated by the (g - i) x (g - i) minors, where g = number of
// columns (generators).  Throws std::out_of_range for i >= g.
mpz_class elementary_ideal(const IntMatrix& m, std::size_t i);

struct OrderResult {
    bool finite = false;
    mpz_class order;  // >= 1 when finite

    bool operator==(const OrderResult& other) const = default;
};

inline OrderResult infinite_order() { return OrderResult{false, 0}; }
inline OrderResult finite_order(mpz_class n) { return OrderResult{true, std::move(n)}; }

// Order of the abelian group presented by the rows of m (cokernel of m acting
// on Z^cols): Finite(product of invariant factors) when rank = cols,
// Infinite otherwise.
OrderResult abelianization_order(const IntMatrix& m);

// Solve a*x + b*y = target; picks the least nonnegative x when x is not
// forced.  Absent iff gcd(a, b) does not divide target.
std::optional<std::pair<mpz_class, mpz_class>> solve_linear(const mpz_class& a,
                                                            const mpz_class& b,
                                                            const mpz_class& target);

// Least nonnegative x with a*x = b (mod m), m >= 1; absent iff
// gcd(a, m) does not divide b.
std::optional<mpz_class> solve_congruence(const mpz_class& a, const mpz_class& b,
                                          const mpz_class& m);

}  // namespace orbiseif

#endif
