// Seifert-fibration exponent data for the five constructive families.

#ifndef ORBISEIF_SEIFERT_HPP
#define ORBISEIF_SEIFERT_HPP

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "orbiseif/signature.hpp"

namespace orbiseif {

enum class Family { Triple, Quad, Projective, DiscReflector, DiscCones };

std::string family_name(Family f);

// S2(p,q,r): u^p = t^a, v^q = t^b, w^r = t^c, uvw = 1 (d normalized to 0).
struct TripleExponents {
    long long p = 0, q = 0, r = 0;
    mpz_class a, b, c;
};

// S2(p,q,r,s): u^p = t^a, ..., x^s = t^d, uvwx = 1 (e normalized to 0).
struct QuadExponents {
    long long p = 0, q = 0, r = 0, s = 0;
    mpz_class a, b, c, d;
    int eps_r = 1, eps_s = 1;
};

// P2(p,q): u^2 = vw (k normalized to 0), v^p = t^e, w^q = t^f.
struct ProjectiveExponents {
    long long p = 0, q = 0;
    mpz_class e, f;
};

// D(a; d_1..d_q): u^a = t^e, x_i^2 = t (g_i normalized to 1),
// (x_i x_{i+1})^{d_i} = t^{f_i}, x_{q+1} u = u x_1 (h normalized to 0).
struct DiscReflectorExponents {
    long long a = 0;
    std::vector<long long> d;
    mpz_class e;
    std::vector<mpz_class> f;
};

// D(a,b): u^a = t^e, v^b = t^f, w^2 = t (g normalized to 1),
// wuv = uvw (h normalized to 0).
struct DiscConesExponents {
    long long a = 0, b = 0;
    mpz_class e, f;
};

struct SeifertData {
    OrbifoldSignature signature;
    Family family = Family::Triple;
    std::variant<TripleExponents, QuadExponents, ProjectiveExponents, DiscReflectorExponents,
                 DiscConesExponents>
        exponents;
    // permutation[i] = index into signature.cone_orders feeding slot i of the
    // family record (identity when no reordering was needed).
    std::vector<int> permutation;
};

}  // namespace orbiseif

#endif
