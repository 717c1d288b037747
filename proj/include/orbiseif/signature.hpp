// 2-orbifold signatures: data model, text grammar, Euler characteristic and
// the admissibility test for Seifert bases of 2-knot manifolds.

#ifndef ORBISEIF_SIGNATURE_HPP
#define ORBISEIF_SIGNATURE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbiseif/rational.hpp"

namespace orbiseif {

enum class BaseKind { Sphere, ProjectivePlane, Disc };

// Base surface plus cone-point orders and (disc only) reflector-corner
// orders.  Order lists keep their input order; condition checks sort copies.
struct OrbifoldSignature {
    BaseKind base = BaseKind::Sphere;
    std::vector<long long> cone_orders;
    std::vector<long long> reflector_orders;

    bool operator==(const OrbifoldSignature& other) const = default;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar (ASCII, no whitespace):
//   sig    := ("S2" | "P2") "(" orders ")" | "D" "(" [orders] [";" orders] ")"
//   orders := integer ("," integer)*       integer := [1-9][0-9]*
// Every order must be >= 2; "D()" is rejected as degenerate.
OrbifoldSignature parse_signature(std::string_view text);

// Canonical form; parse(format(s)) == s for every valid signature.
std::string format_signature(const OrbifoldSignature& sig);

// chi^orb: chi(base) - sum(1 - 1/a_i) over cones - 1/2 sum(1 - 1/d_j) over
// reflector corners.
Rational euler_characteristic(const OrbifoldSignature& sig);

struct AdmissibilityVerdict {
    bool accepted = false;
    int case_number = 0;   // 1 = sphere, 2 = projective plane, 3 = disc
    std::string reason;    // machine-readable slug when rejected
};

// Case-by-case admissibility for aspherical Seifert bases:
//   sphere: >= 3 cones, no three cone orders share a factor, no three
//           pairwise-disjoint pairs each share a factor;
//   projective plane: 2 or 3 pairwise coprime cone orders, containing a 2
//           when there are 3, P2(3,4,5) excepted;
//   disc: cone orders odd and coprime, at most one even corner order,
//           at most 2 cones, 2p + q >= 3.
// On top of the case conditions: chi <= 0, and chi = 0 only for S2(2,3,6).
AdmissibilityVerdict theorem1_admissible(const OrbifoldSignature& sig);

}  // namespace orbiseif

#endif
