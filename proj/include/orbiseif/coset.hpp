// Todd-Coxeter coset enumeration over the trivial subgroup: the nonabelian
// triviality oracle behind the weight certificates.

#ifndef ORBISEIF_COSET_HPP
#define ORBISEIF_COSET_HPP

#include <vector>

#include "orbiseif/presentation.hpp"

namespace orbiseif {

struct CosetResult {
    bool completed = false;
    // index of the trivial subgroup when completed, otherwise the bound that
    // was exceeded
    long long value = 0;

    bool operator==(const CosetResult& other) const = default;
};

// HLT-style enumeration with immediate coincidence processing.  Completed(n)
// means the table closed with n live cosets, so the presented group has
// order exactly n; Exceeded means more than `bound` cosets were ever
// defined.  Deterministic: identical inputs give identical tables.
CosetResult todd_coxeter(const Presentation& p, long long bound);

// Result plus the closed coset table with cosets renumbered canonically
// (row-major, columns alternating g, g^-1 per generator); empty table when
// the bound was exceeded.
struct CosetTableResult {
    CosetResult result;
    std::vector<std::vector<long long>> table;
};

CosetTableResult todd_coxeter_table(const Presentation& p, long long bound);

}  // namespace orbiseif

#endif
