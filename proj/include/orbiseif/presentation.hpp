// Finite group presentations: family templates for the Seifert groups nu,
// orbifold-group presentations, relator adjunction and the abelianized
// exponent matrix.

#ifndef ORBISEIF_PRESENTATION_HPP
#define ORBISEIF_PRESENTATION_HPP

#include <string>
#include <vector>

#include "orbiseif/seifert.hpp"
#include "orbiseif/zlattice.hpp"

namespace orbiseif {

struct Syllable {
    int generator = 0;
    long long exponent = 0;

    bool operator==(const Syllable& other) const = default;
};

// Freely reduced word: exponents nonzero, adjacent syllables on distinct
// generators.  Construct through make_word to keep the invariant.
struct Word {
    std::vector<Syllable> syllables;

    bool operator==(const Word& other) const = default;
};

Word make_word(std::vector<Syllable> syllables);
Word inverse(const Word& w);

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    bool operator==(const Presentation& other) const = default;
};

std::string word_str(const Word& w, const std::vector<std::string>& names);

// The family template for pi_1 of the Seifert 3-manifold, with the standard
// normalizations applied and centrality of t written out as commutators
// [t,g] for every non-t generator g.  Generator order is fixed (t first) so
// matrices are reproducible.  Throws std::invalid_argument on structurally
// malformed data.
Presentation build_nu_presentation(const SeifertData& data);

// Standard orbifold-group presentation:
//   sphere:  <x_1..x_m | x_i^{a_i}, x_1...x_m>
//   P^2:     <u, x_1..x_n | x_i^{b_i}, u^2 (x_1...x_n)^-1>
//   disc:    <u_1..u_p, x_1..x_{q+1} | u_j^{c_j}, x_i^2,
//             (x_i x_{i+1})^{d_i}, x_{q+1} U x_1^-1 U^-1>  with U = u_1...u_p
Presentation build_orbifold_presentation(const OrbifoldSignature& sig);

// P with w appended; throws std::invalid_argument when w uses a generator
// index outside P or reduces to the empty word.
Presentation adjoin_relator(const Presentation& p, const Word& w);

// One row per relator, one column per generator, entry = exponent sum.
// Commutator relators contribute zero rows.
IntMatrix abelianization_matrix(const Presentation& p);

}  // namespace orbiseif

#endif
