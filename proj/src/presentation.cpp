#include "orbiseif/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbiseif {

std::string family_name(Family f) {
    switch (f) {
        case Family::Triple: return "triple";
        case Family::Quad: return "quad";
        case Family::Projective: return "projective";
        case Family::DiscReflector: return "disc-reflector";
        case Family::DiscCones: return "disc-cones";
    }
    return "?";
}

Word make_word(std::vector<Syllable> syllables) {
    Word w;
    for (const Syllable& s : syllables) {
        if (s.exponent == 0) continue;
        if (!w.syllables.empty() && w.syllables.back().generator == s.generator) {
            w.syllables.back().exponent += s.exponent;
            if (w.syllables.back().exponent == 0) w.syllables.pop_back();
        } else {
            w.syllables.push_back(s);
        }
    }
    return w;
}

Word inverse(const Word& w) {
    Word out;
    out.syllables.reserve(w.syllables.size());
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.push_back({it->generator, -it->exponent});
    return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.syllables.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
        if (i) out += ' ';
        const Syllable& s = w.syllables[i];
        out += names.at(static_cast<std::size_t>(s.generator));
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

namespace {

long long to_exponent(const mpz_class& e) {
    if (!e.fits_slong_p())
        throw std::invalid_argument("exponent too large for a presentation word");
    return e.get_si();
}

Syllable syl(int gen, long long exp) { return Syllable{gen, exp}; }

void append_commutators(Presentation& p) {
    const int n = static_cast<int>(p.generator_names.size());
    for (int g = 1; g < n; ++g)
        p.relators.push_back(make_word({syl(0, 1), syl(g, 1), syl(0, -1), syl(g, -1)}));
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string("malformed SeifertData: ") + msg);
}

std::vector<long long> sorted(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_signature_orders(const SeifertData& data, std::vector<long long> record_orders,
                            BaseKind base) {
    require(data.signature.base == base, "family does not match signature base");
    require(sorted(record_orders) == sorted(data.signature.cone_orders),
            "family cone orders do not match signature");
    for (long long o : record_orders) require(o >= 2, "cone order below 2");
}

}  // namespace

Presentation build_nu_presentation(const SeifertData& data) {
    Presentation p;
    switch (data.family) {
        case Family::Triple: {
            const auto& e = std::get<TripleExponents>(data.exponents);
            check_signature_orders(data, {e.p, e.q, e.r}, BaseKind::Sphere);
            require(data.signature.reflector_orders.empty(), "sphere has no reflector orders");
            p.generator_names = {"t", "u", "v", "w"};
            p.relators.push_back(make_word({syl(1, e.p), syl(0, -to_exponent(e.a))}));
            p.relators.push_back(make_word({syl(2, e.q), syl(0, -to_exponent(e.b))}));
            p.relators.push_back(make_word({syl(3, e.r), syl(0, -to_exponent(e.c))}));
            p.relators.push_back(make_word({syl(1, 1), syl(2, 1), syl(3, 1)}));
            break;
        }
        case Family::Quad: {
            const auto& e = std::get<QuadExponents>(data.exponents);
            check_signature_orders(data, {e.p, e.q, e.r, e.s}, BaseKind::Sphere);
            require(data.signature.reflector_orders.empty(), "sphere has no reflector orders");
            p.generator_names = {"t", "u", "v", "w", "x"};
            p.relators.push_back(make_word({syl(1, e.p), syl(0, -to_exponent(e.a))}));
            p.relators.push_back(make_word({syl(2, e.q), syl(0, -to_exponent(e.b))}));
            p.relators.push_back(make_word({syl(3, e.r), syl(0, -to_exponent(e.c))}));
            p.relators.push_back(make_word({syl(4, e.s), syl(0, -to_exponent(e.d))}));
            p.relators.push_back(make_word({syl(1, 1), syl(2, 1), syl(3, 1), syl(4, 1)}));
            break;
        }
        case Family::Projective: {
            const auto& e = std::get<ProjectiveExponents>(data.exponents);
            check_signature_orders(data, {e.p, e.q}, BaseKind::ProjectivePlane);
            p.generator_names = {"t", "u", "v", "w"};
            p.relators.push_back(make_word({syl(1, 2), syl(3, -1), syl(2, -1)}));
            p.relators.push_back(make_word({syl(2, e.p), syl(0, -to_exponent(e.e))}));
            p.relators.push_back(make_word({syl(3, e.q), syl(0, -to_exponent(e.f))}));
            break;
        }
        case Family::DiscReflector: {
            const auto& e = std::get<DiscReflectorExponents>(data.exponents);
            check_signature_orders(data, {e.a}, BaseKind::Disc);
            require(e.d == data.signature.reflector_orders,
                    "corner orders do not match signature");
            require(!e.d.empty(), "disc-reflector family needs at least one corner");
            require(e.f.size() == e.d.size(), "need one f_i per corner order");
            for (long long d : e.d) require(d >= 2, "corner order below 2");
            const int q = static_cast<int>(e.d.size());
            p.generator_names = {"t", "u"};
            for (int i = 1; i <= q + 1; ++i) p.generator_names.push_back("x" + std::to_string(i));
            // x_i has generator index i + 1
            p.relators.push_back(make_word({syl(1, e.a), syl(0, -to_exponent(e.e))}));
            for (int i = 1; i <= q; ++i)
                p.relators.push_back(make_word({syl(i + 1, 2), syl(0, -1)}));
            for (int i = 1; i <= q; ++i) {
                std::vector<Syllable> word;
                for (long long k = 0; k < e.d[static_cast<std::size_t>(i - 1)]; ++k) {
                    word.push_back(syl(i + 1, 1));
                    word.push_back(syl(i + 2, 1));
                }
                word.push_back(syl(0, -to_exponent(e.f[static_cast<std::size_t>(i - 1)])));
                p.relators.push_back(make_word(std::move(word)));
            }
            p.relators.push_back(make_word({syl(q + 2, 1), syl(1, 1), syl(2, -1), syl(1, -1)}));
            break;
        }
        case Family::DiscCones: {
            const auto& e = std::get<DiscConesExponents>(data.exponents);
            check_signature_orders(data, {e.a, e.b}, BaseKind::Disc);
            require(data.signature.reflector_orders.empty(),
                    "disc-cones family has no corner orders");
            p.generator_names = {"t", "u", "v", "w"};
            p.relators.push_back(make_word({syl(1, e.a), syl(0, -to_exponent(e.e))}));
            p.relators.push_back(make_word({syl(2, e.b), syl(0, -to_exponent(e.f))}));
            p.relators.push_back(make_word({syl(3, 2), syl(0, -1)}));
            p.relators.push_back(make_word(
                {syl(3, 1), syl(1, 1), syl(2, 1), syl(3, -1), syl(2, -1), syl(1, -1)}));
            break;
        }
    }
    append_commutators(p);
    return p;
}

Presentation build_orbifold_presentation(const OrbifoldSignature& sig) {
    Presentation p;
    switch (sig.base) {
        case BaseKind::Sphere: {
            const int m = static_cast<int>(sig.cone_orders.size());
            std::vector<Syllable> product;
            for (int i = 0; i < m; ++i) {
                p.generator_names.push_back("x" + std::to_string(i + 1));
                product.push_back(syl(i, 1));
            }
            for (int i = 0; i < m; ++i)
                p.relators.push_back(make_word({syl(i, sig.cone_orders[i])}));
            p.relators.push_back(make_word(std::move(product)));
            break;
        }
        case BaseKind::ProjectivePlane: {
            const int n = static_cast<int>(sig.cone_orders.size());
            p.generator_names.push_back("u");
            for (int i = 0; i < n; ++i) p.generator_names.push_back("x" + std::to_string(i + 1));
            for (int i = 0; i < n; ++i)
                p.relators.push_back(make_word({syl(i + 1, sig.cone_orders[i])}));
            std::vector<Syllable> rel = {syl(0, 2)};
            for (int i = n; i >= 1; --i) rel.push_back(syl(i, -1));
            p.relators.push_back(make_word(std::move(rel)));
            break;
        }
        case BaseKind::Disc: {
            const int pc = static_cast<int>(sig.cone_orders.size());
            const int q = static_cast<int>(sig.reflector_orders.size());
            for (int j = 0; j < pc; ++j) p.generator_names.push_back("u" + std::to_string(j + 1));
            for (int i = 0; i <= q; ++i) p.generator_names.push_back("x" + std::to_string(i + 1));
            const int x0 = pc;  // index of x_1
            for (int j = 0; j < pc; ++j)
                p.relators.push_back(make_word({syl(j, sig.cone_orders[j])}));
            for (int i = 0; i <= q; ++i) p.relators.push_back(make_word({syl(x0 + i, 2)}));
            for (int i = 0; i < q; ++i) {
                std::vector<Syllable> word;
                for (long long k = 0; k < sig.reflector_orders[i]; ++k) {
                    word.push_back(syl(x0 + i, 1));
                    word.push_back(syl(x0 + i + 1, 1));
                }
                p.relators.push_back(make_word(std::move(word)));
            }
            // x_{q+1} U = U x_1 with U the product of the cone generators.
            std::vector<Syllable> wrap = {syl(x0 + q, 1)};
            for (int j = 0; j < pc; ++j) wrap.push_back(syl(j, 1));
            wrap.push_back(syl(x0, -1));
            for (int j = pc - 1; j >= 0; --j) wrap.push_back(syl(j, -1));
            p.relators.push_back(make_word(std::move(wrap)));
            break;
        }
    }
    return p;
}

Presentation adjoin_relator(const Presentation& p, const Word& w) {
    Word reduced = make_word(w.syllables);
    if (reduced.syllables.empty())
        throw std::invalid_argument("adjoin_relator: empty relator");
    for (const Syllable& s : reduced.syllables)
        if (s.generator < 0 || static_cast<std::size_t>(s.generator) >= p.generator_names.size())
            throw std::invalid_argument("adjoin_relator: generator index out of range");
    Presentation out = p;
    out.relators.push_back(std::move(reduced));
    return out;
}

IntMatrix abelianization_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), p.generator_names.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Syllable& s : p.relators[r].syllables)
            m.at(r, static_cast<std::size_t>(s.generator)) += mpz_class(static_cast<long>(s.exponent));
    return m;
}

}  // namespace orbiseif
