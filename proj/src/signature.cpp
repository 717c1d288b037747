#include "orbiseif/signature.hpp"

#include <algorithm>
#include <numeric>

namespace orbiseif {

namespace {

constexpr long long kMaxOrder = 1'000'000'000;

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(pos_, std::string("expected ") + what);
    }

    bool consume_prefix(std::string_view p) {
        if (text_.substr(pos_, p.size()) != p) return false;
        pos_ += p.size();
        return true;
    }

    long long integer() {
        if (done() || peek() < '1' || peek() > '9')
            throw ParseError(pos_, "expected integer starting with 1-9");
        long long value = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > kMaxOrder) throw ParseError(pos_, "order too large");
            ++pos_;
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<long long> parse_orders(Cursor& cur) {
    std::vector<long long> orders;
    orders.push_back(cur.integer());
    while (cur.consume(',')) orders.push_back(cur.integer());
    return orders;
}

void check_orders(const std::vector<long long>& orders, std::size_t err_pos) {
    for (long long a : orders)
        if (a < 2) throw ParseError(err_pos, "order < 2");
}

}  // namespace

OrbifoldSignature parse_signature(std::string_view text) {
    Cursor cur(text);
    OrbifoldSignature sig;
    if (cur.consume_prefix("S2")) {
        sig.base = BaseKind::Sphere;
    } else if (cur.consume_prefix("P2")) {
        sig.base = BaseKind::ProjectivePlane;
    } else if (cur.consume_prefix("D")) {
        sig.base = BaseKind::Disc;
    } else {
        throw ParseError(cur.pos(), "expected base S2, P2 or D");
    }
    cur.expect('(', "'('");
    if (sig.base == BaseKind::Disc) {
        std::size_t body = cur.pos();
        if (cur.peek() != ';' && cur.peek() != ')') sig.cone_orders = parse_orders(cur);
        if (cur.consume(';')) sig.reflector_orders = parse_orders(cur);
        if (sig.cone_orders.empty() && sig.reflector_orders.empty())
            throw ParseError(body, "degenerate disc signature (no cones, no corners)");
    } else {
        sig.cone_orders = parse_orders(cur);
    }
    cur.expect(')', "')'");
    if (!cur.done()) throw ParseError(cur.pos(), "trailing characters");
    check_orders(sig.cone_orders, cur.pos());
    check_orders(sig.reflector_orders, cur.pos());
    return sig;
}

std::string format_signature(const OrbifoldSignature& sig) {
    std::string out;
    switch (sig.base) {
        case BaseKind::Sphere: out = "S2"; break;
        case BaseKind::ProjectivePlane: out = "P2"; break;
        case BaseKind::Disc: out = "D"; break;
    }
    out += '(';
    for (std::size_t i = 0; i < sig.cone_orders.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sig.cone_orders[i]);
    }
    if (!sig.reflector_orders.empty()) {
        out += ';';
        for (std::size_t i = 0; i < sig.reflector_orders.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(sig.reflector_orders[i]);
        }
    }
    out += ')';
    return out;
}

Rational euler_characteristic(const OrbifoldSignature& sig) {
    Rational chi(sig.base == BaseKind::Sphere ? 2 : 1);
    for (long long a : sig.cone_orders) chi = chi - Rational(a - 1, a);
    for (long long d : sig.reflector_orders) chi = chi - Rational(d - 1, 2 * d);
    return chi;
}

namespace {

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a, b), c);
}

// Largest number of pairwise-disjoint index pairs {i,j} with
// gcd(orders[i], orders[j]) > 1; counts small, so plain recursion.
int max_sharing_matching(const std::vector<long long>& orders) {
    const int n = static_cast<int>(orders.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::gcd(orders[i], orders[j]) > 1) edges.emplace_back(i, j);

    int best = 0;
    auto rec = [&](auto&& self, std::size_t from, unsigned used, int size) -> void {
        best = std::max(best, size);
        for (std::size_t e = from; e < edges.size(); ++e) {
            unsigned mask = (1u << edges[e].first) | (1u << edges[e].second);
            if (used & mask) continue;
            self(self, e + 1, used | mask, size + 1);
        }
    };
    rec(rec, 0, 0u, 0);
    return best;
}

AdmissibilityVerdict reject(std::string reason) {
    return AdmissibilityVerdict{false, 0, std::move(reason)};
}

// Case conditions only; the chi gate is applied by the caller.
AdmissibilityVerdict case_conditions(const OrbifoldSignature& sig) {
    const auto& cones = sig.cone_orders;
    switch (sig.base) {
        case BaseKind::Sphere: {
            const std::size_t m = cones.size();
            if (m < 3) return reject("sphere-needs-three-cones");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (std::size_t k = j + 1; k < m; ++k)
                        if (gcd3(cones[i], cones[j], cones[k]) > 1)
                            return reject("three-cone-orders-share-factor");
            if (max_sharing_matching(cones) > 2)
                return reject("three-disjoint-pairs-share-factors");
            return AdmissibilityVerdict{true, 1, {}};
        }
        case BaseKind::ProjectivePlane: {
            const std::size_t n = cones.size();
            if (n != 2 && n != 3) return reject("p2-cone-count");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (std::gcd(cones[i], cones[j]) > 1) return reject("p2-cones-not-coprime");
            if (n == 3) {
                std::vector<long long> sorted = cones;
                std::sort(sorted.begin(), sorted.end());
                const bool has_two = sorted.front() == 2;
                const bool is_345 = sorted == std::vector<long long>{3, 4, 5};
                if (!has_two && !is_345) return reject("p2-triple-without-2");
            }
            return AdmissibilityVerdict{true, 2, {}};
        }
        case BaseKind::Disc: {
            const std::size_t p = cones.size();
            const std::size_t q = sig.reflector_orders.size();
            if (p > 2) return reject("disc-too-many-cones");
            if (2 * p + q < 3) return reject("disc-too-few-points");
            for (long long c : cones)
                if (c % 2 == 0) return reject("disc-cone-even");
            if (p == 2 && std::gcd(cones[0], cones[1]) > 1)
                return reject("disc-cones-not-coprime");
            int even_corners = 0;
            for (long long d : sig.reflector_orders)
                if (d % 2 == 0) ++even_corners;
            if (even_corners > 1) return reject("disc-multiple-even-corners");
            return AdmissibilityVerdict{true, 3, {}};
        }
    }
    return reject("unknown-base");
}

bool is_s236(const OrbifoldSignature& sig) {
    if (sig.base != BaseKind::Sphere || sig.cone_orders.size() != 3) return false;
    std::vector<long long> sorted = sig.cone_orders;
    std::sort(sorted.begin(), sorted.end());
    return sorted == std::vector<long long>{2, 3, 6};
}

}  // namespace

AdmissibilityVerdict theorem1_admissible(const OrbifoldSignature& sig) {
    AdmissibilityVerdict verdict = case_conditions(sig);
    if (!verdict.accepted) return verdict;
    const Rational chi = euler_characteristic(sig);
    if (chi.sign() > 0) return reject("spherical");
    // Aspherical bases must be hyperbolic except for the flat S2(2,3,6).
    if (chi.sign() == 0 && !is_s236(sig)) return reject("flat");
    return verdict;
}

}  // namespace orbiseif
