#include "krq/charring.hpp"

#include "krq/checked.hpp"

#include <algorithm>

namespace krq {

Character Character::unit(int rank) {
    Character c;
    c.terms_[Weight(static_cast<std::size_t>(rank))] = 1;
    return c;
}

Character Character::term(Weight w, long long coeff) {
    Character c;
    if (coeff != 0)
        c.terms_[std::move(w)] = coeff;
    return c;
}

long long Character::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long Character::total_mass() const {
    long long d = 0;
    for (const auto& [w, c] : terms_)
        d = checked_add(d, c);
    return d;
}

void Character::add_term(const Weight& w, long long coeff) {
    if (coeff == 0)
        return;
    auto [it, fresh] = terms_.emplace(w, coeff);
    if (!fresh) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Character Character::operator+(const Character& o) const {
    Character out = *this;
    for (const auto& [w, c] : o.terms_)
        out.add_term(w, c);
    return out;
}

Character Character::operator-(const Character& o) const {
    Character out = *this;
    for (const auto& [w, c] : o.terms_)
        out.add_term(w, checked_neg(c));
    return out;
}

Character Character::operator*(const Character& o) const {
    Character out;
    out.terms_.reserve(terms_.size());
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            out.add_term(wa + wb, checked_mul(ca, cb));
    return out;
}

std::vector<std::pair<Weight, long long>> Character::sorted_terms() const {
    std::vector<std::pair<Weight, long long>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Character restrict_qchar(const CartanData& cd, const QCharacter& chi) {
    Character out;
    for (const auto& [m, c] : chi.terms())
        out.add_term(omega(cd, m), c);
    return out;
}

Character normalize(const Character& chi, const Weight& by) {
    Character out;
    for (const auto& [w, c] : chi.terms())
        out.add_term(w - by, c);
    return out;
}

Character delta_product(const CartanData& cd) {
    Character acc = Character::unit(cd.rank());
    for (const auto& rc : cd.positive_roots_rc()) {
        Weight alpha = cd.root_to_weight(rc);
        Character factor = Character::unit(cd.rank());
        factor.add_term(-alpha, -1);
        acc = acc * factor;
    }
    return acc;
}

Character truncate(const CartanData& cd, const Character& chi, long long D) {
    if (D < 0)
        fail(ErrorCode::bad_range, "truncation degree must be >= 0");
    Character out;
    for (const auto& [w, c] : chi.terms()) {
        auto rc = root_coordinates(cd, w);
        long long degree = 0;
        for (const auto& x : rc) {
            if (!x.is_integer() || x.num() > 0)
                fail(ErrorCode::not_in_root_lattice,
                     "weight " + w.to_string() + " is not in -Q^+");
            degree = checked_sub(degree, x.to_integer());
        }
        if (degree <= D)
            out.add_term(w, c);
    }
    return out;
}

bool is_weyl_invariant(const CartanData& cd, const Character& chi) {
    for (int i = 1; i <= cd.rank(); ++i) {
        for (const auto& [w, c] : chi.terms())
            if (chi.coefficient(simple_reflection(cd, i, w)) != c)
                return false;
    }
    return true;
}

} // namespace krq
