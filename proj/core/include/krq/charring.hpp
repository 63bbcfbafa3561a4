#ifndef KRQ_CHARRING_HPP
#define KRQ_CHARRING_HPP

#include "krq/qchar.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace krq {

// Element of the ordinary character ring Z[e^omega]: sparse map from weight
// (fundamental coordinates) to integer coefficient. Zero coefficients are
// never stored, so map equality is ring equality.
class Character {
public:
    using TermMap = std::unordered_map<Weight, long long, WeightHash>;

    Character() = default; // zero
    static Character unit(int rank); // e^0
    static Character term(Weight w, long long coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Weight& w) const;
    long long total_mass() const; // sum of coefficients (dimension for module characters)

    void add_term(const Weight& w, long long coeff);

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const; // convolution product

    bool operator==(const Character& o) const { return terms_ == o.terms_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

    std::vector<std::pair<Weight, long long>> sorted_terms() const;

private:
    TermMap terms_;
};

// beta o chi_q: push multiplicities along omega. Preserves total mass.
Character restrict_qchar(const CartanData& cd, const QCharacter& chi);

// Multiply by e^{-by}.
Character normalize(const Character& chi, const Weight& by);

// prod_{alpha in Delta^+} (1 - e^{-alpha}).
Character delta_product(const CartanData& cd);

// Keep terms of degree <= D, where the degree of a weight lambda in -Q^+ is
// the sum of root coordinates of -lambda. Faults if some weight is not
// in -Q^+.
Character truncate(const CartanData& cd, const Character& chi, long long D);

// Fixed by every simple reflection (hence by the whole Weyl group).
bool is_weyl_invariant(const CartanData& cd, const Character& chi);

} // namespace krq

#endif
