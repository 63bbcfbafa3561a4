#ifndef KRQ_FM_HPP
#define KRQ_FM_HPP

#include "krq/qchar.hpp"

namespace krq {

struct Caps {
    long long max_depth = 200;
    long long max_monomials = 5'000'000;
};

struct FmReport {
    QCharacter qchar;
    long long depth_reached = 0;
    long long monomial_count = 0;
    bool special = false;
};

// Monomial-saturation computation of the q-character of a special l-highest
// weight module from its dominant monomial m_plus. Saturates breadth-first by
// depth v(m (m_plus)^{-1}); at each depth the coefficient of a candidate is
// demanded independently by every direction i at which the candidate is not
// i-dominant, and all demands must agree. A second dominant monomial or a
// directional disagreement aborts with not_special / inconsistent.
FmReport fm_qchar(const CartanData& cd, const YMonomial& m_plus, const Caps& caps = {});

} // namespace krq

#endif
