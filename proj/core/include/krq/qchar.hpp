#ifndef KRQ_QCHAR_HPP
#define KRQ_QCHAR_HPP

#include "krq/ymono.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace krq {

// Finite multiset of Y-monomials with positive integer multiplicities plus
// the l-highest weight monomial. Multiplication is the ring product of
// q-characters (tensor product of modules).
class QCharacter {
public:
    using TermMap = std::unordered_map<YMonomial, long long, YMonomialHash>;

    QCharacter() : highest_(YMonomial::one()) { terms_[highest_] = 1; }
    explicit QCharacter(const YMonomial& m) : highest_(m) { terms_[m] = 1; }
    QCharacter(TermMap terms, YMonomial highest)
        : terms_(std::move(terms)), highest_(std::move(highest)) {}

    const TermMap& terms() const { return terms_; }
    const YMonomial& highest() const { return highest_; }

    std::size_t term_count() const { return terms_.size(); }
    long long dimension() const;
    long long coefficient(const YMonomial& m) const;

    QCharacter translated(int ds) const;

    // Terms in canonical monomial order (used by serialization and reports).
    std::vector<std::pair<YMonomial, long long>> sorted_terms() const;

    bool operator==(const QCharacter& o) const {
        return highest_ == o.highest_ && terms_ == o.terms_;
    }

private:
    TermMap terms_;
    YMonomial highest_;
};

QCharacter multiply(const QCharacter& a, const QCharacter& b);

// Dominant monomials with multiplicities, sorted canonically.
std::vector<std::pair<YMonomial, long long>> dominant_monomials(const QCharacter& chi);

// Exactly one dominant monomial, of multiplicity 1, equal to the highest.
bool is_special(const QCharacter& chi);

} // namespace krq

#endif
