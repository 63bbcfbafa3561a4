#ifndef KRQ_SYSTEMS_HPP
#define KRQ_SYSTEMS_HPP

#include "krq/cache.hpp"
#include "krq/charring.hpp"
#include "krq/report.hpp"

namespace krq {

// One tensor factor W_{k,offset}^{(node)}.
struct KrFactor {
    int node;
    long long k;
    int offset;

    bool operator==(const KrFactor& o) const = default;
};

// Sorted by node then offset; zero-length factors dropped.
using KrFactorList = std::vector<KrFactor>;

// Factors of S_{k,s}^{(i)}, the correction module of the T-system. The three
// cases (r_i >= 2 / r_i = 1 / short node of G2) reproduce the per-type factor
// tables verbatim.
KrFactorList s_factors(const CartanData& cd, int i, long long k, int s);

// Factors of R_k^{(i)} for the Q-system; offsets are irrelevant after
// restriction and set to 0.
KrFactorList r_factors(const CartanData& cd, int i, long long k);

// Product of the KR q-characters of a factor list (1 for an empty list).
QCharacter kr_product(const CartanData& cd, KrCache& cache, const KrFactorList& factors,
                      const Caps& caps = {});

// chi(W_{k,s}) chi(W_{k,s+2r_i}) = chi(W_{k+1,s}) chi(W_{k-1,s+2r_i}) + chi(S),
// compared term by term.
VerifyReport verify_t_system(const CartanData& cd, KrCache& cache, int i, long long k,
                             int s, const Caps& caps = {});

// Dominant monomials (with multiplicities) of the two KR products above,
// each sorted canonically.
std::pair<std::vector<std::pair<YMonomial, long long>>,
          std::vector<std::pair<YMonomial, long long>>>
dominant_ledger(const CartanData& cd, KrCache& cache, int i, long long k, int s,
                const Caps& caps = {});

// The S-module product has a unique dominant monomial, equal to
// M A^{-1}_{i,s+r_i(2k-1)} ... A^{-1}_{i,s+r_i}.
bool verify_s_special(const CartanData& cd, KrCache& cache, int i, long long k, int s,
                      const Caps& caps = {});

// chi(Q_k)^2 = chi(Q_{k+1}) chi(Q_{k-1}) + chi(R_k) in the ordinary
// character ring.
VerifyReport verify_q_system(const CartanData& cd, KrCache& cache, int i, long long k,
                             const Caps& caps = {});

// The normalized q-character of W_{k,-2 r_i k}^{(i)}, truncated to A-depth
// <= depth, is the same for every k in k_range.
bool limit_stabilization(const CartanData& cd, KrCache& cache, int i, long long depth,
                         const std::vector<long long>& k_range, const Caps& caps = {});

// Exact term-map comparisons; mismatches sorted canonically.
VerifyReport compare_qchar_terms(const QCharacter::TermMap& lhs,
                                 const QCharacter::TermMap& rhs);
VerifyReport compare_characters(const Character& lhs, const Character& rhs);

} // namespace krq

#endif
