#ifndef KRQ_FERMIONIC_HPP
#define KRQ_FERMIONIC_HPP

#include "krq/cache.hpp"
#include "krq/charring.hpp"
#include "krq/report.hpp"

#include <map>

namespace krq {

// Finitely supported nonnegative integer array indexed by (node i, level k).
struct LevelVector {
    std::map<std::pair<int, long long>, long long> entries; // values >= 1 stored

    long long at(int i, long long k) const {
        auto it = entries.find({i, k});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, long long k, long long value);
};

using NuSpec = LevelVector;  // the nu_k^{(i)} selecting a KR tensor product
using NVector = LevelVector; // the summation variable N_k^{(i)}

// Generalized binomial via falling factorial: a(a-1)...(a-b+1)/b!, defined
// for every integer a (including negatives) and b >= 0.
long long gen_binomial(long long a, long long b);

// Vacancy number P_k^{(i)}(nu,N) = sum_l nu_l^{(i)} min(k,l)
//   - sum_{j,l} N_l^{(j)} r_i C_{i,j} min(k/r_j, l/r_i),
// evaluated in exact rationals; integrality is asserted.
long long p_quantity(const CartanData& cd, const NuSpec& nu, const NVector& N, int i,
                     long long k);

// F(nu) truncated to weight degree <= D: sum over all N with
// sum k N_k^{(i)} <= D of prod gen_binomial(P+N, N) e^{-k N_k^{(i)} alpha_i}.
Character fermionic_sum(const CartanData& cd, const NuSpec& nu, long long D);

// prod over nu of the normalized restricted KR characters
// (e^{-k Lambda_i} chi(Q_k^{(i)}))^{nu_k^{(i)}}.
Character q_nu(const CartanData& cd, KrCache& cache, const NuSpec& nu,
               const Caps& caps = {});

// truncate(q_nu * prod(1-e^{-alpha}), D) == fermionic_sum(nu, D), exactly.
VerifyReport verify_kr_formula(const CartanData& cd, KrCache& cache, const NuSpec& nu,
                               long long D, const Caps& caps = {});

} // namespace krq

#endif
