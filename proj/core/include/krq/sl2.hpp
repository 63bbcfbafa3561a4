#ifndef KRQ_SL2_HPP
#define KRQ_SL2_HPP

#include "krq/qchar.hpp"

#include <map>
#include <vector>

namespace krq {

// One KR string m_{k,s} on a single node: offsets s, s+2r, ..., s+2r(k-1),
// the step 2r being carried by context.
struct Sl2String {
    int start;
    long long length; // >= 1

    bool operator==(const Sl2String& o) const = default;
};

// Decompose an offset multiset (all offsets congruent mod step) into maximal
// runs per multiplicity level. The output strings are pairwise not in special
// position and their multiset union reproduces the input exactly.
std::vector<Sl2String> normal_writing(const std::map<int, long long>& mult_by_offset,
                                      int step);

// Whether two strings with common step 2r would merge into a strictly larger
// single string (exponent-wise max is a string distinct from both).
bool in_special_position(const Sl2String& a, const Sl2String& b, int step);

// Rank-one KR q-character over the single-node alphabet (node index 1):
// m_{k,s} (1 + A^{-1}_{s+r(2k-1)} (1 + A^{-1}_{s+r(2k-3)} (...))), where the
// rank-one A_c is Y_{c-r} Y_{c+r}. Exactly k+1 monomials, multiplicity 1.
QCharacter sl2_kr_qchar(int r, int s, long long k);

// L_i(m) for an i-dominant monomial m: product of the lifted rank-one KR
// characters of the strings of the i-part, times m. Highest monomial is m.
QCharacter lift_L(const CartanData& cd, int i, const YMonomial& m);

// Unique decomposition chi = sum lambda_i(m) L_i(m) over i-dominant m,
// obtained by greedy peeling in decreasing omega-height. Returns the pairs
// with lambda > 0 in peel order.
std::vector<std::pair<YMonomial, long long>> i_decompose(const CartanData& cd, int i,
                                                         const QCharacter& chi);

} // namespace krq

#endif
