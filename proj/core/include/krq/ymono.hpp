#ifndef KRQ_YMONO_HPP
#define KRQ_YMONO_HPP

#include "krq/cartan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace krq {

// Laurent monomial in the variables Y_{i,s}, where s is an integer offset on
// a single spectral q-lattice a*q^Z. Factors are kept sorted node-major with
// no zero exponents; this canonical form defines equality, hashing, ordering
// and the text/JSON serializations.
class YMonomial {
public:
    struct Factor {
        int node;
        int offset;
        long long exp;

        bool operator==(const Factor& o) const = default;
    };

    YMonomial() = default; // the monomial 1

    static YMonomial one() { return YMonomial(); }
    static YMonomial variable(int node, int offset, long long exp = 1);
    // Sorts, merges and drops zero exponents.
    static YMonomial from_factors(std::vector<Factor> factors);

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }
    long long exponent(int node, int offset) const;

    YMonomial operator*(const YMonomial& o) const;
    YMonomial inverse() const;
    YMonomial pow(long long e) const;
    // Shift every lattice offset by ds.
    YMonomial translated(int ds) const;

    // Largest offset carrying a nonzero exponent; requires a nonempty monomial.
    int max_offset() const;

    bool operator==(const YMonomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const YMonomial& o) const { return !(*this == o); }
    bool operator<(const YMonomial& o) const; // canonical (node-major) order

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

struct YMonomialHash {
    std::size_t operator()(const YMonomial& m) const { return m.hash(); }
};

// Finitely supported map (i,s) -> v_{i,s} >= 1 representing prod A_{i,s}^{-v}.
class AVector {
public:
    struct Entry {
        int node;
        int offset;
        long long count;

        bool operator==(const Entry& o) const = default;
    };

    AVector() = default;
    static AVector from_entries(std::vector<Entry> entries);

    bool is_empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    long long depth() const; // v(M) = sum of counts
    AVector translated(int ds) const;

    void add(int node, int offset, long long count); // count > 0

    bool operator==(const AVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const AVector& o) const { return !(*this == o); }
    bool operator<(const AVector& o) const { return entries_ < o.entries_ ? true : false; }

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::vector<Entry> entries_; // sorted node-major, counts >= 1
};

struct AVectorHash {
    std::size_t operator()(const AVector& v) const { return v.hash(); }
};

// A_{i,s} = Y_{i,s-r_i} Y_{i,s+r_i} * prod over neighbours j of Y_j-inverses
// whose offsets depend on C_{j,i} (see the q-character literature).
YMonomial a_monomial(const CartanData& cd, int i, int s);

// Highest-weight monomial of the Kirillov-Reshetikhin module W_{k,s}^{(i)}:
// prod_{t=1..k} Y_{i, s + 2 r_i (t-1)}. k = 0 gives 1.
YMonomial kr_monomial(const CartanData& cd, int i, int s, long long k);

bool is_dominant(const YMonomial& m);
bool is_i_dominant(const YMonomial& m, int i);
bool is_j_dominant(const YMonomial& m, const std::vector<int>& nodes);

// True iff at the maximal occurring offset every nonzero exponent is < 0.
// Undefined (error) on the monomial 1.
bool is_right_negative(const YMonomial& m);

// Multiply m by prod A_{i,s}^{-v_{i,s}}.
YMonomial apply_a_inverse(const CartanData& cd, const YMonomial& m, const AVector& v);

// Unique v >= 0 with m = m_prime * prod A_{i,s}^{-v_{i,s}}, if one exists.
std::optional<AVector> factor_over_A(const CartanData& cd, const YMonomial& m,
                                     const YMonomial& m_prime);

// omega(m) = sum u_{i,s}(m) Lambda_i.
Weight omega(const YMonomial& m, int rank);
Weight omega(const CartanData& cd, const YMonomial& m);

} // namespace krq

#endif
