#ifndef KRQ_CARTAN_HPP
#define KRQ_CARTAN_HPP

#include "krq/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace krq {

enum class Series : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

Series series_from_char(char c);
char series_to_char(Series s);

// Weight in fundamental-weight coordinates: coords[j-1] = lambda(alpha_j^vee).
struct Weight {
    std::vector<long long> coords;

    Weight() = default;
    explicit Weight(std::size_t rank) : coords(rank, 0) {}
    explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(long long c) const;

    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return coords < o.coords; }

    std::string to_string() const;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const;
};

// Finite-type Cartan datum. Node numbering conventions are fixed (see
// README, "Dynkin conventions"): they are chosen so that the per-type
// T-system factor tables hold verbatim with integer lattice offsets.
class CartanData {
public:
    CartanData(Series series, int rank, std::vector<std::vector<int>> cartan,
               std::vector<int> symmetrizers);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::string name() const; // e.g. "B3"

    // 1-based accessors; i, j in 1..rank
    int cartan(int i, int j) const;
    int sym(int i) const; // r_i
    int max_sym() const;  // max r_i

    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::vector<int>& symmetrizers() const { return sym_; }

    // Positive roots in root coordinates (each entry j = coefficient of
    // alpha_j), computed once by reflection closure.
    const std::vector<std::vector<long long>>& positive_roots_rc() const { return pos_roots_; }
    std::vector<Weight> positive_roots() const; // in fundamental coordinates

    Weight fundamental_weight(int i) const; // Lambda_i
    Weight simple_root(int i) const;        // alpha_i (column i of C)
    Weight root_to_weight(const std::vector<long long>& rc) const;

    void check_node(int i) const;

private:
    Series series_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> sym_;
    std::vector<std::vector<long long>> pos_roots_;
    std::vector<std::vector<Rational>> cartan_inverse_;

    void validate() const;
    void compute_positive_roots();
    void compute_inverse();

    friend std::vector<Rational> root_coordinates(const CartanData&, const Weight&);
};

// Factory with the fixed per-series conventions.
CartanData make_cartan(Series series, int rank);
CartanData make_cartan(char series, int rank);

// s_i(w) = w - w_i * alpha_i, an involution.
Weight simple_reflection(const CartanData& cd, int i, const Weight& w);

// Exact solution c of C*c = coords(w), so w = sum_i c_i alpha_i.
std::vector<Rational> root_coordinates(const CartanData& cd, const Weight& w);

bool in_root_lattice(const CartanData& cd, const Weight& w);

// Expected |Delta^+| for the type; used as a self-check of the closure.
std::size_t expected_positive_root_count(Series series, int rank);

} // namespace krq

#endif
