#include "krq/cartan.hpp"

#include "krq/checked.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace krq {

Series series_from_char(char c) {
    switch (c) {
    case 'A': return Series::A;
    case 'B': return Series::B;
    case 'C': return Series::C;
    case 'D': return Series::D;
    case 'E': return Series::E;
    case 'F': return Series::F;
    case 'G': return Series::G;
    default:
        fail(ErrorCode::invalid_type, std::string("unknown series '") + c + "'");
    }
}

char series_to_char(Series s) { return static_cast<char>(s); }

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        r.coords[j] = checked_add(coords[j], o.coords[j]);
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        r.coords[j] = checked_sub(coords[j], o.coords[j]);
    return r;
}

Weight Weight::operator-() const {
    Weight r(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        r.coords[j] = checked_neg(coords[j]);
    return r;
}

Weight Weight::scaled(long long c) const {
    Weight r(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        r.coords[j] = checked_mul(coords[j], c);
    return r;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << "e[";
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) os << ",";
        os << coords[j];
    }
    os << "]";
    return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (long long c : w.coords) {
        auto u = static_cast<unsigned long long>(c);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

CartanData::CartanData(Series series, int rank, std::vector<std::vector<int>> cartan,
                       std::vector<int> symmetrizers)
    : series_(series), rank_(rank), cartan_(std::move(cartan)), sym_(std::move(symmetrizers)) {
    validate();
    compute_inverse();
    compute_positive_roots();
}

std::string CartanData::name() const {
    return std::string(1, series_to_char(series_)) + std::to_string(rank_);
}

int CartanData::cartan(int i, int j) const {
    check_node(i);
    check_node(j);
    return cartan_[i - 1][j - 1];
}

int CartanData::sym(int i) const {
    check_node(i);
    return sym_[i - 1];
}

int CartanData::max_sym() const {
    return *std::max_element(sym_.begin(), sym_.end());
}

void CartanData::check_node(int i) const {
    if (i < 1 || i > rank_)
        fail(ErrorCode::index_out_of_range,
             "node " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
}

void CartanData::validate() const {
    if (rank_ < 1 || cartan_.size() != static_cast<std::size_t>(rank_) ||
        sym_.size() != static_cast<std::size_t>(rank_))
        fail(ErrorCode::invalid_type, "malformed Cartan datum");
    int min_r = *std::min_element(sym_.begin(), sym_.end());
    if (min_r != 1)
        fail(ErrorCode::invalid_type, "symmetrizers must have min 1");
    for (int i = 0; i < rank_; ++i) {
        if (cartan_[i].size() != static_cast<std::size_t>(rank_))
            fail(ErrorCode::invalid_type, "malformed Cartan matrix");
        if (cartan_[i][i] != 2)
            fail(ErrorCode::invalid_type, "diagonal Cartan entry must be 2");
        for (int j = 0; j < rank_; ++j) {
            if (i != j && (cartan_[i][j] > 0 || cartan_[i][j] < -3))
                fail(ErrorCode::invalid_type, "off-diagonal Cartan entry outside {0,-1,-2,-3}");
            // D*C symmetric
            if (sym_[i] * cartan_[i][j] != sym_[j] * cartan_[j][i])
                fail(ErrorCode::invalid_type, "D*C is not symmetric");
        }
    }
}

void CartanData::compute_inverse() {
    // Gauss-Jordan over exact rationals; C is invertible for finite type.
    int n = rank_;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = Rational(cartan_[i][j]);
        aug[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!aug[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0)
            fail(ErrorCode::invalid_type, "singular Cartan matrix");
        std::swap(aug[col], aug[pivot]);
        Rational p = aug[col][col];
        for (int j = 0; j < 2 * n; ++j)
            aug[col][j] = aug[col][j] / p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j)
                aug[r][j] -= f * aug[col][j];
        }
    }
    cartan_inverse_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cartan_inverse_[i][j] = aug[i][n + j];
}

void CartanData::compute_positive_roots() {
    // Reflection closure from the simple roots, keeping positive elements.
    // Self-validating: the final count must match the classical one.
    int n = rank_;
    std::set<std::vector<long long>> roots;
    std::vector<std::vector<long long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto rc = queue.back();
        queue.pop_back();
        for (int i = 1; i <= n; ++i) {
            // weight coordinate i of the root: (C*rc)_i
            long long wi = 0;
            for (int k = 0; k < n; ++k)
                wi += static_cast<long long>(cartan_[i - 1][k]) * rc[k];
            auto refl = rc;
            refl[i - 1] -= wi;
            bool positive = std::all_of(refl.begin(), refl.end(),
                                        [](long long c) { return c >= 0; });
            if (positive && roots.insert(refl).second)
                queue.push_back(refl);
        }
    }
    pos_roots_.assign(roots.begin(), roots.end());
    if (pos_roots_.size() != expected_positive_root_count(series_, rank_))
        fail(ErrorCode::invalid_type,
             "positive-root closure produced " + std::to_string(pos_roots_.size()) +
                 " roots for " + name());
}

std::vector<Weight> CartanData::positive_roots() const {
    std::vector<Weight> out;
    out.reserve(pos_roots_.size());
    for (const auto& rc : pos_roots_)
        out.push_back(root_to_weight(rc));
    return out;
}

Weight CartanData::fundamental_weight(int i) const {
    check_node(i);
    Weight w(static_cast<std::size_t>(rank_));
    w.coords[i - 1] = 1;
    return w;
}

Weight CartanData::simple_root(int i) const {
    check_node(i);
    Weight w(static_cast<std::size_t>(rank_));
    for (int j = 1; j <= rank_; ++j)
        w.coords[j - 1] = cartan_[j - 1][i - 1];
    return w;
}

Weight CartanData::root_to_weight(const std::vector<long long>& rc) const {
    Weight w(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
        long long acc = 0;
        for (int k = 0; k < rank_; ++k)
            acc = checked_add(acc, checked_mul(cartan_[j][k], rc[k]));
        w.coords[j] = acc;
    }
    return w;
}

namespace {

std::vector<std::vector<int>> path_matrix(int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    return c;
}

} // namespace

CartanData make_cartan(Series series, int rank) {
    int n = rank;
    switch (series) {
    case Series::A: {
        if (n < 1) fail(ErrorCode::invalid_type, "A_n requires n >= 1");
        return CartanData(series, n, path_matrix(n), std::vector<int>(n, 1));
    }
    case Series::B: {
        if (n < 2) fail(ErrorCode::invalid_type, "B_n requires n >= 2");
        auto c = path_matrix(n);
        c[n - 1][n - 2] = -2; // C_{n,n-1}
        std::vector<int> r(n, 2);
        r[n - 1] = 1;
        return CartanData(series, n, std::move(c), std::move(r));
    }
    case Series::C: {
        if (n < 2) fail(ErrorCode::invalid_type, "C_n requires n >= 2");
        auto c = path_matrix(n);
        c[n - 2][n - 1] = -2; // C_{n-1,n}
        std::vector<int> r(n, 1);
        r[n - 1] = 2;
        return CartanData(series, n, std::move(c), std::move(r));
    }
    case Series::D: {
        if (n < 4) fail(ErrorCode::invalid_type, "D_n requires n >= 4");
        auto c = path_matrix(n - 1); // path 1..n-2 plus node n-1 on n-2
        c.resize(n);
        for (auto& row : c) row.resize(n, 0);
        c[n - 1][n - 1] = 2;
        c[n - 3][n - 1] = -1; // both n-1 and n hang off n-2
        c[n - 1][n - 3] = -1;
        return CartanData(series, n, std::move(c), std::vector<int>(n, 1));
    }
    case Series::E: {
        if (n < 6 || n > 8) fail(ErrorCode::invalid_type, "E_n requires n in {6,7,8}");
        // Bourbaki numbering: chain 1-3-4-5-...-n, branch node 2 attached to 4.
        std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) c[i][i] = 2;
        auto link = [&](int a, int b) {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        };
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i) link(i, i + 1);
        return CartanData(series, n, std::move(c), std::vector<int>(n, 1));
    }
    case Series::F: {
        if (n != 4) fail(ErrorCode::invalid_type, "F_n requires n = 4");
        auto c = path_matrix(4);
        c[2][1] = -2; // C_{3,2}
        return CartanData(series, 4, std::move(c), std::vector<int>{2, 2, 1, 1});
    }
    case Series::G: {
        if (n != 2) fail(ErrorCode::invalid_type, "G_n requires n = 2");
        std::vector<std::vector<int>> c{{2, -1}, {-3, 2}};
        return CartanData(series, 2, std::move(c), std::vector<int>{3, 1});
    }
    }
    fail(ErrorCode::invalid_type, "unreachable series");
}

CartanData make_cartan(char series, int rank) {
    return make_cartan(series_from_char(series), rank);
}

Weight simple_reflection(const CartanData& cd, int i, const Weight& w) {
    cd.check_node(i);
    Weight out(w.coords.size());
    long long wi = w.coords[i - 1];
    for (int j = 1; j <= cd.rank(); ++j)
        out.coords[j - 1] = checked_sub(w.coords[j - 1], checked_mul(wi, cd.cartan(j, i)));
    return out;
}

std::vector<Rational> root_coordinates(const CartanData& cd, const Weight& w) {
    int n = cd.rank();
    std::vector<Rational> c(n);
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j)
            acc += cd.cartan_inverse_[i][j] * Rational(w.coords[j]);
        c[i] = acc;
    }
    return c;
}

bool in_root_lattice(const CartanData& cd, const Weight& w) {
    auto c = root_coordinates(cd, w);
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
}

std::size_t expected_positive_root_count(Series series, int rank) {
    std::size_t n = static_cast<std::size_t>(rank);
    switch (series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
    }
    return 0;
}

} // namespace krq
