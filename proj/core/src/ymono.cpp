#include "krq/ymono.hpp"

#include "krq/checked.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace krq {

namespace {

inline std::tuple<int, int, long long> as_tuple(const YMonomial::Factor& f) {
    return {f.node, f.offset, f.exp};
}

std::size_t fnv_words(std::size_t seed, const long long* words, std::size_t count) {
    std::size_t h = seed;
    for (std::size_t w = 0; w < count; ++w) {
        auto u = static_cast<unsigned long long>(words[w]);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

} // namespace

YMonomial YMonomial::variable(int node, int offset, long long exp) {
    YMonomial m;
    if (exp != 0)
        m.factors_.push_back({node, offset, exp});
    return m;
}

YMonomial YMonomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        return std::pair(a.node, a.offset) < std::pair(b.node, b.offset);
    });
    YMonomial m;
    m.factors_.reserve(factors.size());
    for (const auto& f : factors) {
        if (!m.factors_.empty() && m.factors_.back().node == f.node &&
            m.factors_.back().offset == f.offset) {
            m.factors_.back().exp = checked_add(m.factors_.back().exp, f.exp);
            if (m.factors_.back().exp == 0)
                m.factors_.pop_back();
        } else if (f.exp != 0) {
            m.factors_.push_back(f);
        }
    }
    return m;
}

long long YMonomial::exponent(int node, int offset) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair(node, offset),
                               [](const Factor& f, const std::pair<int, int>& key) {
                                   return std::pair(f.node, f.offset) < key;
                               });
    if (it != factors_.end() && it->node == node && it->offset == offset)
        return it->exp;
    return 0;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && std::pair(a->node, a->offset) < std::pair(b->node, b->offset))) {
            out.factors_.push_back(*a++);
        } else if (a == ae || std::pair(b->node, b->offset) < std::pair(a->node, a->offset)) {
            out.factors_.push_back(*b++);
        } else {
            long long e = checked_add(a->exp, b->exp);
            if (e != 0)
                out.factors_.push_back({a->node, a->offset, e});
            ++a;
            ++b;
        }
    }
    return out;
}

YMonomial YMonomial::inverse() const {
    YMonomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& f : factors_)
        out.factors_.push_back({f.node, f.offset, checked_neg(f.exp)});
    return out;
}

YMonomial YMonomial::pow(long long e) const {
    if (e == 0)
        return YMonomial();
    YMonomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& f : factors_)
        out.factors_.push_back({f.node, f.offset, checked_mul(f.exp, e)});
    return out;
}

YMonomial YMonomial::translated(int ds) const {
    YMonomial out;
    out.factors_.reserve(factors_.size());
    for (const auto& f : factors_)
        out.factors_.push_back({f.node, f.offset + ds, f.exp});
    return out;
}

int YMonomial::max_offset() const {
    if (factors_.empty())
        fail(ErrorCode::identity_monomial, "max_offset undefined for the monomial 1");
    int best = factors_.front().offset;
    for (const auto& f : factors_)
        best = std::max(best, f.offset);
    return best;
}

bool YMonomial::operator<(const YMonomial& o) const {
    return std::lexicographical_compare(
        factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(),
        [](const Factor& a, const Factor& b) { return as_tuple(a) < as_tuple(b); });
}

std::size_t YMonomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& f : factors_) {
        long long words[3] = {f.node, f.offset, f.exp};
        h = fnv_words(h, words, 3);
    }
    return h;
}

std::string YMonomial::to_string() const {
    if (factors_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << " * ";
        first = false;
        os << "Y[" << f.node << "," << f.offset << "]^" << f.exp;
    }
    return os.str();
}

AVector AVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::pair(a.node, a.offset) < std::pair(b.node, b.offset);
    });
    AVector v;
    v.entries_.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.count <= 0)
            fail(ErrorCode::non_positive_multiplicity, "AVector entries must be positive");
        if (!v.entries_.empty() && v.entries_.back().node == e.node &&
            v.entries_.back().offset == e.offset)
            v.entries_.back().count = checked_add(v.entries_.back().count, e.count);
        else
            v.entries_.push_back(e);
    }
    return v;
}

long long AVector::depth() const {
    long long d = 0;
    for (const auto& e : entries_)
        d = checked_add(d, e.count);
    return d;
}

AVector AVector::translated(int ds) const {
    AVector out;
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_)
        out.entries_.push_back({e.node, e.offset + ds, e.count});
    return out;
}

void AVector::add(int node, int offset, long long count) {
    if (count <= 0)
        fail(ErrorCode::non_positive_multiplicity, "AVector entries must be positive");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(node, offset),
                               [](const Entry& e, const std::pair<int, int>& key) {
                                   return std::pair(e.node, e.offset) < key;
                               });
    if (it != entries_.end() && it->node == node && it->offset == offset)
        it->count = checked_add(it->count, count);
    else
        entries_.insert(it, {node, offset, count});
}

std::size_t AVector::hash() const {
    std::size_t h = 1099511628211ull;
    for (const auto& e : entries_) {
        long long words[3] = {e.node, e.offset, e.count};
        h = fnv_words(h, words, 3);
    }
    return h;
}

std::string AVector::to_string() const {
    if (entries_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << " * ";
        first = false;
        os << "A[" << e.node << "," << e.offset << "]^-" << e.count;
    }
    return os.str();
}

YMonomial a_monomial(const CartanData& cd, int i, int s) {
    cd.check_node(i);
    int ri = cd.sym(i);
    std::vector<YMonomial::Factor> fs;
    fs.push_back({i, s - ri, 1});
    fs.push_back({i, s + ri, 1});
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j == i) continue;
        switch (cd.cartan(j, i)) {
        case -1:
            fs.push_back({j, s, -1});
            break;
        case -2:
            fs.push_back({j, s - 1, -1});
            fs.push_back({j, s + 1, -1});
            break;
        case -3:
            fs.push_back({j, s - 2, -1});
            fs.push_back({j, s, -1});
            fs.push_back({j, s + 2, -1});
            break;
        default:
            break;
        }
    }
    return YMonomial::from_factors(std::move(fs));
}

YMonomial kr_monomial(const CartanData& cd, int i, int s, long long k) {
    cd.check_node(i);
    if (k < 0)
        fail(ErrorCode::negative_length, "KR length k must be >= 0");
    int ri = cd.sym(i);
    std::vector<YMonomial::Factor> fs;
    fs.reserve(static_cast<std::size_t>(k));
    for (long long t = 0; t < k; ++t)
        fs.push_back({i, s + static_cast<int>(2 * ri * t), 1});
    return YMonomial::from_factors(std::move(fs));
}

bool is_dominant(const YMonomial& m) {
    return std::all_of(m.factors().begin(), m.factors().end(),
                       [](const YMonomial::Factor& f) { return f.exp >= 0; });
}

bool is_i_dominant(const YMonomial& m, int i) {
    for (const auto& f : m.factors())
        if (f.node == i && f.exp < 0)
            return false;
    return true;
}

bool is_j_dominant(const YMonomial& m, const std::vector<int>& nodes) {
    return std::all_of(nodes.begin(), nodes.end(),
                       [&](int i) { return is_i_dominant(m, i); });
}

bool is_right_negative(const YMonomial& m) {
    if (m.is_one())
        fail(ErrorCode::identity_monomial, "right-negativity undefined for the monomial 1");
    int top = m.max_offset();
    for (const auto& f : m.factors())
        if (f.offset == top && f.exp > 0)
            return false;
    return true;
}

YMonomial apply_a_inverse(const CartanData& cd, const YMonomial& m, const AVector& v) {
    YMonomial out = m;
    for (const auto& e : v.entries())
        out = out * a_monomial(cd, e.node, e.offset).pow(checked_neg(e.count));
    return out;
}

std::optional<AVector> factor_over_A(const CartanData& cd, const YMonomial& m,
                                     const YMonomial& m_prime) {
    // Back-substitution from the largest offset downward. At the top offset L
    // only A_{i,L-r_i} factors can contribute (the Y_{i,s+r_i} occurrence is
    // strictly above every other variable of A_{i,s}), so each step is forced.
    YMonomial ratio = m * m_prime.inverse();
    int n = cd.rank();

    // omega(ratio) must be -sum v_i alpha_i with v_i nonnegative integers;
    // the per-node budgets also bound the loop.
    auto rc = root_coordinates(cd, omega(ratio, n));
    std::vector<long long> budget(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!rc[i].is_integer() || rc[i].num() > 0)
            return std::nullopt;
        budget[i] = -rc[i].to_integer();
    }

    std::map<std::pair<int, int>, long long> rem; // (offset, node) -> exponent
    for (const auto& f : ratio.factors())
        rem[{f.offset, f.node}] = f.exp;

    auto bump = [&](int node, int offset, long long delta) {
        auto key = std::pair(offset, node);
        long long v = checked_add(rem[key], delta);
        if (v == 0)
            rem.erase(key);
        else
            rem[key] = v;
    };

    AVector result;
    std::vector<long long> assigned(static_cast<std::size_t>(n), 0);
    while (!rem.empty()) {
        int top = rem.rbegin()->first.first;
        // Collect the nodes present at the top offset before mutating.
        std::vector<std::pair<int, long long>> at_top;
        for (auto it = rem.rbegin(); it != rem.rend() && it->first.first == top; ++it)
            at_top.push_back({it->first.second, it->second});
        for (auto [i, u] : at_top) {
            if (u > 0)
                return std::nullopt; // positive exponent at the top: not a product of A^{-1}
            long long count = -u;
            assigned[i - 1] = checked_add(assigned[i - 1], count);
            if (assigned[i - 1] > budget[i - 1])
                return std::nullopt;
            int base = top - cd.sym(i);
            result.add(i, base, count);
            // Divide by A_{i,base}^{-count}: add count * (exponents of A_{i,base}).
            for (const auto& f : a_monomial(cd, i, base).factors())
                bump(f.node, f.offset, checked_mul(f.exp, count));
        }
    }
    for (int i = 0; i < n; ++i)
        if (assigned[i] != budget[i])
            return std::nullopt;
    return result;
}

Weight omega(const YMonomial& m, int rank) {
    Weight w(static_cast<std::size_t>(rank));
    for (const auto& f : m.factors()) {
        if (f.node < 1 || f.node > rank)
            fail(ErrorCode::index_out_of_range, "monomial node outside rank");
        w.coords[f.node - 1] = checked_add(w.coords[f.node - 1], f.exp);
    }
    return w;
}

Weight omega(const CartanData& cd, const YMonomial& m) {
    return omega(m, cd.rank());
}

} // namespace krq
