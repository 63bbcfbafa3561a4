#include "krq/systems.hpp"

#include "krq/checked.hpp"

#include <algorithm>
#include <chrono>

namespace krq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void sort_factors(KrFactorList& fs) {
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const KrFactor& f) { return f.k == 0; }),
             fs.end());
    std::sort(fs.begin(), fs.end(), [](const KrFactor& a, const KrFactor& b) {
        return std::tie(a.node, a.offset, a.k) < std::tie(b.node, b.offset, b.k);
    });
}

// Exact term-map comparison; mismatches sorted canonically.
template <typename Map, typename ToString>
VerifyReport compare_maps(const Map& lhs, const Map& rhs, ToString to_string) {
    VerifyReport report;
    report.lhs_terms = static_cast<long long>(lhs.size());
    report.rhs_terms = static_cast<long long>(rhs.size());
    std::vector<std::pair<typename Map::key_type, std::pair<long long, long long>>> diff;
    for (const auto& [key, c] : lhs) {
        auto it = rhs.find(key);
        long long rc = it == rhs.end() ? 0 : it->second;
        if (c != rc)
            diff.push_back({key, {c, rc}});
    }
    for (const auto& [key, c] : rhs) {
        if (!lhs.count(key))
            diff.push_back({key, {0, c}});
    }
    std::sort(diff.begin(), diff.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, lr] : diff)
        report.mismatches.push_back({to_string(key), lr.first, lr.second});
    report.equal = report.mismatches.empty();
    return report;
}

void add_into(QCharacter::TermMap& acc, const QCharacter::TermMap& other) {
    for (const auto& [m, c] : other) {
        auto [it, fresh] = acc.emplace(m, c);
        if (!fresh) {
            it->second = checked_add(it->second, c);
            if (it->second == 0)
                acc.erase(it);
        }
    }
}

// M A^{-1}_{i,s+r_i(2k-1)} ... A^{-1}_{i,s+r_i}: highest monomial of the
// S-module product.
YMonomial s_highest(const CartanData& cd, int i, long long k, int s) {
    int r = cd.sym(i);
    YMonomial m = kr_monomial(cd, i, s, k) * kr_monomial(cd, i, s + 2 * r, k);
    for (long long t = 1; t <= k; ++t)
        m = m * a_monomial(cd, i, s + static_cast<int>(r * (2 * t - 1))).inverse();
    return m;
}

} // namespace

KrFactorList s_factors(const CartanData& cd, int i, long long k, int s) {
    cd.check_node(i);
    if (k < 1)
        fail(ErrorCode::negative_length, "S factors require k >= 1");
    const int ri = cd.sym(i);
    KrFactorList out;
    if (ri >= 2) {
        for (int j = 1; j <= cd.rank(); ++j) {
            if (j == i) continue;
            if (cd.cartan(j, i) == -1)
                out.push_back({j, k, s + ri});
            else if (cd.cartan(j, i) <= -2)
                out.push_back({j, ri * k, s + 1});
        }
    } else if (cd.series() == Series::G) {
        // short node of G2; j is the other node
        int j = (i == 1) ? 2 : 1;
        long long r = k / 3;
        switch (k % 3) {
        case 0:
            out = {{j, r, s + 1}, {j, r, s + 3}, {j, r, s + 5}};
            break;
        case 1:
            out = {{j, r + 1, s + 1}, {j, r, s + 3}, {j, r, s + 5}};
            break;
        default:
            out = {{j, r + 1, s + 1}, {j, r + 1, s + 3}, {j, r, s + 5}};
            break;
        }
    } else {
        long long r = k / 2;
        for (int j = 1; j <= cd.rank(); ++j) {
            if (j == i) continue;
            if (cd.cartan(i, j) == -1) {
                out.push_back({j, k, s + 1});
            } else if (cd.cartan(i, j) == -2) {
                if (k % 2 == 0) {
                    out.push_back({j, r, s + 1});
                    out.push_back({j, r, s + 3});
                } else {
                    out.push_back({j, r + 1, s + 1});
                    out.push_back({j, r, s + 3});
                }
            }
        }
    }
    sort_factors(out);
    return out;
}

KrFactorList r_factors(const CartanData& cd, int i, long long k) {
    KrFactorList out = s_factors(cd, i, k, 0);
    for (auto& f : out)
        f.offset = 0;
    sort_factors(out);
    return out;
}

QCharacter kr_product(const CartanData& cd, KrCache& cache, const KrFactorList& factors,
                      const Caps& caps) {
    QCharacter acc(YMonomial::one());
    for (const auto& f : factors)
        acc = multiply(acc, cache.kr(cd, f.node, f.offset, f.k, caps));
    return acc;
}

VerifyReport verify_t_system(const CartanData& cd, KrCache& cache, int i, long long k,
                             int s, const Caps& caps) {
    cd.check_node(i);
    if (k < 1)
        fail(ErrorCode::negative_length, "T-system requires k >= 1");
    auto t0 = Clock::now();
    const int shift = 2 * cd.sym(i);

    QCharacter lhs = multiply(cache.kr(cd, i, s, k, caps),
                              cache.kr(cd, i, s + shift, k, caps));
    QCharacter top = multiply(cache.kr(cd, i, s, k + 1, caps),
                              cache.kr(cd, i, s + shift, k - 1, caps));
    QCharacter smod = kr_product(cd, cache, s_factors(cd, i, k, s), caps);

    QCharacter::TermMap rhs = top.terms();
    add_into(rhs, smod.terms());

    VerifyReport report = compare_maps(lhs.terms(), rhs,
                                       [](const YMonomial& m) { return m.to_string(); });
    report.elapsed_ms = ms_since(t0);
    return report;
}

std::pair<std::vector<std::pair<YMonomial, long long>>,
          std::vector<std::pair<YMonomial, long long>>>
dominant_ledger(const CartanData& cd, KrCache& cache, int i, long long k, int s,
                const Caps& caps) {
    cd.check_node(i);
    if (k < 1)
        fail(ErrorCode::negative_length, "dominant ledger requires k >= 1");
    const int shift = 2 * cd.sym(i);
    QCharacter side1 = multiply(cache.kr(cd, i, s, k, caps),
                                cache.kr(cd, i, s + shift, k, caps));
    QCharacter side2 = multiply(cache.kr(cd, i, s, k + 1, caps),
                                cache.kr(cd, i, s + shift, k - 1, caps));
    return {dominant_monomials(side1), dominant_monomials(side2)};
}

bool verify_s_special(const CartanData& cd, KrCache& cache, int i, long long k, int s,
                      const Caps& caps) {
    QCharacter smod = kr_product(cd, cache, s_factors(cd, i, k, s), caps);
    auto dom = dominant_monomials(smod);
    return dom.size() == 1 && dom[0].second == 1 && dom[0].first == s_highest(cd, i, k, s);
}

VerifyReport verify_q_system(const CartanData& cd, KrCache& cache, int i, long long k,
                             const Caps& caps) {
    cd.check_node(i);
    if (k < 1)
        fail(ErrorCode::negative_length, "Q-system requires k >= 1");
    auto t0 = Clock::now();

    auto q = [&](int node, long long kk) {
        return restrict_qchar(cd, cache.kr(cd, node, 0, kk, caps));
    };

    Character lhs_char = q(i, k) * q(i, k);
    Character rhs_char = q(i, k + 1) * q(i, k - 1);
    Character rmod = Character::unit(cd.rank());
    for (const auto& f : r_factors(cd, i, k))
        rmod = rmod * q(f.node, f.k);
    rhs_char = rhs_char + rmod;

    VerifyReport report = compare_maps(lhs_char.terms(), rhs_char.terms(),
                                       [](const Weight& w) { return w.to_string(); });
    report.elapsed_ms = ms_since(t0);
    return report;
}

bool limit_stabilization(const CartanData& cd, KrCache& cache, int i, long long depth,
                         const std::vector<long long>& k_range, const Caps& caps) {
    cd.check_node(i);
    if (depth < 1)
        fail(ErrorCode::bad_range, "stabilization depth must be >= 1");
    if (k_range.size() < 2)
        fail(ErrorCode::bad_range, "k_range needs at least two values");
    for (long long k : k_range)
        if (k < depth)
            fail(ErrorCode::bad_range, "k_range values must be >= depth");

    const int r = cd.sym(i);
    bool first = true;
    std::unordered_map<AVector, long long, AVectorHash> reference;
    for (long long k : k_range) {
        int s = static_cast<int>(-2 * r * k);
        QCharacter chi = cache.kr(cd, i, s, k, caps);
        std::unordered_map<AVector, long long, AVectorHash> truncated;
        for (const auto& [m, c] : chi.terms()) {
            auto v = factor_over_A(cd, m, chi.highest());
            if (!v)
                fail(ErrorCode::inconsistent,
                     "KR monomial not below the highest weight: " + m.to_string());
            if (v->depth() <= depth)
                truncated[*v] = c;
        }
        if (first) {
            reference = std::move(truncated);
            first = false;
        } else if (truncated != reference) {
            return false;
        }
    }
    return true;
}

} // namespace krq
