#include "krq/fermionic.hpp"

#include "krq/checked.hpp"
#include "krq/systems.hpp"

#include <chrono>
#include <functional>

namespace krq {

void LevelVector::add(int i, long long k, long long value) {
    if (k < 1)
        fail(ErrorCode::bad_range, "levels are indexed from 1");
    if (value < 0)
        fail(ErrorCode::non_positive_multiplicity, "level entries must be >= 0");
    if (value == 0)
        return;
    entries[{i, k}] += value;
}

long long gen_binomial(long long a, long long b) {
    if (b < 0)
        fail(ErrorCode::negative_b, "binomial lower index must be >= 0");
    long long c = 1;
    for (long long t = 1; t <= b; ++t) {
        __int128 num = static_cast<__int128>(c) * (a - t + 1);
        // the running value is itself a generalized binomial, so division is exact
        __int128 q = num / t;
        if (q > static_cast<__int128>(__INT64_MAX__) ||
            q < -static_cast<__int128>(__INT64_MAX__) - 1)
            fail(ErrorCode::arithmetic_overflow, "binomial overflow");
        c = static_cast<long long>(q);
    }
    return c;
}

long long p_quantity(const CartanData& cd, const NuSpec& nu, const NVector& N, int i,
                     long long k) {
    cd.check_node(i);
    if (k < 1)
        fail(ErrorCode::negative_length, "vacancy number requires k >= 1");
    Rational acc(0);
    for (const auto& [key, mult] : nu.entries) {
        if (key.first != i)
            continue;
        acc += Rational(checked_mul(mult, std::min(k, key.second)));
    }
    long long ri = cd.sym(i);
    for (const auto& [key, count] : N.entries) {
        int j = key.first;
        long long l = key.second;
        int cij = cd.cartan(i, j);
        if (cij == 0)
            continue;
        Rational lhs(k, cd.sym(j));
        Rational rhs(l, ri);
        Rational mn = lhs < rhs ? lhs : rhs;
        acc -= Rational(checked_mul(count, checked_mul(ri, cij))) * mn;
    }
    return acc.to_integer(); // faults with non_integral_p on a convention bug
}

Character fermionic_sum(const CartanData& cd, const NuSpec& nu, long long D) {
    if (D < 0)
        fail(ErrorCode::bad_range, "truncation degree must be >= 0");
    const int n = cd.rank();
    std::vector<std::pair<int, long long>> vars; // (node j, level l), l <= D
    for (int j = 1; j <= n; ++j)
        for (long long l = 1; l <= D; ++l)
            vars.push_back({j, l});

    Character out;
    NVector N;
    std::function<void(std::size_t, long long)> enumerate = [&](std::size_t idx,
                                                                long long budget) {
        if (idx == vars.size()) {
            long long coeff = 1;
            Weight w(static_cast<std::size_t>(n));
            for (const auto& [key, count] : N.entries) {
                auto [j, l] = key;
                long long p = p_quantity(cd, nu, N, j, l);
                coeff = checked_mul(coeff, gen_binomial(checked_add(p, count), count));
                if (coeff == 0)
                    return;
                w = w - cd.simple_root(j).scaled(checked_mul(l, count));
            }
            out.add_term(w, coeff);
            return;
        }
        auto [j, l] = vars[idx];
        for (long long count = 0; count * l <= budget; ++count) {
            if (count > 0)
                N.entries[{j, l}] = count;
            enumerate(idx + 1, budget - count * l);
        }
        N.entries.erase({j, l});
    };
    enumerate(0, D);
    return out;
}

Character q_nu(const CartanData& cd, KrCache& cache, const NuSpec& nu, const Caps& caps) {
    Character acc = Character::unit(cd.rank());
    for (const auto& [key, mult] : nu.entries) {
        auto [i, k] = key;
        Character factor = normalize(restrict_qchar(cd, cache.kr(cd, i, 0, k, caps)),
                                     cd.fundamental_weight(i).scaled(k));
        for (long long t = 0; t < mult; ++t)
            acc = acc * factor;
    }
    return acc;
}

VerifyReport verify_kr_formula(const CartanData& cd, KrCache& cache, const NuSpec& nu,
                               long long D, const Caps& caps) {
    if (D < 1)
        fail(ErrorCode::bad_range, "verification degree must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    Character lhs = truncate(cd, q_nu(cd, cache, nu, caps) * delta_product(cd), D);
    Character rhs = fermionic_sum(cd, nu, D);
    VerifyReport report = compare_characters(lhs, rhs);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

} // namespace krq
