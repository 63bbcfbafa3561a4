#include "krq/fm.hpp"

#include "krq/checked.hpp"
#include "krq/sl2.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace krq {

FmReport fm_qchar(const CartanData& cd, const YMonomial& m_plus, const Caps& caps) {
    if (!is_dominant(m_plus))
        fail(ErrorCode::not_i_dominant, "fm_qchar requires a dominant monomial");
    if (caps.max_depth <= 0 || caps.max_monomials <= 0)
        fail(ErrorCode::bad_range, "caps must be positive");

    const int n = cd.rank();

    QCharacter::TermMap finalized;                       // nonzero coefficients
    std::unordered_set<YMonomial, YMonomialHash> seen;   // finalized or settled to zero
    // demand[i] = sum over peeled i-dominant heads h of lambda_i(h) * L_i(h),
    // minus entries already consumed.
    std::vector<QCharacter::TermMap> demand(static_cast<std::size_t>(n) + 1);
    std::map<long long, std::vector<YMonomial>> pending; // depth -> demanded monomials
    long long pending_count = 0;
    long long depth_reached = 0;

    auto consume = [](QCharacter::TermMap& d, const YMonomial& m) -> long long {
        auto it = d.find(m);
        if (it == d.end())
            return 0;
        long long v = it->second;
        d.erase(it);
        return v;
    };

    // Peel a monomial that has just been settled with coefficient coeff:
    // for every direction in which it is i-dominant it heads a new string
    // family with lambda = coeff - (already demanded part).
    auto peel = [&](const YMonomial& head, long long coeff, long long depth) {
        for (int i = 1; i <= n; ++i) {
            if (!is_i_dominant(head, i))
                continue;
            long long served = consume(demand[static_cast<std::size_t>(i)], head);
            long long lambda = checked_sub(coeff, served);
            if (lambda < 0)
                fail(ErrorCode::inconsistent,
                     "negative string multiplicity at " + head.to_string() +
                         " in direction " + std::to_string(i));
            if (lambda == 0)
                continue;
            QCharacter lifted = lift_L(cd, i, head);
            auto& di = demand[static_cast<std::size_t>(i)];
            for (const auto& [mm, cc] : lifted.terms()) {
                if (mm == head)
                    continue;
                long long add = checked_mul(lambda, cc);
                auto [it, fresh] = di.emplace(mm, add);
                if (!fresh)
                    it->second = checked_add(it->second, add);
                if (!seen.count(mm)) {
                    // depth of a lift term = head depth + number of A-factors;
                    // every factor lowers omega by one alpha_i.
                    auto rc = root_coordinates(cd, omega(cd, head * mm.inverse()));
                    long long dd = depth;
                    for (const auto& x : rc)
                        dd = checked_add(dd, x.to_integer());
                    pending[dd].push_back(mm);
                    ++pending_count;
                }
            }
        }
    };

    finalized[m_plus] = 1;
    seen.insert(m_plus);
    peel(m_plus, 1, 0);

    while (!pending.empty()) {
        auto bucket = pending.begin();
        long long depth = bucket->first;
        std::vector<YMonomial> batch = std::move(bucket->second);
        pending.erase(bucket);
        pending_count -= static_cast<long long>(batch.size());
        if (depth > caps.max_depth)
            fail(ErrorCode::depth_cap_exceeded,
                 "saturation depth " + std::to_string(depth) + " exceeds cap");
        depth_reached = depth;
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());

        for (const auto& mono : batch) {
            if (seen.count(mono))
                continue;
            seen.insert(mono);
            if (is_dominant(mono))
                fail(ErrorCode::not_special,
                     "second dominant monomial " + mono.to_string() + " at depth " +
                         std::to_string(depth));
            bool have = false;
            long long value = 0;
            for (int i = 1; i <= n; ++i) {
                if (is_i_dominant(mono, i))
                    continue;
                long long c = consume(demand[static_cast<std::size_t>(i)], mono);
                if (!have) {
                    value = c;
                    have = true;
                } else if (c != value) {
                    fail(ErrorCode::inconsistent,
                         "directional demands disagree at " + mono.to_string() + ": " +
                             std::to_string(value) + " vs " + std::to_string(c));
                }
            }
            if (value != 0)
                finalized[mono] = value;
            if (static_cast<long long>(finalized.size()) + pending_count >
                caps.max_monomials)
                fail(ErrorCode::monomial_cap_exceeded, "monomial cap exceeded");
            peel(mono, value, depth);
        }
    }

    FmReport report;
    report.qchar = QCharacter(std::move(finalized), m_plus);
    report.depth_reached = depth_reached;
    report.monomial_count = static_cast<long long>(report.qchar.term_count());
    report.special = is_special(report.qchar);
    return report;
}

} // namespace krq
