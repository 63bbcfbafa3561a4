#include "krq/sl2.hpp"

#include "krq/checked.hpp"
#include "krq/rational.hpp"

#include <algorithm>

namespace krq {

namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::vector<Sl2String> normal_writing(const std::map<int, long long>& mult_by_offset,
                                      int step) {
    if (step <= 0)
        fail(ErrorCode::bad_range, "string step must be positive");
    std::vector<Sl2String> out;
    if (mult_by_offset.empty())
        return out;
    long long max_mult = 0;
    int residue = floor_mod(mult_by_offset.begin()->first, step);
    for (const auto& [s, mult] : mult_by_offset) {
        if (mult <= 0)
            fail(ErrorCode::non_positive_multiplicity, "offset multiplicities must be positive");
        if (floor_mod(s, step) != residue)
            fail(ErrorCode::bad_range, "offsets not congruent mod step");
        max_mult = std::max(max_mult, mult);
    }
    // Level decomposition: at each multiplicity threshold, emit the maximal
    // consecutive runs. Any two output strings are nested-or-equal or
    // separated by a missing lattice point, hence never in special position.
    for (long long level = 1; level <= max_mult; ++level) {
        int run_start = 0;
        long long run_len = 0;
        int prev = 0;
        for (const auto& [s, mult] : mult_by_offset) {
            if (mult < level)
                continue;
            if (run_len > 0 && s == prev + step) {
                ++run_len;
            } else {
                if (run_len > 0)
                    out.push_back({run_start, run_len});
                run_start = s;
                run_len = 1;
            }
            prev = s;
        }
        if (run_len > 0)
            out.push_back({run_start, run_len});
    }
    return out;
}

bool in_special_position(const Sl2String& a, const Sl2String& b, int step) {
    if (floor_mod(a.start, step) != floor_mod(b.start, step))
        return false; // union can never be a single string
    int lo = std::min(a.start, b.start);
    long long a_end = a.start + step * (a.length - 1);
    long long b_end = b.start + step * (b.length - 1);
    long long hi = std::max(a_end, b_end);
    // union is a run iff there is no gap between the two supports
    bool contiguous = a.start <= b_end + step && b.start <= a_end + step;
    if (!contiguous)
        return false;
    Sl2String merged{lo, (hi - lo) / step + 1};
    return !(merged == a) && !(merged == b);
}

QCharacter sl2_kr_qchar(int r, int s, long long k) {
    if (k < 0)
        fail(ErrorCode::negative_length, "KR length k must be >= 0");
    if (r <= 0)
        fail(ErrorCode::bad_range, "symmetrizer r must be positive");
    std::vector<YMonomial::Factor> hw;
    for (long long t = 0; t < k; ++t)
        hw.push_back({1, s + static_cast<int>(2 * r * t), 1});
    YMonomial highest = YMonomial::from_factors(std::move(hw));
    QCharacter::TermMap terms;
    YMonomial cur = highest;
    terms[cur] = 1;
    for (long long t = k; t >= 1; --t) {
        int c = s + static_cast<int>(r * (2 * t - 1));
        // divide by the rank-one A_c = Y_{c-r} Y_{c+r}
        cur = cur * YMonomial::variable(1, c - r, -1) * YMonomial::variable(1, c + r, -1);
        terms[cur] = 1;
    }
    return QCharacter(std::move(terms), std::move(highest));
}

QCharacter lift_L(const CartanData& cd, int i, const YMonomial& m) {
    cd.check_node(i);
    if (!is_i_dominant(m, i))
        fail(ErrorCode::not_i_dominant, "lift_L requires an i-dominant monomial");
    int step = 2 * cd.sym(i);
    // split the i-part into congruence classes mod 2 r_i
    std::map<int, std::map<int, long long>> classes;
    for (const auto& f : m.factors())
        if (f.node == i && f.exp > 0)
            classes[floor_mod(f.offset, step)][f.offset] = f.exp;

    std::vector<Sl2String> strings;
    for (const auto& [res, mu] : classes) {
        auto part = normal_writing(mu, step);
        strings.insert(strings.end(), part.begin(), part.end());
    }

    // Per string, the suffix products of full A_{i,c}^{-1} from the top down.
    std::vector<std::vector<YMonomial>> suffix;
    suffix.reserve(strings.size());
    for (const auto& str : strings) {
        std::vector<YMonomial> sp;
        sp.reserve(static_cast<std::size_t>(str.length) + 1);
        sp.push_back(YMonomial::one());
        for (long long t = str.length; t >= 1; --t) {
            int c = str.start + static_cast<int>(cd.sym(i) * (2 * t - 1));
            sp.push_back(sp.back() * a_monomial(cd, i, c).inverse());
        }
        suffix.push_back(std::move(sp));
    }

    QCharacter::TermMap acc;
    acc[YMonomial::one()] = 1;
    for (const auto& sp : suffix) {
        QCharacter::TermMap next;
        next.reserve(acc.size() * sp.size());
        for (const auto& [mono, c] : acc) {
            for (const auto& tail : sp) {
                auto [it, fresh] = next.emplace(mono * tail, c);
                if (!fresh)
                    it->second = checked_add(it->second, c);
            }
        }
        acc = std::move(next);
    }

    QCharacter::TermMap terms;
    terms.reserve(acc.size());
    for (const auto& [mono, c] : acc)
        terms.emplace(m * mono, c);
    return QCharacter(std::move(terms), m);
}

std::vector<std::pair<YMonomial, long long>> i_decompose(const CartanData& cd, int i,
                                                         const QCharacter& chi) {
    cd.check_node(i);
    // Order by decreasing omega-height (sum of root coordinates of omega);
    // heads can only feed strictly lower monomials, so this order peels the
    // unique decomposition.
    struct Item {
        Rational degree;
        YMonomial mono;
    };
    std::vector<Item> order;
    order.reserve(chi.terms().size());
    for (const auto& [m, c] : chi.terms()) {
        (void)c;
        auto rc = root_coordinates(cd, omega(cd, m));
        Rational deg(0);
        for (const auto& x : rc)
            deg += x;
        order.push_back({deg, m});
    }
    std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
        if (a.degree != b.degree)
            return b.degree < a.degree;
        return a.mono < b.mono;
    });

    QCharacter::TermMap residual = chi.terms();
    std::vector<std::pair<YMonomial, long long>> result;
    for (const auto& item : order) {
        auto it = residual.find(item.mono);
        if (it == residual.end() || it->second == 0)
            continue;
        if (!is_i_dominant(item.mono, i))
            continue; // checked in the final sweep
        long long c = it->second;
        if (c < 0)
            fail(ErrorCode::negative_residual,
                 "negative multiplicity for " + item.mono.to_string());
        result.push_back({item.mono, c});
        for (const auto& [mm, cc] : lift_L(cd, i, item.mono).terms()) {
            auto [jt, fresh] = residual.emplace(mm, 0);
            (void)fresh;
            jt->second = checked_sub(jt->second, checked_mul(c, cc));
            if (jt->second == 0)
                residual.erase(jt);
        }
    }
    for (const auto& [m, c] : residual) {
        if (c == 0)
            continue;
        if (is_i_dominant(m, i))
            fail(ErrorCode::negative_residual,
                 "negative multiplicity for " + m.to_string());
        fail(ErrorCode::non_zero_remainder,
             "unaccounted monomial " + m.to_string());
    }
    return result;
}

} // namespace krq
