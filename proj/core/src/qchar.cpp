#include "krq/qchar.hpp"

#include "krq/checked.hpp"

#include <algorithm>

namespace krq {

long long QCharacter::dimension() const {
    long long d = 0;
    for (const auto& [m, c] : terms_)
        d = checked_add(d, c);
    return d;
}

long long QCharacter::coefficient(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

QCharacter QCharacter::translated(int ds) const {
    TermMap out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
        out.emplace(m.translated(ds), c);
    return QCharacter(std::move(out), highest_.translated(ds));
}

std::vector<std::pair<YMonomial, long long>> QCharacter::sorted_terms() const {
    std::vector<std::pair<YMonomial, long long>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

QCharacter multiply(const QCharacter& a, const QCharacter& b) {
    QCharacter::TermMap out;
    out.reserve(a.terms().size() * std::min<std::size_t>(b.terms().size(), 4));
    // iterate over the smaller side in the inner loop for locality
    const QCharacter& outer = a.terms().size() >= b.terms().size() ? a : b;
    const QCharacter& inner = a.terms().size() >= b.terms().size() ? b : a;
    for (const auto& [ma, ca] : outer.terms()) {
        for (const auto& [mb, cb] : inner.terms()) {
            long long c = checked_mul(ca, cb);
            auto [it, fresh] = out.emplace(ma * mb, c);
            if (!fresh)
                it->second = checked_add(it->second, c);
        }
    }
    return QCharacter(std::move(out), a.highest() * b.highest());
}

std::vector<std::pair<YMonomial, long long>> dominant_monomials(const QCharacter& chi) {
    std::vector<std::pair<YMonomial, long long>> out;
    for (const auto& [m, c] : chi.terms())
        if (is_dominant(m))
            out.push_back({m, c});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_special(const QCharacter& chi) {
    auto dom = dominant_monomials(chi);
    return dom.size() == 1 && dom[0].second == 1 && dom[0].first == chi.highest();
}

} // namespace krq
