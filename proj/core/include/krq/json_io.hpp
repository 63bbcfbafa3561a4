#ifndef KRQ_JSON_IO_HPP
#define KRQ_JSON_IO_HPP

#include "krq/charring.hpp"
#include "krq/qchar.hpp"
#include "krq/report.hpp"

#include <string>
#include <utility>

namespace krq {

struct CacheMeta {
    char series = 'A';
    int rank = 0;
    int node = 0;
    long long k = 0;
    int format_version = 1;
};

inline constexpr int kCacheFormatVersion = 1;

// Canonical cache entry: terms sorted in canonical monomial order, each term
// [[ [i,s,e], ... ], mult] with factors node-major. Bit-exact and diffable.
std::string cache_entry_to_json(const CacheMeta& meta, const QCharacter& chi);
std::pair<CacheMeta, QCharacter> cache_entry_from_json(const std::string& text);

// {lhs_terms, rhs_terms, equal, mismatches:[{monomial,lhs,rhs}...]}.
// Timing is opt-in so that repeated runs emit byte-identical reports.
std::string verify_report_to_json(const VerifyReport& report, bool include_timing = false);

// [[ [coords...], coeff ], ...] sorted by weight.
std::string character_to_json(const Character& chi);

// FNV-1a 64 hex digest; used by cache admin listings.
std::string fnv1a_hex(const std::string& bytes);

} // namespace krq

#endif
