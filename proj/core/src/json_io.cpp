#include "krq/json_io.hpp"

#include "krq/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace krq {

using nlohmann::json;

std::string cache_entry_to_json(const CacheMeta& meta, const QCharacter& chi) {
    json j;
    j["meta"] = {{"series", std::string(1, meta.series)},
                 {"rank", meta.rank},
                 {"node", meta.node},
                 {"k", meta.k},
                 {"format_version", meta.format_version}};
    json terms = json::array();
    for (const auto& [m, c] : chi.sorted_terms()) {
        json factors = json::array();
        for (const auto& f : m.factors())
            factors.push_back({f.node, f.offset, f.exp});
        terms.push_back({factors, c});
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

std::pair<CacheMeta, QCharacter> cache_entry_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::io_error, std::string("unparseable cache entry: ") + e.what());
    }
    try {
        CacheMeta meta;
        const auto& jm = j.at("meta");
        meta.series = jm.at("series").get<std::string>().at(0);
        meta.rank = jm.at("rank").get<int>();
        meta.node = jm.at("node").get<int>();
        meta.k = jm.at("k").get<long long>();
        meta.format_version = jm.at("format_version").get<int>();
        if (meta.format_version != kCacheFormatVersion)
            fail(ErrorCode::io_error, "unsupported cache format version");

        QCharacter::TermMap terms;
        YMonomial highest;
        bool have_highest = false;
        for (const auto& jt : j.at("terms")) {
            std::vector<YMonomial::Factor> fs;
            for (const auto& jf : jt.at(0))
                fs.push_back({jf.at(0).get<int>(), jf.at(1).get<int>(),
                              jf.at(2).get<long long>()});
            YMonomial m = YMonomial::from_factors(std::move(fs));
            long long c = jt.at(1).get<long long>();
            if (is_dominant(m) && (!have_highest || highest < m)) {
                highest = m;
                have_highest = true;
            }
            terms[std::move(m)] = c;
        }
        if (!have_highest)
            fail(ErrorCode::io_error, "cache entry has no dominant monomial");
        return {meta, QCharacter(std::move(terms), std::move(highest))};
    } catch (const json::exception& e) {
        fail(ErrorCode::io_error, std::string("malformed cache entry: ") + e.what());
    }
}

std::string verify_report_to_json(const VerifyReport& report, bool include_timing) {
    json j;
    j["lhs_terms"] = report.lhs_terms;
    j["rhs_terms"] = report.rhs_terms;
    j["equal"] = report.equal;
    json ms = json::array();
    for (const auto& m : report.mismatches)
        ms.push_back({{"monomial", m.item}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    j["mismatches"] = std::move(ms);
    if (include_timing)
        j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

std::string character_to_json(const Character& chi) {
    json j = json::array();
    for (const auto& [w, c] : chi.sorted_terms()) {
        json coords = json::array();
        for (long long x : w.coords)
            coords.push_back(x);
        j.push_back({coords, c});
    }
    return j.dump();
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace krq
