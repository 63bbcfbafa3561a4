#ifndef KRQ_CACHE_HPP
#define KRQ_CACHE_HPP

#include "krq/fm.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace krq {

// Memoizes KR q-characters in process and optionally on disk, keyed by
// (series, rank, node, k). Entries are stored at base offset 0 and translated
// on request. Disk writes are write-once-then-read with atomic replacement,
// so concurrent verifications can share one cache directory.
class KrCache {
public:
    KrCache() = default; // in-memory only
    explicit KrCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    bool has_disk() const { return !dir_.empty(); }

    // chi_q(W_{k,offset}^{(node)})
    QCharacter kr(const CartanData& cd, int node, int offset, long long k,
                  const Caps& caps = {});

    struct EntryInfo {
        std::string file;
        char series = 'A';
        int rank = 0;
        int node = 0;
        long long k = 0;
        std::size_t term_count = 0;
        std::string hash;
    };

    std::vector<EntryInfo> list_entries() const;
    std::size_t clear_disk(); // number of entries removed

private:
    struct Key {
        char series;
        int rank;
        int node;
        long long k;
        bool operator<(const Key& o) const {
            return std::tie(series, rank, node, k) < std::tie(o.series, o.rank, o.node, o.k);
        }
    };

    QCharacter base(const CartanData& cd, int node, long long k, const Caps& caps);
    std::filesystem::path entry_path(const Key& key) const;

    std::filesystem::path dir_;
    std::mutex mu_;
    std::map<Key, QCharacter> memo_;
};

} // namespace krq

#endif
