#pragma once
#include "resolution.hpp"

#include <optional>
#include <string>

namespace qha {

// Completion and resolution results for one presentation, as stored on disk.
struct CacheEntry {
    std::vector<GBMember> members; // untraced
    std::vector<Path> basis_paths;
    int nil_index = 0;
    int rad_nil = 0;
    Resolution res;
};

// FNV-1a 64 over the canonical presentation text, the declared arrow order,
// the cap, and the cache schema version.
std::string cache_key(const Presentation& pres, int cap);

// nullopt on miss; stale, corrupt, or mismatching content is also a miss.
std::optional<CacheEntry> cache_load(const std::string& dir, const std::string& key,
                                     const Presentation& pres, int cap);

// Best-effort: skips silently when another writer holds the lock; the entry
// lands via temp file + rename so readers never see a partial document.
void cache_store(const std::string& dir, const std::string& key,
                 const Presentation& pres, int cap, const CacheEntry& entry);

} // namespace qha
