#ifndef COXH4_CACHE_HPP
#define COXH4_CACHE_HPP

#include <functional>
#include <optional>
#include <string>

namespace coxh4 {

// On-disk artifact cache. One artifact per file, keyed by a content hash of
// the inputs; the header carries the hash, the payload is the canonical
// serialization. A loaded payload is re-validated by the caller's spot
// check, so corrupt or stale files fall back to recomputation.
class CacheStore {
public:
    CacheStore() = default;  // disabled
    CacheStore(std::string dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }

    // payload if present with a matching input hash and passing validation
    std::optional<std::string> load(const std::string& kind, const std::string& input_hash,
                                    const std::function<bool(const std::string&)>& validate) const;

    void store(const std::string& kind, const std::string& input_hash,
               const std::string& payload) const;

    std::string path_of(const std::string& kind) const;

private:
    std::string dir_;
    bool enabled_ = false;
};

}  // namespace coxh4

#endif
