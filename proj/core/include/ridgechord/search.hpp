#ifndef RIDGECHORD_SEARCH_HPP
#define RIDGECHORD_SEARCH_HPP

#include <cstdint>
#include <vector>

namespace ridgechord {

/// Outcome of a decision procedure backed by a bounded search. `Unknown`
/// always means the node budget ran out, never "probably not".
enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unknown";
    }
}

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

/// Hash for memo keys made of sorted facet bitmasks (exact keys, FNV-1a mix).
struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
        std::uint64_t h = 14695981039346656037ull;
        for (std::uint64_t w : key) {
            for (int i = 0; i < 8; ++i) {
                h ^= (w >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace ridgechord

#endif
