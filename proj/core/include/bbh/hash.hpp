#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bbh {

// Order-sensitive 64-bit mixer. Collisions are possible but rare enough for
// memo tables of a few million entries.
class Hasher {
public:
    void add(std::uint64_t v) {
        h_ ^= mix(v + 0x9e3779b97f4a7c15ULL + (h_ << 6) + (h_ >> 2));
    }
    void add_int(long long v) { add(static_cast<std::uint64_t>(v)); }
    template <class T>
    void add_opt(const std::optional<T>& o) {
        add(o.has_value());
        if (o) add_int(static_cast<long long>(*o));
    }
    void add_ints(const std::vector<int>& v) {
        add(v.size());
        for (int x : v) add_int(x);
    }
    std::uint64_t value() const { return mix(h_); }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t h_ = 0x243f6a8885a308d3ULL;
};

}  // namespace bbh
