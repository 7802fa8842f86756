#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <type_traits>

namespace levilab {

// FNV-1a, used for mesh/report fingerprints (not cryptographic)
class Fnv1a {
public:
    void add_bytes(const void* data, std::size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; i++) {
            h_ ^= p[i];
            h_ *= 0x100000001b3ULL;
        }
    }
    template <class T>
    void add(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        add_bytes(&v, sizeof v);
    }
    void add(const std::string& s) { add_bytes(s.data(), s.size()); }
    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string hex64(std::uint64_t v);

} // namespace levilab
