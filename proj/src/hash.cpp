#include "levilab/hash.hpp"

#include <cstdio>

namespace levilab {

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)v);
    return buf;
}

} // namespace levilab
