#pragma once

#include <cstdint>

namespace ebband {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive an independent child seed from (parent, stream).  The mapping is
/// fixed so results never depend on thread count or execution order.
constexpr std::uint64_t mix_seed(std::uint64_t parent, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(parent) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace ebband
