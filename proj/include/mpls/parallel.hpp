#pragma once

#include <cstdint>

namespace mpls {

// Worker count from MPLS_THREADS (default: OpenMP's own default; 1 without OpenMP).
int worker_count();

// SplitMix64 finalizer; derives per-trial seeds from a master seed so that
// sharded runs produce the same trials regardless of worker count.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mpls
