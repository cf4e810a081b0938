#pragma once

#include <cstdint>
#include <random>

namespace oensim {

// splitmix64 finalizer. Used to turn (seed, counter...) tuples into
// independent engine seeds; the stream-splitting rule everywhere in this
// project is stream(seed, a, b, ...) = mix(...mix(mix(seed ^ golden, a), b)...),
// so parallel work items get reproducible streams regardless of scheduling.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed) { return mix64(seed); }

template <typename... Rest>
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t head, Rest... rest) {
    return stream_seed(mix64(seed ^ mix64(head)), rest...);
}

template <typename... Counters>
std::mt19937_64 make_stream(std::uint64_t seed, Counters... counters) {
    return std::mt19937_64(stream_seed(seed, static_cast<std::uint64_t>(counters)...));
}

}  // namespace oensim
