#ifndef MTT_RNG_HPP
#define MTT_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mtt {

// Portable helpers on top of mt19937_64 so seeded output does not depend on the
// standard library's distribution implementations.

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for sub-task `tag` of a seeded computation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag)
{
    return splitmix64(splitmix64(seed) ^ (tag * 0xd1b54a32d192ed03ULL));
}

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// Uniform in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

} // namespace mtt

#endif
