#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace treedecomp {

// Seed-derivation domains. Every randomized kernel draws from a stream
// keyed on (master seed, domain, a, b) so results do not depend on the
// order in which (v,t) pairs happen to be processed.
enum class SeedDomain : std::uint64_t {
    blade_draw = 1,
    fan_pair = 2,
    star_perm = 3,
    match_draw = 4,
    resample = 5,
    stage_retry = 6,
    synth = 7,
    lemma_retry = 8,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, SeedDomain domain,
                                 std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s ^= static_cast<std::uint64_t>(domain) * 0xd1b54a32d192ed03ULL;
    h ^= splitmix64(s);
    s ^= a * 0x2545f4914f6cdd1dULL;
    h ^= splitmix64(s);
    s ^= b * 0x9e6c63d0876a9a47ULL;
    h ^= splitmix64(s);
    return h;
}

// Thin deterministic wrapper around mt19937_64. Bounded draws use
// rejection sampling so the stream consumption is well defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // A uniformly random permutation of {0,...,n-1}.
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace treedecomp
