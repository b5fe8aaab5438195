#ifndef DK_RNG_HPP
#define DK_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace dk {

/// Seeded xoshiro256++ generator with named sub-streams.
///
/// Every consumer of randomness derives its own stream from (seed, name), so
/// adding a new consumer never perturbs the draws seen by existing ones.
/// Normal variates use the inverse-CDF transform, which consumes exactly one
/// uniform per variate and therefore keeps streams aligned across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Derive the stream identified by `name` from a base seed.
    static Rng stream(std::uint64_t seed, std::string_view name);

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    /// Uniform on (0, 1), never returning an exact endpoint.
    double uniform_open();

    /// Standard normal via the inverse CDF.
    double normal();

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Random permutation of [0, n).
    std::vector<int> permutation(int n);

private:
    std::uint64_t state_[4];
};

/// Inverse standard normal CDF (Wichura's PPND16), |error| < 1e-15 for
/// p in (0, 1).
double normal_quantile(double p);

}  // namespace dk

#endif
