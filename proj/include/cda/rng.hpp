#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace cda {

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for run k is the (k+1)-th splitmix64 output of the master seed.
// Injective in run_index for fixed master seed: the increment is odd, so
// master + (k+1)*increment is a bijection mod 2^64, and so is the finalizer.
// Runs are therefore independently re-runnable and order-free.
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed,
                                        std::uint64_t run_index) noexcept {
    constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(master_seed + (run_index + 1) * kIncrement);
}

// Deterministic uniform source for one simulation run. mt19937_64 output is
// pinned by the standard; the bounded mapping uses Lemire's multiply-shift
// with rejection instead of std::uniform_int_distribution, whose stream is
// implementation-defined. Single-owner: never shared across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, n). n must be nonzero.
    std::uint64_t bounded(std::uint64_t n) {
        auto wide = static_cast<unsigned __int128>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(wide);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                wide = static_cast<unsigned __int128>(next_u64()) * n;
                low = static_cast<std::uint64_t>(wide);
            }
        }
        return static_cast<std::uint64_t>(wide >> 64);
    }

    bool coin() { return bounded(2) != 0; }

    // 53-bit uniform in [0, 1).
    double unit_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

// Anything able to drive order generation; satisfied by Rng and test stubs.
template <typename R>
concept UniformSource = requires(R r, std::uint64_t n) {
    { r.bounded(n) } -> std::convertible_to<std::uint64_t>;
    { r.coin() } -> std::convertible_to<bool>;
    { r.unit_real() } -> std::convertible_to<double>;
};

} // namespace cda
