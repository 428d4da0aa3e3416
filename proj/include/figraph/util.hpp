#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace figraph {

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits. Used for content
/// digests of documents, witnesses and input files; not a cryptographic hash.
class Digest {
public:
    Digest& update(std::string_view bytes) noexcept {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    Digest& update(std::uint64_t value) noexcept {
        for (int i = 0; i < 8; ++i) {
            state_ ^= (value >> (8 * i)) & 0xffU;
            state_ *= 0x100000001b3ULL;
        }
        return *this;
    }

    std::uint64_t value() const noexcept { return state_; }

    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
        return buf;
    }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::string digest_of(std::string_view bytes) { return Digest{}.update(bytes).hex(); }

/// SplitMix64 step; derives independent per-instance seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator whose draws are identical on every platform. The engine
/// is std::mt19937_64 (fully specified by the standard); the standard
/// distributions are not, so integer and Bernoulli draws are done here.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], by rejection sampling.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo)
            return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(next());
        const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % span;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace figraph
