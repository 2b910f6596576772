#pragma once

#include <array>
#include <concepts>
#include <cstdint>

#include "vndf/types.hpp"

namespace vndf {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Bit-exact with the Random123 reference.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Counter-based random stream. The key is the 64-bit seed; the counter is
/// (block index, stream id), so any (seed, stream) pair is an independent,
/// reproducible sequence and splitting costs nothing.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Fresh stream with the same seed and a different stream id.
    RngStream split(std::uint64_t stream) const { return {seed_, stream}; }

    std::uint32_t next_u32();

    /// Uniform in [0,1). Doubles carry all 32 bits; floats keep the top 24 so
    /// the conversion can never round up to 1.
    template <std::floating_point T>
    T next_unit();

    template <std::floating_point T>
    UnitSquareSample<T> next_sample() {
        const T u1 = next_unit<T>();
        const T u2 = next_unit<T>();
        return {u1, u2};
    }

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
};

template <>
inline float RngStream::next_unit<float>() {
    return static_cast<float>(next_u32() >> 8) * 0x1p-24f;
}

template <>
inline double RngStream::next_unit<double>() {
    return static_cast<double>(next_u32()) * 0x1p-32;
}

inline std::uint32_t RngStream::next_u32() {
    if (used_ == 4) refill();
    return buffer_[used_++];
}

}  // namespace vndf
