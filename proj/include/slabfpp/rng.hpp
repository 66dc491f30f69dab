#pragma once

#include <cmath>
#include <cstdint>

namespace slabfpp {

// Counter-based generator ("sm64ctr-v1"): every random quantity in the
// library is a pure function of a 64-bit key and a 64-bit counter, so any
// edge / sample / worker can regenerate its stream independently of
// execution order.

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Uniform 64-bit word at position `ctr` of the stream identified by `key`.
inline uint64_t stream_at(uint64_t key, uint64_t ctr) {
  return mix64(key + (ctr + 1) * kGolden);
}

// Key derivation. Chained mixing keeps distinct (seed, tag, index) tuples
// on statistically independent streams.
inline uint64_t derive_key(uint64_t base, uint64_t a) {
  return mix64(mix64(base + kGolden) ^ (a * 0xD1B54A32D192ED03ull + 1));
}

inline uint64_t derive_key(uint64_t base, uint64_t a, uint64_t b) {
  return derive_key(derive_key(base, a), b);
}

inline uint64_t derive_key(uint64_t base, uint64_t a, uint64_t b, uint64_t c) {
  return derive_key(derive_key(base, a, b), c);
}

// Worker substream: distinct worker ids give independent streams,
// deterministically.
inline uint64_t substream(uint64_t seed, uint64_t worker_id) {
  return derive_key(seed, 0x776F726Bull /* "work" */, worker_id);
}

// Threshold T such that P(stream word < T) == p up to 2^-64.
inline uint64_t bernoulli_threshold(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return ~0ull;
  // 2^64 * p, computed without overflow at p close to 1.
  long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  if (scaled >= 18446744073709551615.0L) return ~0ull;
  return static_cast<uint64_t>(scaled);
}

// Sequential convenience stream for places where a stateful generator reads
// more naturally (statistics bootstraps, shuffles).
class Stream {
 public:
  explicit Stream(uint64_t key) : key_(key), ctr_(0) {}

  uint64_t next_u64() { return stream_at(key_, ctr_++); }

  // Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n).
  uint64_t next_below(uint64_t n) {
    // Multiply-shift; bias is negligible for n << 2^64.
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  double next_gaussian() {
    // Box-Muller, one value per call (the partner is discarded; clarity
    // over the last factor of two here).
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t key_;
  uint64_t ctr_;
};

}  // namespace slabfpp
