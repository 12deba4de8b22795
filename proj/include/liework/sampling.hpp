#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "liework/invariants.hpp"
#include "liework/mat.hpp"

namespace liework {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

/// Deterministic generator for a named sampling task; identical across runs.
inline std::mt19937_64 seeded_rng(std::string_view tag) { return std::mt19937_64(fnv1a64(tag)); }

/// Draw in [0, n); n must be positive. Plain modulo, identical on every platform.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

/// Draw in [lo, hi] inclusive.
inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

/// Random positive-definite rational metric: RᵀR + d·I scaled by 1/s.
inline MetricTensor random_pd_metric(std::size_t dim, std::mt19937_64& rng) {
  Mat r(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) r(i, j) = Rat(draw_int(rng, -3, 3));
  const Rat d(draw_int(rng, 1, 3));
  const Rat s(1, draw_int(rng, 1, 3));
  Mat q = r.transpose() * r;
  for (std::size_t i = 0; i < dim; ++i) q(i, i) += d;
  return MetricTensor(s * q);
}

/// Random invertible rational basis change with small integer entries.
inline Mat random_invertible(std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    Mat t(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) t(i, j) = Rat(draw_int(rng, -2, 2));
    if (!determinant(t).is_zero()) return t;
  }
}

}  // namespace liework
