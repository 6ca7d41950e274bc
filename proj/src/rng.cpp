#include "ssbnn/rng.hpp"

#include <cmath>

namespace ssbnn {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view role,
                          std::uint64_t index) {
  // FNV-1a over the role tag, then fold in base and index through mix64.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : role) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return mix64(base ^ mix64(h) ^ mix64(index * 0x9e3779b97f4a7c15ull + 1));
}

double RngStream::uniform() {
  // 53-bit mantissa, [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
  // Rejection sampling on the top bits; unbiased for any n >= 1.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

}  // namespace ssbnn
