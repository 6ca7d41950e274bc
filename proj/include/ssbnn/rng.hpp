#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ssbnn {

// splitmix64 finalizer; used to turn (seed, role, index) tuples into
// well-separated engine seeds.
std::uint64_t mix64(std::uint64_t x);

// Derives a child seed from a base seed, a role tag and an index.
// Streams derived with distinct (role, index) are independent for our
// purposes, which is what makes parallel Monte-Carlo loops and pipelined
// task construction schedule-invariant.
std::uint64_t derive_seed(std::uint64_t base, std::string_view role,
                          std::uint64_t index = 0);

// Deterministic random stream. Every stream is owned by exactly one logical
// unit of work (one draw, one task, one run); nothing here is thread-safe.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(mix64(seed)) {}
  RngStream(std::uint64_t base, std::string_view role, std::uint64_t index = 0)
      : gen_(derive_seed(base, role, index)) {}

  // Uniform in [0, 1).
  double uniform();
  // Standard normal via the polar method (stdlib-independent).
  double normal();
  // Uniform integer in [0, n); n must be positive.
  std::uint64_t uniform_int(std::uint64_t n);

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ssbnn
