#pragma once

#include <array>
#include <cstdint>

namespace csest {

// Reproducibility key for one random stream. (root, stream) fully determines
// every draw; experiments derive per-replicate streams with child().
struct Seed {
  std::uint64_t root = 0;
  std::uint64_t stream = 0;

  Seed child(std::uint64_t index) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// Counter-based generator (Philox4x32-10). Draw k of a stream is a pure
// function of (root, stream, k), so replicates can run in any order or thread.
class CounterRng {
 public:
  explicit CounterRng(Seed seed) : seed_(seed) {}

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1).
  double uniform_open();
  // Standard normal via Box-Muller; both variates are consumed deterministically.
  double normal();

  std::uint64_t draws() const { return counter_; }

 private:
  void refill();

  Seed seed_;
  std::uint64_t counter_ = 0;  // index of the next 64-bit draw
  std::array<std::uint64_t, 2> block_{};
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

}  // namespace csest
