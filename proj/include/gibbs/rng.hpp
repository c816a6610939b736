#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace gibbs {

enum class StreamPurpose : std::uint32_t { cell = 0, edge = 1, oracle = 2 };

/// Identifies one independent random stream. Iteration must be below 2^30.
struct StreamKey {
  std::uint64_t master_seed = 0;
  StreamPurpose purpose = StreamPurpose::cell;
  std::uint32_t iteration = 0;
  std::uint64_t id = 0;
};

inline constexpr std::uint32_t kMaxStreamIteration = (1u << 30) - 1;

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based generator: the stream key fixes the high counter words and
/// the block index advances the low word. Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(const StreamKey& key);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  /// Uniform on the open interval (0, 1).
  double uniform();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
};

RandomStream derive_stream(const StreamKey& key);

/// Seed for replicate `index` of an experiment run under `master_seed`.
std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace gibbs
