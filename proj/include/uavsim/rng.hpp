#pragma once

#include <cstdint>
#include <random>

namespace uavsim {

/// Derives independent generators from one master seed so that adding a
/// consumer stream does not perturb the draws of existing ones.
class RngStreams {
public:
  explicit RngStreams(std::uint64_t master_seed) : master_(master_seed) {}

  /// Generator for a named stream. Same (master, id) always yields the
  /// same sequence.
  std::mt19937_64 stream(std::uint64_t id) const {
    return std::mt19937_64(mix(master_, id));
  }

  /// Generator for a (stream, index) pair, e.g. per-trial substreams.
  std::mt19937_64 stream(std::uint64_t id, std::uint64_t index) const {
    return std::mt19937_64(mix(mix(master_, id), index));
  }

  std::uint64_t master() const { return master_; }

private:
  // splitmix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t master_;
};

// Fixed stream ids, so realizations stay reproducible across versions.
namespace streams {
constexpr std::uint64_t kBs = 1;
constexpr std::uint64_t kUe = 2;
constexpr std::uint64_t kClusters = 3;
constexpr std::uint64_t kFading = 4;
constexpr std::uint64_t kLos = 5;
constexpr std::uint64_t kSchedule = 6;
constexpr std::uint64_t kTrial = 7;
}  // namespace streams

}  // namespace uavsim
