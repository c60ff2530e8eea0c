#include "nbnc/random.hpp"

namespace nbnc {

std::uint64_t entropy_seed() {
  std::random_device rd;
  std::uint64_t high = static_cast<std::uint64_t>(rd()) << 32;
  return high | static_cast<std::uint64_t>(rd());
}

}  // namespace nbnc
