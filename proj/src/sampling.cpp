#include "baxter/sampling.hpp"

namespace baxter {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t cell_seed(std::uint64_t master, std::string_view family, std::string_view check,
                        std::uint64_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, family);
  h = fnv1a(h, "/");
  h = fnv1a(h, check);
  return splitmix64(master ^ splitmix64(h ^ splitmix64(trial)));
}

Scalar RationalSampler::small_rational() {
  std::uniform_int_distribution<int> num(-9, 8);
  std::uniform_int_distribution<int> den(1, 9);
  int p = num(eng_);
  if (p >= 0) ++p;  // skip zero
  return Scalar(p, den(eng_));
}

}  // namespace baxter
