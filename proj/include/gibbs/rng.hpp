#pragma once

#include <cstdint>

namespace gibbs {

// xoshiro256** seeded through splitmix64. The full update rule is fixed so
// that a (spec, seed) pair maps to the same graph on every platform:
//
//   seeding:  z = (x += 0x9e3779b97f4a7c15);
//             z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//             z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//             s[i] = z ^ (z >> 31)            for i = 0..3, x starting at seed
//   output:   r = rotl(s1 * 5, 7) * 9
//   advance:  t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3;
//             s2 ^= t; s3 = rotl(s3, 45)
//
// uniform01() = (next() >> 11) * 2^-53, a double in [0, 1).
// uniform_below(k) is Lemire's multiply-shift with rejection (unbiased).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform01();
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

}  // namespace gibbs
