#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace anisolab {

// splitmix64: used both to seed mt19937_64 and to derive per-task seeds.
// Seed splitting rule: task k of a run seeded with s uses
// derive_seed(s, k) = splitmix64(s + k * 0x9E3779B97F4A7C15).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
  return splitmix64(seed + task * 0x9E3779B97F4A7C15ULL);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

inline Eigen::VectorXd gaussian_vector(std::mt19937_64& eng, int n) {
  std::normal_distribution<double> d(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = d(eng);
  return v;
}

inline Eigen::VectorXd unit_sphere_vector(std::mt19937_64& eng, int n) {
  Eigen::VectorXd v = gaussian_vector(eng, n);
  while (v.norm() < 1e-12) v = gaussian_vector(eng, n);
  return v / v.norm();
}

// Isotropic normal mixed with a scale-100 normal; probes both the
// |eta - eta'| << |eta| and >> |eta| regimes of the inequality proofs.
inline Eigen::VectorXd heavy_tailed_vector(std::mt19937_64& eng, int n) {
  std::bernoulli_distribution wide(0.5);
  Eigen::VectorXd v = gaussian_vector(eng, n);
  if (wide(eng)) v *= 100.0;
  return v;
}

}  // namespace anisolab
