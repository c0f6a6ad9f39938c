// Seeded generators shared by the property tests.
#pragma once

#include <random>

#include "atfkit/lattice.hpp"

namespace atfkit::gen {

/// Random element of GL(2,Z): a word in elementary shears and swaps, entries
/// kept modest by limiting word length and shear size.
inline Unimodular random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> shear(-3, 3);
  Mat2Z m;
  for (int s = len(rng); s > 0; --s) {
    Mat2Z e;
    switch (kind(rng)) {
      case 0: e = Mat2Z(1, shear(rng), 0, 1); break;
      case 1: e = Mat2Z(1, 0, shear(rng), 1); break;
      case 2: e = Mat2Z(0, 1, 1, 0); break;
      default: e = Mat2Z(-1, 0, 0, 1); break;
    }
    m = e * m;
  }
  return Unimodular(m);
}

inline Vec2Q random_rational_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace atfkit::gen
