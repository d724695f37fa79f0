#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minquot/errors.hpp"

namespace minquot {

// Permutation of {1,...,degree}. Points are 1-based in all external
// notation (cycle strings, image arrays in reports); storage is 0-based.
//
// Composition convention, used across the whole library: a * b means
// "apply a first, then b", so (a * b)(p) = b(a(p)).
class Permutation {
 public:
  using Key = std::string;  // image bytes; lexicographic == image-array order

  Permutation() = default;
  static Permutation identity_of(int degree);

  // From a 1-based image array, e.g. {2,1,3} for the transposition (1 2).
  static Permutation from_images(const std::vector<int>& one_based);

  // From disjoint-cycle notation, e.g. "(1 2 3)(4 5)" or "(1,2,3)".
  // Non-disjoint cycles compose left-to-right. "()" is the identity.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }

  // 1-based application.
  int apply(int point) const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation identity() const { return identity_of(degree()); }

  bool operator==(const Permutation& rhs) const = default;

  Key key() const { return Key(images_.begin(), images_.end()); }

  std::vector<int> to_images() const;  // 1-based
  std::string to_cycle_string() const;

  bool is_identity() const;

 private:
  explicit Permutation(std::vector<std::uint8_t> images)
      : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;  // images_[p] = image of point p, 0-based
};

}  // namespace minquot
