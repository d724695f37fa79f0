#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minquot/errors.hpp"
#include "minquot/permutation.hpp"

namespace minquot {

// Freely reduced word in a free group of given rank. Letters are signed
// generator indices in {±1, ..., ±rank}; reduction is maintained on every
// append, so equality of words is equality in the free group.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(int rank) : rank_(rank) {}
  static FreeGroupWord generator(int rank, int letter);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void append(int letter);
  void append(const FreeGroupWord& w);
  FreeGroupWord operator*(const FreeGroupWord& rhs) const;
  FreeGroupWord inverse() const;

  bool operator==(const FreeGroupWord& rhs) const = default;
  std::string to_string() const;  // e.g. "x1 x2^-1"

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

// Automorphism of the free group of rank n given by the images of the
// generators x_1..x_n. Every instance produced by the braid action fixes
// the product x_1 x_2 ... x_n; this is asserted at construction.
struct ArtinAutomorphism {
  int rank = 0;
  std::vector<FreeGroupWord> images;

  static ArtinAutomorphism identity_of(int rank);
  FreeGroupWord apply_to(const FreeGroupWord& w) const;
  bool operator==(const ArtinAutomorphism& rhs) const = default;
};

// Word in the Artin generators of the braid group on n strands; letter
// +i is the generator for strands (i, i+1), -i its inverse.
struct BraidWord {
  int n = 0;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> letters);

  BraidWord operator*(const BraidWord& rhs) const;  // concatenation
  BraidWord inverse() const;
  BraidWord power(int exponent) const;

  std::string to_string() const;  // e.g. "s1 s2^-1"
};

// Action on the free group: the generator for strands (i, i+1) maps
// x_i -> x_i x_{i+1} x_i^{-1} and x_{i+1} -> x_i. The action of a word
// composes letter by letter under the apply-left-first convention and is
// faithful, so equal image tuples decide equality in the braid group.
ArtinAutomorphism artin_action(const BraidWord& w);

bool braid_equal(const BraidWord& a, const BraidWord& b);

// Image of a braid word in the symmetric group (forgets crossings).
Permutation braid_permutation(const BraidWord& w);

// Band generator joining strands i < j, passing over the strands between:
// (s_{j-1} s_{j-2} ... s_{i+1}) s_i (s_{i+1}^{-1} ... s_{j-1}^{-1}).
// bkl_word(i, i+1, n) is the plain generator s_i.
BraidWord bkl_word(int i, int j, int n);

// The sign e for which r_{i,k} = r_{j,k}^e r_{i,j} r_{j,k}^{-e} holds
// (indices pairwise distinct, r_{a,b} normalized to a < b). Decided by
// testing both signs against the equality oracle; throws ConventionError
// if neither (or both) hold.
int epsilon_for(int i, int j, int k, int n);

struct RelationCheck {
  std::string name;
  bool pass = false;
};

// Full defining-relation suite for 3 <= n <= 7:
//   (a) Artin braid + far commutation relations,
//   (b) braid relation for band-generator pairs sharing one index,
//   (c) commutation for unlinked pairs (disjoint and not interleaved),
//   (d) the partial commutation relation with the oracle-derived sign.
struct RelationSuiteReport {
  int n = 0;
  std::size_t artin_braid = 0, artin_comm = 0, bkl_braid = 0, bkl_comm = 0,
              partial_comm = 0;
  std::vector<RelationCheck> failures;
  bool pass() const { return failures.empty(); }
};

RelationSuiteReport relation_suite(int n);

}  // namespace minquot
