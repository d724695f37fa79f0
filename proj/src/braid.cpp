#include "minquot/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace minquot {

FreeGroupWord FreeGroupWord::generator(int rank, int letter) {
  FreeGroupWord w(rank);
  w.append(letter);
  return w;
}

void FreeGroupWord::append(int letter) {
  if (letter == 0 || std::abs(letter) > rank_)
    throw InvalidWord("free-group letter " + std::to_string(letter) +
                      " out of range for rank " + std::to_string(rank_));
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void FreeGroupWord::append(const FreeGroupWord& w) {
  if (rank_ != w.rank_) throw DimensionMismatch("free-group ranks differ");
  for (int letter : w.letters_) append(letter);
}

FreeGroupWord FreeGroupWord::operator*(const FreeGroupWord& rhs) const {
  FreeGroupWord out = *this;
  out.append(rhs);
  return out;
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord out(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << std::abs(letters_[i]);
    if (letters_[i] < 0) out << "^-1";
  }
  return out.str();
}

ArtinAutomorphism ArtinAutomorphism::identity_of(int rank) {
  ArtinAutomorphism a;
  a.rank = rank;
  for (int i = 1; i <= rank; ++i)
    a.images.push_back(FreeGroupWord::generator(rank, i));
  return a;
}

FreeGroupWord ArtinAutomorphism::apply_to(const FreeGroupWord& w) const {
  if (w.rank() != rank) throw DimensionMismatch("rank mismatch");
  FreeGroupWord out(rank);
  for (int letter : w.letters()) {
    if (letter > 0)
      out.append(images[letter - 1]);
    else
      out.append(images[-letter - 1].inverse());
  }
  return out;
}

BraidWord::BraidWord(int n, std::vector<int> letters)
    : n(n), letters(std::move(letters)) {
  if (n < 2) throw InvalidWord("braid words need at least 2 strands");
  for (int letter : this->letters)
    if (letter == 0 || std::abs(letter) > n - 1)
      throw InvalidWord("braid letter " + std::to_string(letter) +
                        " out of range for " + std::to_string(n) + " strands");
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (n != rhs.n) throw DimensionMismatch("braid strand counts differ");
  std::vector<int> out = letters;
  out.insert(out.end(), rhs.letters.begin(), rhs.letters.end());
  return BraidWord(n, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.push_back(-*it);
  return BraidWord(n, std::move(out));
}

BraidWord BraidWord::power(int exponent) const {
  BraidWord base = exponent >= 0 ? *this : inverse();
  BraidWord out(n, {});
  for (int k = std::abs(exponent); k > 0; --k) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out << ' ';
    out << 's' << std::abs(letters[i]);
    if (letters[i] < 0) out << "^-1";
  }
  return out.str();
}

namespace {

// In-place application of one braid letter: the current automorphism
// becomes (current, then letter). Only images containing x_i or x_{i+1}
// change, by substitution.
void apply_letter(ArtinAutomorphism& a, int letter) {
  const int i = std::abs(letter);  // acts on x_i, x_{i+1}
  const int rank = a.rank;
  for (FreeGroupWord& image : a.images) {
    FreeGroupWord next(rank);
    for (int l : image.letters()) {
      const int abs_l = std::abs(l);
      if (abs_l != i && abs_l != i + 1) {
        next.append(l);
        continue;
      }
      if (letter > 0) {
        // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
        if (abs_l == i) {
          if (l > 0) { next.append(i); next.append(i + 1); next.append(-i); }
          else       { next.append(i); next.append(-(i + 1)); next.append(-i); }
        } else {
          next.append(l > 0 ? i : -i);
        }
      } else {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        if (abs_l == i) {
          next.append(l > 0 ? i + 1 : -(i + 1));
        } else {
          if (l > 0) { next.append(-(i + 1)); next.append(i); next.append(i + 1); }
          else       { next.append(-(i + 1)); next.append(-i); next.append(i + 1); }
        }
      }
    }
    image = std::move(next);
  }
}

FreeGroupWord full_product(int rank) {
  FreeGroupWord w(rank);
  for (int i = 1; i <= rank; ++i) w.append(i);
  return w;
}

}  // namespace

ArtinAutomorphism artin_action(const BraidWord& w) {
  ArtinAutomorphism a = ArtinAutomorphism::identity_of(w.n);
  for (int letter : w.letters) apply_letter(a, letter);
  // The braid action fixes x_1 x_2 ... x_n; a violation means the word or
  // the action table is corrupt.
  FreeGroupWord prod(w.n);
  for (const FreeGroupWord& image : a.images) prod.append(image);
  if (!(prod == full_product(w.n)))
    throw Error("artin_action: product invariant violated");
  return a;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw DimensionMismatch("braid strand counts differ");
  return artin_action(a) == artin_action(b);
}

Permutation braid_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity_of(w.n);
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    p = p * Permutation::from_cycles(
                "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", w.n);
  }
  return p;
}

BraidWord bkl_word(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw InvalidWord("bkl_word requires 1 <= i < j <= n");
  std::vector<int> letters;
  for (int k = j - 1; k >= i + 1; --k) letters.push_back(k);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

namespace {

BraidWord bkl_norm(int a, int b, int n) {
  return bkl_word(std::min(a, b), std::max(a, b), n);
}

}  // namespace

int epsilon_for(int i, int j, int k, int n) {
  if (i == j || j == k || i == k)
    throw InvalidWord("epsilon_for requires pairwise distinct indices");
  if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
    throw InvalidWord("epsilon_for index out of range");
  const BraidWord rik = bkl_norm(i, k, n);
  const BraidWord rij = bkl_norm(i, j, n);
  const BraidWord rjk = bkl_norm(j, k, n);
  bool plus = braid_equal(rik, rjk * rij * rjk.inverse());
  bool minus = braid_equal(rik, rjk.inverse() * rij * rjk);
  if (plus == minus)
    throw ConventionError("partial commutation holds for " +
                          std::string(plus ? "both signs" : "neither sign") +
                          " on (" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ")");
  return plus ? 1 : -1;
}

RelationSuiteReport relation_suite(int n) {
  if (n < 3 || n > 7)
    throw RangeError("relation_suite supports 3 <= n <= 7");
  RelationSuiteReport report;
  report.n = n;
  const auto gen = [&](int i) { return BraidWord(n, {i}); };
  const auto record = [&](const std::string& name, bool ok, std::size_t& counter) {
    ++counter;
    if (!ok) report.failures.push_back({name, false});
  };

  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      if (j == i + 1) {
        record("artin braid s" + std::to_string(i) + ",s" + std::to_string(j),
               braid_equal(gen(i) * gen(j) * gen(i), gen(j) * gen(i) * gen(j)),
               report.artin_braid);
      } else {
        record("artin comm s" + std::to_string(i) + ",s" + std::to_string(j),
               braid_equal(gen(i) * gen(j), gen(j) * gen(i)),
               report.artin_comm);
      }
    }
  }

  // All unordered pairs {i,j} < {k,l} of band generators.
  std::vector<std::pair<int, int>> bands;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) bands.emplace_back(i, j);
  for (std::size_t a = 0; a < bands.size(); ++a) {
    for (std::size_t b = a + 1; b < bands.size(); ++b) {
      const auto [i, j] = bands[a];
      const auto [k, l] = bands[b];
      const int shared = (i == k) + (i == l) + (j == k) + (j == l);
      const BraidWord r1 = bkl_word(i, j, n), r2 = bkl_word(k, l, n);
      const std::string tag = "r" + std::to_string(i) + std::to_string(j) +
                              ",r" + std::to_string(k) + std::to_string(l);
      if (shared == 1) {
        record("bkl braid " + tag,
               braid_equal(r1 * r2 * r1, r2 * r1 * r2), report.bkl_braid);
      } else if (shared == 0) {
        const bool interleaved = (i < k && k < j && j < l) ||
                                 (k < i && i < l && l < j);
        if (!interleaved)
          record("bkl comm " + tag, braid_equal(r1 * r2, r2 * r1),
                 report.bkl_comm);
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        const std::string tag = "partial comm (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")";
        try {
          const int eps = epsilon_for(i, j, k, n);
          const BraidWord rjk = bkl_norm(j, k, n);
          const BraidWord conj = rjk.power(eps) * bkl_norm(i, j, n) * rjk.power(-eps);
          record(tag, braid_equal(bkl_norm(i, k, n), conj), report.partial_comm);
        } catch (const ConventionError&) {
          record(tag, false, report.partial_comm);
        }
      }
    }
  }
  return report;
}

}  // namespace minquot
