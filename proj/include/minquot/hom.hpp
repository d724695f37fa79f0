#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "minquot/braid.hpp"
#include "minquot/errors.hpp"
#include "minquot/group_table.hpp"
#include "minquot/parallel.hpp"
#include "minquot/permutation.hpp"

namespace minquot {

// Do the generator images satisfy the defining relations of the braid
// group (braid relation for adjacent indices, commutation otherwise)?
template <GroupElementLike E>
bool braid_relations_hold(const std::vector<E>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const E& a = images[i];
      const E& b = images[j];
      if (j == i + 1) {
        if (!(a * b * a == b * a * b)) return false;
      } else {
        if (!(a * b == b * a)) return false;
      }
    }
  }
  return true;
}

// Homomorphism from the braid group on n strands into a finite group,
// stored as the images of the n-1 Artin generators.
template <GroupElementLike E>
struct BraidHom {
  int n = 0;
  std::shared_ptr<const FiniteGroupTable<E>> target;
  std::vector<E> images;
  bool valid = false;
  bool cyclic_image = false;  // == all generator images equal (valid homs)
  bool surjective = false;
  std::uint64_t image_order = 0;
};

template <GroupElementLike E>
BraidHom<E> make_braid_hom(int n,
                           std::shared_ptr<const FiniteGroupTable<E>> target,
                           std::vector<E> images) {
  if (n < 2) throw RangeError("braid homs need n >= 2");
  if (static_cast<int>(images.size()) != n - 1)
    throw RangeError("expected n-1 generator images");
  for (const E& x : images)
    if (!target->contains(x)) throw NotInGroup("hom image not in target group");
  BraidHom<E> h;
  h.n = n;
  h.target = std::move(target);
  h.images = std::move(images);
  h.valid = braid_relations_hold(h.images);
  h.cyclic_image = std::all_of(h.images.begin(), h.images.end(),
                               [&](const E& x) { return x == h.images[0]; });
  if (h.valid) {
    const auto image_group = FiniteGroupTable<E>::closure(h.images);
    h.image_order = image_group.order();
    h.surjective = h.image_order == h.target->order();
  }
  return h;
}

template <GroupElementLike E>
bool is_valid(const BraidHom<E>& h) {
  return h.valid;
}

// Image of a braid word under the homomorphism.
template <GroupElementLike E>
E evaluate(const BraidHom<E>& h, const BraidWord& w) {
  if (!h.valid) throw InvalidHom("evaluate requires a valid homomorphism");
  if (w.n != h.n) throw DimensionMismatch("braid word strand count differs");
  E out = h.images[0].identity();
  for (int letter : w.letters) {
    const E& img = h.images[std::abs(letter) - 1];
    out = letter > 0 ? out * img : out * img.inverse();
  }
  return out;
}

// Conjugation orbit data of a homomorphism: the lexicographically minimal
// conjugate image tuple (by canonical element keys) and the orbit size.
template <GroupElementLike E>
struct HomClass {
  BraidHom<E> representative;
  std::uint64_t size = 0;
};

namespace detail {

template <GroupElementLike E>
std::vector<typename E::Key> tuple_key(const std::vector<E>& images) {
  std::vector<typename E::Key> keys;
  keys.reserve(images.size());
  for (const E& x : images) keys.push_back(x.key());
  return keys;
}

}  // namespace detail

template <GroupElementLike E>
HomClass<E> canonicalize(const BraidHom<E>& h) {
  if (!h.valid) throw InvalidHom("canonicalize requires a valid homomorphism");
  const auto& group = *h.target;
  std::vector<E> best = h.images;
  auto best_key = detail::tuple_key(best);
  std::uint64_t fixers = 0;
  std::vector<E> conj(h.images.size(), h.images[0]);
  for (std::size_t gi = 0; gi < group.order(); ++gi) {
    const E& g = group.at(gi);
    const E g_inv = g.inverse();
    bool fixes = true;
    for (std::size_t i = 0; i < h.images.size(); ++i) {
      conj[i] = g * h.images[i] * g_inv;
      if (!(conj[i] == h.images[i])) fixes = false;
    }
    if (fixes) ++fixers;
    auto key = detail::tuple_key(conj);
    if (key < best_key) {
      best = conj;
      best_key = std::move(key);
    }
  }
  HomClass<E> cls;
  cls.representative = make_braid_hom(h.n, h.target, std::move(best));
  cls.size = group.order() / fixers;
  return cls;
}

enum class HomMode { raw, up_to_conjugacy };

struct HomSearchOptions {
  bool non_cyclic_only = false;
  std::uint64_t max_target_order = 10'000;
  int workers = 1;
};

namespace detail {

// Backtracking search for valid image tuples with the first image fixed.
// All sigma images of a valid hom are conjugate (the Artin generators are
// conjugate in the braid group), so candidates range over the conjugacy
// class of the first image only.
template <GroupElementLike E>
void extend_hom(int n, const std::vector<E>& cls, std::vector<E>& partial,
                std::vector<std::vector<E>>& out) {
  if (static_cast<int>(partial.size()) == n - 1) {
    out.push_back(partial);
    return;
  }
  const std::size_t k = partial.size();
  for (const E& c : cls) {
    bool ok = true;
    for (std::size_t j = 0; j + 1 < k && ok; ++j)
      ok = partial[j] * c == c * partial[j];
    if (ok && k >= 1) {
      const E& prev = partial[k - 1];
      ok = prev * c * prev == c * prev * c;
    }
    if (!ok) continue;
    partial.push_back(c);
    extend_hom(n, cls, partial, out);
    partial.pop_back();
  }
}

}  // namespace detail

// All valid homomorphisms B_n -> G, sorted by image tuple. With
// non_cyclic_only set, constant-image homs are dropped.
template <GroupElementLike E>
std::vector<BraidHom<E>> enumerate_homs_raw(
    int n, std::shared_ptr<const FiniteGroupTable<E>> target,
    const HomSearchOptions& options = {}) {
  if (n < 2 || n > 7)
    throw RangeError("enumerate_homs supports 2 <= n <= 7");
  if (target->order() > options.max_target_order)
    throw RangeError("target order " + std::to_string(target->order()) +
                     " exceeds the enumeration bound " +
                     std::to_string(options.max_target_order));
  const auto reps = conjugacy_class_representatives(*target);
  std::vector<std::vector<E>> class_lists(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r)
    class_lists[r] = conjugacy_class(*target, reps[r]);

  std::vector<std::vector<std::vector<E>>> found(reps.size());
  parallel_chunks(reps.size(), options.workers,
                  [&](std::size_t begin, std::size_t end, std::size_t) {
                    for (std::size_t r = begin; r < end; ++r) {
                      for (const E& first : class_lists[r]) {
                        std::vector<E> partial{first};
                        detail::extend_hom(n, class_lists[r], partial,
                                           found[r]);
                      }
                    }
                  });

  std::vector<BraidHom<E>> out;
  for (auto& per_class : found)
    for (auto& images : per_class) {
      if (options.non_cyclic_only &&
          std::all_of(images.begin(), images.end(),
                      [&](const E& x) { return x == images[0]; }))
        continue;
      out.push_back(make_braid_hom(n, target, std::move(images)));
    }
  std::sort(out.begin(), out.end(),
            [](const BraidHom<E>& a, const BraidHom<E>& b) {
              return detail::tuple_key(a.images) < detail::tuple_key(b.images);
            });
  return out;
}

// Conjugation classes of valid homomorphisms B_n -> G. The search fixes
// the first image to the minimal-key representative of each conjugacy
// class and deduplicates by canonical form.
template <GroupElementLike E>
std::vector<HomClass<E>> enumerate_homs_classes(
    int n, std::shared_ptr<const FiniteGroupTable<E>> target,
    const HomSearchOptions& options = {}) {
  if (n < 2 || n > 7)
    throw RangeError("enumerate_homs supports 2 <= n <= 7");
  if (target->order() > options.max_target_order)
    throw RangeError("target order " + std::to_string(target->order()) +
                     " exceeds the enumeration bound " +
                     std::to_string(options.max_target_order));
  const auto reps = conjugacy_class_representatives(*target);
  std::vector<std::vector<std::vector<E>>> found(reps.size());
  parallel_chunks(
      reps.size(), options.workers,
      [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t r = begin; r < end; ++r) {
          auto cls = conjugacy_class(*target, reps[r]);
          // cls is sorted by key; the minimal-key member is the anchor.
          std::vector<E> partial{cls.front()};
          detail::extend_hom(n, cls, partial, found[r]);
        }
      });

  std::vector<HomClass<E>> out;
  for (auto& per_class : found) {
    for (auto& images : per_class) {
      if (options.non_cyclic_only &&
          std::all_of(images.begin(), images.end(),
                      [&](const E& x) { return x == images[0]; }))
        continue;
      HomClass<E> cls = canonicalize(make_braid_hom(n, target, std::move(images)));
      const auto key = detail::tuple_key(cls.representative.images);
      bool duplicate = false;
      for (const auto& existing : out)
        if (detail::tuple_key(existing.representative.images) == key) {
          duplicate = true;
          break;
        }
      if (!duplicate) out.push_back(std::move(cls));
    }
  }
  std::sort(out.begin(), out.end(), [](const HomClass<E>& a, const HomClass<E>& b) {
    return detail::tuple_key(a.representative.images) <
           detail::tuple_key(b.representative.images);
  });
  return out;
}

// --- Symmetric-group specific layer -------------------------------------

using PermTable = FiniteGroupTable<Permutation>;
using PermTablePtr = std::shared_ptr<const PermTable>;

// The full symmetric group on 1..n as a table.
PermTablePtr symmetric_group(int n);
PermTablePtr alternating_group(int n);

// Standard projection: sigma_i -> (i, i+1). 2 <= n <= 7.
BraidHom<Permutation> standard_projection(int n, PermTablePtr table = nullptr);

// The four exceptional maps out of B_4 (k in 1..4), stored on the Artin
// generators. Targets: S4 for k = 1, 2; A4 inside S4 for k = 3; S3 inside
// S4 for k = 4. Throws if a constructed map fails validation.
BraidHom<Permutation> exceptional_b4_map(int k, PermTablePtr s4 = nullptr);

// The collapse B_4 -> B_3 (last generator folded onto the first) followed
// by the standard projection to S3, on 3 points.
BraidHom<Permutation> b4_collapse_to_s3(PermTablePtr s3 = nullptr);

// Automorphism of a permutation-group table, stored pointwise.
struct GroupAutomorphism {
  PermTablePtr group;
  std::vector<std::uint32_t> mapping;  // table index -> table index

  Permutation apply(const Permutation& x) const {
    return group->at(mapping[group->index_of(x)]);
  }
};

// Automorphism extending a generator assignment; verifies that the
// assignment respects all relations (via a graph closure in G x G) and is
// bijective. Throws Error otherwise.
GroupAutomorphism automorphism_from_generator_images(
    PermTablePtr group, const std::vector<Permutation>& gens,
    const std::vector<Permutation>& images);

// The outer automorphism of S6: (1 2) -> (1 2)(3 4)(5 6),
// (1 2 3 4 5 6) -> (1 2 3)(4 5).
GroupAutomorphism s6_outer_automorphism(PermTablePtr s6 = nullptr);

// Is the automorphism conjugation by some group element?
bool is_inner(const GroupAutomorphism& a);

// Post-composition with an automorphism of the target; stays valid.
BraidHom<Permutation> postcompose(const BraidHom<Permutation>& h,
                                  const GroupAutomorphism& a);

// Equality up to conjugation in the target; for the full S6 additionally
// up to post-composition with the outer automorphism.
bool equal_up_to_aut(const BraidHom<Permutation>& h1,
                     const BraidHom<Permutation>& h2);

}  // namespace minquot
