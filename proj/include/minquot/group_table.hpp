#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "minquot/errors.hpp"
#include "minquot/parallel.hpp"

namespace minquot {

// Requirements on a group-element carrier. Multiplication follows the
// library-wide convention: a * b applies a first, then b. Conjugation of
// x by g is fixed as g * x * g.inverse() everywhere.
template <class E>
concept GroupElementLike =
    std::equality_comparable<E> && requires(const E& a, const E& b) {
      typename E::Key;
      { a * b } -> std::convertible_to<E>;
      { a.inverse() } -> std::convertible_to<E>;
      { a.identity() } -> std::convertible_to<E>;
      { a.key() } -> std::convertible_to<typename E::Key>;
    };

template <GroupElementLike E>
E conjugate(const E& x, const E& g) {
  return g * x * g.inverse();
}

namespace detail {

// Key -> element-index map. The generic version wraps unordered_map; the
// uint64 specialization below is a flat open-addressing table, which is
// what keeps the 10^6-element symplectic closures fast.
template <class Key>
class KeyIndexMap {
 public:
  void reserve(std::size_t n) { map_.reserve(n); }
  std::size_t size() const { return map_.size(); }
  bool insert(const Key& k, std::uint32_t v) {
    return map_.try_emplace(k, v).second;
  }
  void assign(const Key& k, std::uint32_t v) { map_[k] = v; }
  const std::uint32_t* find(const Key& k) const {
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : &it->second;
  }

 private:
  std::unordered_map<Key, std::uint32_t> map_;
};

template <>
class KeyIndexMap<std::uint64_t> {
  static constexpr std::uint64_t kEmpty = ~0ull;

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 public:
  KeyIndexMap() { rehash(1024); }

  void reserve(std::size_t n) {
    std::size_t want = 2;
    while (want < 2 * n + 1) want <<= 1;
    if (want > slots_.size()) rehash(want);
  }

  std::size_t size() const { return size_; }

  bool insert(std::uint64_t k, std::uint32_t v) {
    if (k == kEmpty) throw Error("KeyIndexMap: reserved key value");
    if (2 * (size_ + 1) >= slots_.size()) rehash(slots_.size() * 2);
    std::size_t i = mix(k) & mask_;
    while (slots_[i].first != kEmpty) {
      if (slots_[i].first == k) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = {k, v};
    ++size_;
    return true;
  }

  void assign(std::uint64_t k, std::uint32_t v) {
    std::size_t i = mix(k) & mask_;
    while (slots_[i].first != kEmpty) {
      if (slots_[i].first == k) {
        slots_[i].second = v;
        return;
      }
      i = (i + 1) & mask_;
    }
    insert(k, v);
  }

  const std::uint32_t* find(std::uint64_t k) const {
    std::size_t i = mix(k) & mask_;
    while (slots_[i].first != kEmpty) {
      if (slots_[i].first == k) return &slots_[i].second;
      i = (i + 1) & mask_;
    }
    return nullptr;
  }

 private:
  void rehash(std::size_t capacity) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> old;
    old.swap(slots_);
    slots_.assign(capacity, {kEmpty, 0});
    mask_ = capacity - 1;
    for (const auto& [k, v] : old) {
      if (k == kEmpty) continue;
      std::size_t i = mix(k) & mask_;
      while (slots_[i].first != kEmpty) i = (i + 1) & mask_;
      slots_[i] = {k, v};
    }
  }

  std::vector<std::pair<std::uint64_t, std::uint32_t>> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

template <GroupElementLike E>
std::vector<E> sorted_by_key(std::vector<E> v) {
  std::sort(v.begin(), v.end(),
            [](const E& a, const E& b) { return a.key() < b.key(); });
  return v;
}

}  // namespace detail

struct ClosureOptions {
  std::size_t max_elements = 4'000'000;
  // Invoked once per BFS level with the current element count; reporting
  // only, must not affect results.
  std::function<void(std::size_t)> progress;
};

// Fully enumerated finite group. Element 0 is the identity; subsequent
// elements appear level by level in BFS order with each level sorted by
// canonical key, so two runs over the same generator multiset produce
// identical sequences.
template <GroupElementLike E>
class FiniteGroupTable {
 public:
  using Key = typename E::Key;

  const std::vector<E>& generators() const { return generators_; }
  const std::vector<E>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  const E& identity() const { return elements_.front(); }
  const E& at(std::size_t i) const { return elements_[i]; }

  bool contains(const E& x) const { return index_.find(x.key()) != nullptr; }

  std::uint32_t index_of(const E& x) const {
    const std::uint32_t* slot = index_.find(x.key());
    if (!slot) throw NotInGroup("element is not in the group");
    return *slot;
  }

  // Breadth-first closure of the generators; see class comment for the
  // ordering guarantee. Throws CeilingExceeded past options.max_elements.
  static FiniteGroupTable closure(std::vector<E> generators,
                                  const ClosureOptions& options = {}) {
    if (generators.empty())
      throw RangeError("closure requires a nonempty generator list");
    std::sort(generators.begin(), generators.end(),
              [](const E& a, const E& b) { return a.key() < b.key(); });
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    FiniteGroupTable table;
    table.generators_ = generators;
    const E id = generators.front().identity();
    table.elements_.push_back(id);
    table.index_.insert(id.key(), 0);

    std::vector<E> level{id};
    while (!level.empty()) {
      std::vector<E> staged;
      for (const E& x : level) {
        for (const E& g : generators) {
          E p = x * g;
          if (!table.index_.insert(p.key(), 0)) continue;
          if (table.elements_.size() + staged.size() >= options.max_elements)
            throw CeilingExceeded(options.max_elements);
          staged.push_back(std::move(p));
        }
      }
      std::sort(staged.begin(), staged.end(),
                [](const E& a, const E& b) { return a.key() < b.key(); });
      table.elements_.reserve(table.elements_.size() + staged.size());
      for (const E& p : staged) {
        table.index_.assign(p.key(),
                            static_cast<std::uint32_t>(table.elements_.size()));
        table.elements_.push_back(p);
      }
      level = std::move(staged);
      if (options.progress) options.progress(table.elements_.size());
    }
    return table;
  }

  // Builds a table directly from an element list already known to be a
  // subgroup (e.g. a centralizer scan). The element order is preserved.
  static FiniteGroupTable from_subgroup_elements(std::vector<E> elements) {
    FiniteGroupTable table;
    table.generators_ = elements;
    table.elements_ = std::move(elements);
    table.index_.reserve(table.elements_.size());
    for (std::size_t i = 0; i < table.elements_.size(); ++i)
      table.index_.insert(table.elements_[i].key(),
                          static_cast<std::uint32_t>(i));
    return table;
  }

  // Exhaustive sanity check of the table invariants (test support; not
  // used on large groups).
  bool verify_closed() const {
    for (const E& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const E& b : elements_)
        if (!contains(a * b)) return false;
    }
    return true;
  }

 private:
  FiniteGroupTable() = default;
  std::vector<E> generators_;
  std::vector<E> elements_;
  detail::KeyIndexMap<Key> index_;
};

// Orbit of x under conjugation by all of G, returned sorted by key.
template <GroupElementLike E>
std::vector<E> conjugacy_class(const FiniteGroupTable<E>& group, const E& x) {
  if (!group.contains(x))
    throw NotInGroup("conjugacy_class: element not in group");
  std::vector<E> gen_inverses;
  for (const E& g : group.generators()) gen_inverses.push_back(g.inverse());

  detail::KeyIndexMap<typename E::Key> seen;
  seen.insert(x.key(), 0);
  std::vector<E> orbit{x};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const E y = orbit[head];
    for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
      E c = group.generators()[gi] * y * gen_inverses[gi];
      if (seen.insert(c.key(), 0)) orbit.push_back(std::move(c));
    }
  }
  return detail::sorted_by_key(std::move(orbit));
}

// Subgroup of all g in G commuting with x, in G's element order.
template <GroupElementLike E>
FiniteGroupTable<E> centralizer(const FiniteGroupTable<E>& group, const E& x,
                                int workers = 1) {
  if (!group.contains(x)) throw NotInGroup("centralizer: element not in group");
  auto idx =
      parallel_filter_indices(group.order(), workers, [&](std::size_t i) {
        const E& g = group.at(i);
        return g * x == x * g;
      });
  std::vector<E> elems;
  elems.reserve(idx.size());
  for (auto i : idx) elems.push_back(group.at(i));
  return FiniteGroupTable<E>::from_subgroup_elements(std::move(elems));
}

namespace detail {

// Subgroup BFS that only tracks membership. Returns nullopt as soon as
// the element count exceeds stop_above.
template <GroupElementLike E>
std::optional<std::vector<E>> bounded_subgroup_elements(
    const std::vector<E>& generators, std::uint64_t stop_above) {
  KeyIndexMap<typename E::Key> seen;
  const E id = generators.front().identity();
  std::vector<E> elements{id};
  seen.insert(id.key(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const E x = elements[head];
    for (const E& g : generators) {
      E p = x * g;
      if (!seen.insert(p.key(), 0)) continue;
      elements.push_back(std::move(p));
      if (elements.size() > stop_above) return std::nullopt;
    }
  }
  return elements;
}

// Accumulates generators of the normal closure of `seeds` in `group`:
// alternates subgroup closure with conjugation by the group's generators
// until stable. Returns the stable generator list, or nullopt if the
// closure ever exceeds stop_above elements.
template <GroupElementLike E>
std::optional<std::vector<E>> normal_generators(
    const FiniteGroupTable<E>& group, std::vector<E> seeds,
    std::uint64_t stop_above) {
  for (const E& s : seeds)
    if (!group.contains(s))
      throw NotInGroup("normal_closure: seed not in group");
  const E id = group.identity();
  std::erase_if(seeds, [&](const E& s) { return s == id; });
  if (seeds.empty()) return std::vector<E>{id};
  seeds = sorted_by_key(std::move(seeds));
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::vector<E> norm_gens = std::move(seeds);
  while (true) {
    auto sub = bounded_subgroup_elements(norm_gens, stop_above);
    if (!sub) return std::nullopt;
    KeyIndexMap<typename E::Key> member;
    for (std::size_t i = 0; i < sub->size(); ++i)
      member.insert((*sub)[i].key(), 0);
    std::vector<E> fresh;
    for (const E& t : norm_gens)
      for (const E& g : group.generators()) {
        E c = conjugate(t, g);
        if (!member.find(c.key())) fresh.push_back(std::move(c));
      }
    if (fresh.empty()) return norm_gens;
    norm_gens.insert(norm_gens.end(), fresh.begin(), fresh.end());
    norm_gens = sorted_by_key(std::move(norm_gens));
    norm_gens.erase(std::unique(norm_gens.begin(), norm_gens.end()),
                    norm_gens.end());
  }
}

}  // namespace detail

// Smallest normal subgroup of G containing S, as a table in canonical
// closure order generated by the accumulated normal generators.
template <GroupElementLike E>
FiniteGroupTable<E> normal_closure(const FiniteGroupTable<E>& group,
                                   const std::vector<E>& seeds) {
  auto gens = detail::normal_generators(group, seeds, group.order());
  ClosureOptions opts;
  opts.max_elements = static_cast<std::size_t>(group.order()) + 1;
  return FiniteGroupTable<E>::closure(std::move(*gens), opts);
}

// Order of the normal closure. Saturates to |G| as soon as more than half
// of G is reached (a proper subgroup cannot be that large, by Lagrange).
template <GroupElementLike E>
std::uint64_t normal_closure_order(const FiniteGroupTable<E>& group,
                                   const std::vector<E>& seeds) {
  auto gens = detail::normal_generators(group, seeds, group.order() / 2);
  if (!gens) return group.order();
  auto elements = detail::bounded_subgroup_elements(*gens, group.order() / 2);
  return elements ? elements->size() : group.order();
}

// One representative per conjugacy class, in table order (identity first).
template <GroupElementLike E>
std::vector<E> conjugacy_class_representatives(
    const FiniteGroupTable<E>& group) {
  std::vector<bool> seen(group.order(), false);
  std::vector<E> gen_inverses;
  for (const E& g : group.generators()) gen_inverses.push_back(g.inverse());
  std::vector<E> reps;
  std::vector<std::uint32_t> queue;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (seen[i]) continue;
    reps.push_back(group.at(i));
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(i));
    seen[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const E y = group.at(queue[head]);
      for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
        const std::uint32_t ci =
            group.index_of(group.generators()[gi] * y * gen_inverses[gi]);
        if (!seen[ci]) {
          seen[ci] = true;
          queue.push_back(ci);
        }
      }
    }
  }
  return reps;
}

struct SimplicityResult {
  bool simple = false;
  // When not simple: order of a proper nontrivial normal closure and the
  // index (in table order) of the witnessing class representative.
  std::uint64_t witness_order = 0;
  std::uint32_t witness_index = 0;
};

// Checks simplicity by sweeping normal closures of all non-identity
// conjugacy-class representatives. Representative jobs are independent;
// the reported witness is the first failure in table order for any
// worker count.
template <GroupElementLike E>
SimplicityResult simplicity_check(
    const FiniteGroupTable<E>& group, int workers = 1,
    const std::function<void(std::size_t, std::size_t)>& progress = {}) {
  if (group.order() <= 1)
    throw RangeError("is_simple requires a nontrivial group");
  std::vector<E> reps = conjugacy_class_representatives(group);
  // reps[0] is the identity.
  const std::size_t jobs = reps.size() - 1;
  std::vector<std::uint64_t> orders(jobs, 0);
  std::atomic<std::size_t> done{0};
  parallel_chunks(jobs, workers,
                  [&](std::size_t begin, std::size_t end, std::size_t) {
                    for (std::size_t j = begin; j < end; ++j) {
                      orders[j] = normal_closure_order(group, {reps[j + 1]});
                      if (progress) progress(++done, jobs);
                    }
                  });
  for (std::size_t j = 0; j < jobs; ++j) {
    if (orders[j] != group.order()) {
      if (group.order() % orders[j] != 0)
        throw Error("normal closure order does not divide the group order");
      return {false, orders[j], group.index_of(reps[j + 1])};
    }
  }
  return {true, 0, 0};
}

template <GroupElementLike E>
bool is_simple(const FiniteGroupTable<E>& group, int workers = 1) {
  return simplicity_check(group, workers).simple;
}

struct OrbitStabilizerCount {
  std::uint64_t orbit = 0;
  std::uint64_t stabilizer = 0;
};

// Conjugation action of G on itself: returns (|class of x|, |centralizer
// of x|) and asserts the product equals |G|.
template <GroupElementLike E>
OrbitStabilizerCount orbit_stabilizer(const FiniteGroupTable<E>& group,
                                      const E& x, int workers = 1) {
  OrbitStabilizerCount result;
  result.orbit = conjugacy_class(group, x).size();
  result.stabilizer = centralizer(group, x, workers).order();
  if (result.orbit * result.stabilizer != group.order())
    throw Error("orbit-stabilizer identity violated");
  return result;
}

// Conjugation action of G on ordered pairs of its elements.
template <GroupElementLike E>
OrbitStabilizerCount orbit_stabilizer_pair(const FiniteGroupTable<E>& group,
                                           const E& x, const E& y,
                                           int workers = 1) {
  if (!group.contains(x) || !group.contains(y))
    throw NotInGroup("orbit_stabilizer_pair: point outside the action domain");
  std::vector<E> gen_inverses;
  for (const E& g : group.generators()) gen_inverses.push_back(g.inverse());

  using PairKey = std::pair<typename E::Key, typename E::Key>;
  struct PairKeyHash {
    std::size_t operator()(const PairKey& p) const {
      std::size_t h = std::hash<typename E::Key>{}(p.first);
      h ^= std::hash<typename E::Key>{}(p.second) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
      return h;
    }
  };
  std::vector<std::pair<E, E>> orbit{{x, y}};
  std::unordered_set<PairKey, PairKeyHash> seen{{x.key(), y.key()}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const auto p = orbit[head];
    for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
      const E& g = group.generators()[gi];
      const E& g_inv = gen_inverses[gi];
      E a = g * p.first * g_inv;
      E b = g * p.second * g_inv;
      if (seen.insert({a.key(), b.key()}).second)
        orbit.emplace_back(std::move(a), std::move(b));
    }
  }

  auto stab = parallel_filter_indices(group.order(), workers,
                                      [&](std::size_t i) {
                                        const E& g = group.at(i);
                                        return g * x == x * g && g * y == y * g;
                                      });

  OrbitStabilizerCount result{orbit.size(), stab.size()};
  if (result.orbit * result.stabilizer != group.order())
    throw Error("orbit-stabilizer identity violated on pairs");
  return result;
}

}  // namespace minquot
