#include "minquot/hom.hpp"

#include <algorithm>

namespace minquot {

PermTablePtr symmetric_group(int n) {
  if (n < 1 || n > 8)
    throw RangeError("symmetric_group supports 1 <= n <= 8");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::identity_of(1));
  } else {
    for (int i = 1; i < n; ++i)
      gens.push_back(Permutation::from_cycles(
          "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n));
  }
  return std::make_shared<const PermTable>(PermTable::closure(std::move(gens)));
}

PermTablePtr alternating_group(int n) {
  if (n < 3 || n > 8)
    throw RangeError("alternating_group supports 3 <= n <= 8");
  std::vector<Permutation> gens;
  for (int i = 1; i + 2 <= n; ++i)
    gens.push_back(Permutation::from_cycles(
        "(" + std::to_string(i) + " " + std::to_string(i + 1) + " " +
            std::to_string(i + 2) + ")",
        n));
  return std::make_shared<const PermTable>(PermTable::closure(std::move(gens)));
}

BraidHom<Permutation> standard_projection(int n, PermTablePtr table) {
  if (n < 2 || n > 7)
    throw RangeError("standard_projection supports 2 <= n <= 7");
  if (!table) table = symmetric_group(n);
  std::vector<Permutation> images;
  for (int i = 1; i < n; ++i)
    images.push_back(Permutation::from_cycles(
        "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n));
  auto h = make_braid_hom(n, std::move(table), std::move(images));
  if (!h.valid) throw Error("standard projection failed validation");
  return h;
}

BraidHom<Permutation> exceptional_b4_map(int k, PermTablePtr s4) {
  if (k < 1 || k > 4) throw RangeError("exceptional_b4_map expects k in 1..4");
  if (!s4) s4 = symmetric_group(4);
  // Generator pairs (sigma_1, alpha) with alpha = s3 s2 s1; the sigma
  // images follow from sigma_{i+1} = alpha^{-1} sigma_i alpha.
  Permutation s, a;
  switch (k) {
    case 1:
      s = Permutation::from_cycles("(1 2 3 4)", 4);
      a = Permutation::from_cycles("(1 2)", 4);
      break;
    case 2:
      s = Permutation::from_cycles("(1 3 2 4)", 4);
      a = Permutation::from_cycles("(1 2 3 4)", 4);
      break;
    case 3:
      s = Permutation::from_cycles("(1 2 3)", 4);
      a = Permutation::from_cycles("(1 2)(3 4)", 4);
      break;
    default:
      s = Permutation::from_cycles("(1 2)", 4);
      a = Permutation::from_cycles("(1 3)", 4);
      break;
  }
  const Permutation a_inv = a.inverse();
  const Permutation x1 = s;
  const Permutation x2 = a_inv * x1 * a;
  const Permutation x3 = a_inv * x2 * a;
  auto h = make_braid_hom(4, std::move(s4), {x1, x2, x3});
  if (!h.valid)
    throw Error("exceptional B4 map " + std::to_string(k) +
                " failed the braid relations");
  if (!(x3 * x2 * x1 == a))
    throw Error("exceptional B4 map " + std::to_string(k) +
                " does not recover its alpha image");
  return h;
}

BraidHom<Permutation> b4_collapse_to_s3(PermTablePtr s3) {
  if (!s3) s3 = symmetric_group(3);
  auto h = make_braid_hom(4, std::move(s3),
                          {Permutation::from_cycles("(1 2)", 3),
                           Permutation::from_cycles("(2 3)", 3),
                           Permutation::from_cycles("(1 2)", 3)});
  if (!h.valid) throw Error("B4 collapse map failed validation");
  return h;
}

GroupAutomorphism automorphism_from_generator_images(
    PermTablePtr group, const std::vector<Permutation>& gens,
    const std::vector<Permutation>& images) {
  if (gens.empty() || gens.size() != images.size())
    throw RangeError("need matching nonempty generator/image lists");
  const std::size_t order = group->order();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> mapping(order, kUnset);

  // Graph closure of the assignment inside G x G: if the images violate a
  // relation satisfied by the generators, some element would need two
  // different images.
  const std::uint32_t id = group->index_of(group->identity());
  mapping[id] = id;
  std::vector<std::uint32_t> queue{id};
  std::size_t mapped = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t xi = queue[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const std::uint32_t xg = group->index_of(group->at(xi) * gens[gi]);
      const std::uint32_t yg =
          group->index_of(group->at(mapping[xi]) * images[gi]);
      if (mapping[xg] == kUnset) {
        mapping[xg] = yg;
        queue.push_back(xg);
        ++mapped;
      } else if (mapping[xg] != yg) {
        throw Error("generator images do not define a homomorphism");
      }
    }
  }
  if (mapped != order)
    throw Error("generators do not generate the group");
  std::vector<bool> hit(order, false);
  for (std::uint32_t v : mapping) {
    if (hit[v]) throw Error("generator images define a non-bijective map");
    hit[v] = true;
  }
  return {std::move(group), std::move(mapping)};
}

GroupAutomorphism s6_outer_automorphism(PermTablePtr s6) {
  if (!s6) s6 = symmetric_group(6);
  if (s6->order() != 720)
    throw RangeError("s6_outer_automorphism needs the full symmetric group on 6 points");
  const std::vector<Permutation> gens{
      Permutation::from_cycles("(1 2)", 6),
      Permutation::from_cycles("(1 2 3 4 5 6)", 6)};
  const std::vector<Permutation> images{
      Permutation::from_cycles("(1 2)(3 4)(5 6)", 6),
      Permutation::from_cycles("(1 2 3)(4 5)", 6)};
  return automorphism_from_generator_images(std::move(s6), gens, images);
}

bool is_inner(const GroupAutomorphism& a) {
  const auto& group = *a.group;
  for (std::size_t ci = 0; ci < group.order(); ++ci) {
    const Permutation& c = group.at(ci);
    const Permutation c_inv = c.inverse();
    bool match = true;
    for (const Permutation& g : group.generators())
      if (!(a.apply(g) == c * g * c_inv)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

BraidHom<Permutation> postcompose(const BraidHom<Permutation>& h,
                                  const GroupAutomorphism& a) {
  std::vector<Permutation> images;
  images.reserve(h.images.size());
  for (const Permutation& x : h.images) images.push_back(a.apply(x));
  auto out = make_braid_hom(h.n, h.target, std::move(images));
  if (!out.valid)
    throw Error("postcomposition with an automorphism broke validity");
  return out;
}

bool equal_up_to_aut(const BraidHom<Permutation>& h1,
                     const BraidHom<Permutation>& h2) {
  if (!h1.valid || !h2.valid)
    throw InvalidHom("equal_up_to_aut requires valid homomorphisms");
  if (h1.target->order() != h2.target->order() ||
      h1.images[0].degree() != h2.images[0].degree())
    throw DimensionMismatch("equal_up_to_aut: homs over different targets");
  if (h1.n != h2.n) return false;
  const auto key2 = detail::tuple_key(canonicalize(h2).representative.images);
  if (detail::tuple_key(canonicalize(h1).representative.images) == key2)
    return true;
  // Degree-6 full symmetric target: also try the outer twist.
  const int degree = h1.images[0].degree();
  std::uint64_t factorial = 1;
  for (int i = 2; i <= degree; ++i) factorial *= i;
  if (degree == 6 && h1.target->order() == factorial) {
    const auto outer = s6_outer_automorphism(h1.target);
    const auto twisted = canonicalize(postcompose(h1, outer));
    return detail::tuple_key(twisted.representative.images) == key2;
  }
  return false;
}

}  // namespace minquot
