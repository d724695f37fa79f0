#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "minquot/errors.hpp"
#include "minquot/group_table.hpp"
#include "minquot/permutation.hpp"

namespace minquot {

// Vector over F_2 of even length 2g (g <= 4), packed little-endian:
// coordinate i (0-based) is bit i. Coordinates pair symplectically as
// (0,1), (2,3), ... which is the 1-based pairing (1,2), (3,4), ...
struct GF2Vector {
  int length = 0;
  std::uint32_t bits = 0;

  GF2Vector() = default;
  GF2Vector(int length, std::uint32_t bits);
  static GF2Vector basis(int length, int index);  // e_index, 0-based

  bool get(int i) const { return (bits >> i) & 1u; }
  bool is_zero() const { return bits == 0; }

  GF2Vector operator+(const GF2Vector& rhs) const;
  bool operator==(const GF2Vector& rhs) const = default;
  std::string to_string() const;  // e.g. "1100"
};

// ω(u, v) under the adjacent-coordinate pairing.
bool symplectic_form(const GF2Vector& u, const GF2Vector& v);

// Square matrix over F_2, dim <= 8, acting on ROW vectors: apply(M, x)
// is x * M, and the group product A * B ("apply A first") is the plain
// row-convention matrix product.
struct GF2Matrix {
  using Key = std::uint64_t;

  int dim = 0;
  std::array<std::uint8_t, 8> rows{};  // rows[i] bit j = entry (i, j)

  GF2Matrix() = default;
  static GF2Matrix identity_of(int dim);
  static GF2Matrix from_rows(int dim, const std::vector<std::uint32_t>& rows);

  GF2Matrix operator*(const GF2Matrix& rhs) const;
  GF2Matrix inverse() const;  // throws Error if singular
  GF2Matrix identity() const { return identity_of(dim); }

  bool operator==(const GF2Matrix& rhs) const = default;
  Key key() const;

  std::vector<std::string> to_row_strings() const;
};

// x |-> x * M.
GF2Vector apply(const GF2Matrix& m, const GF2Vector& x);

// The transvection T_v : x |-> x + ω(x, v)·v. Requires v != 0.
GF2Matrix transvection(const GF2Vector& v);

// If M is a transvection, returns its defining vector (the common nonzero
// row of M - I); empty optional otherwise.
bool transvection_vector(const GF2Matrix& m, GF2Vector* out);

// True iff ω(e_i M, e_j M) = ω(e_i, e_j) for all basis pairs.
bool is_symplectic(const GF2Matrix& m);

// Sp(2g, F_2) as the closure of all 2^{2g}-1 transvections, 1 <= g <= 3.
// The order is cross-checked against sp_order_formula.
FiniteGroupTable<GF2Matrix> sp_group(int g, const ClosureOptions& options = {});

// Independent order oracle: 2^{g^2} * prod_{i=1..g} (4^i - 1).
std::uint64_t sp_order_formula(int g);

// A function q : F_2^{2g} -> F_2 with q(0) = 0 and
// q(x+y) = q(x) + q(y) + ω(x,y).
struct QuadraticRefinement {
  int g = 0;
  std::uint64_t values = 0;  // bit x = q(x), 2^{2g} entries, g <= 3

  bool value_at(std::uint32_t x) const { return (values >> x) & 1u; }
  bool operator==(const QuadraticRefinement& rhs) const = default;
  std::string to_string() const;
};

// All 2^{2g} refinements of ω, ordered by their value table. g <= 3.
std::vector<QuadraticRefinement> quadratic_refinements(int g);

// Arf invariant by majority count: 0 iff q vanishes on more than half of
// F_2^{2g}.
bool arf(const QuadraticRefinement& q);

// (M·q)(x) = q(x · M^{-1}); a left action for the library's composition
// convention.
QuadraticRefinement sp_refinement_action(const GF2Matrix& m,
                                         const QuadraticRefinement& q);

// First u in increasing bit order with ω(u, v) = 1 and ω(u, w) = 0.
// Requires v != w, both nonzero; such a u always exists.
GF2Vector witness_vector(const GF2Vector& v, const GF2Vector& w);

// The faithful permutation action of Sp(2g, F_2) on one Arf class of
// refinements: the 3 even forms for g = 1, the 6 odd forms for g = 2.
// images[i] is the permutation induced by sp.at(i) on `forms`.
struct SymplecticToSymmetric {
  int g = 0;
  std::vector<QuadraticRefinement> forms;  // acted-on class, sorted by table
  std::vector<Permutation> images;         // aligned with sp element order
};

// Builds the action and asserts it is a homomorphism with trivial kernel
// and full symmetric image (order 6 for g = 1, 720 for g = 2).
SymplecticToSymmetric iso_to_symmetric(int g,
                                       const FiniteGroupTable<GF2Matrix>& sp);

// Counting identities tying Sp(2g, F_2) to Sp(2g-2, F_2), 2 <= g <= 3.
struct SpCountingReport {
  int g = 0;
  std::uint64_t pair_count = 0;       // ordered (v, w) with ω(v, w) = 1
  std::uint64_t pair_orbit = 0;       // orbit of (e1, e2) on vector pairs
  std::uint64_t sp_order = 0;
  std::uint64_t sp_prev_order = 0;
  std::uint64_t conj_pair_orbit = 0;  // of (T_{e1}, T_{e2}) under conjugation
  std::uint64_t conj_pair_stabilizer = 0;
  bool pair_count_ok = false;         // == 2^{2g-1}(2^{2g}-1)
  bool transitive_ok = false;         // pair_orbit == pair_count
  bool order_identity_ok = false;     // sp_order == pair_count * sp_prev_order
  bool stabilizer_ok = false;         // conj_pair_stabilizer == sp_prev_order
  bool pass() const {
    return pair_count_ok && transitive_ok && order_identity_ok && stabilizer_ok;
  }
};

SpCountingReport sp_counting_checks(int g,
                                    const FiniteGroupTable<GF2Matrix>& sp,
                                    const FiniteGroupTable<GF2Matrix>& sp_prev,
                                    int workers = 1);
SpCountingReport sp_counting_checks(int g, int workers = 1);

}  // namespace minquot
