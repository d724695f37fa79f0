#include "minquot/gf2.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace minquot {

GF2Vector::GF2Vector(int length, std::uint32_t bits) : length(length), bits(bits) {
  if (length <= 0 || length % 2 != 0 || length > 8)
    throw RangeError("GF2Vector length must be even and in 2..8, got " +
                     std::to_string(length));
  if (bits >> length)
    throw RangeError("GF2Vector bits exceed the stated length");
}

GF2Vector GF2Vector::basis(int length, int index) {
  if (index < 0 || index >= length) throw RangeError("basis index out of range");
  return GF2Vector(length, 1u << index);
}

GF2Vector GF2Vector::operator+(const GF2Vector& rhs) const {
  if (length != rhs.length)
    throw DimensionMismatch("GF2Vector lengths differ");
  return GF2Vector(length, bits ^ rhs.bits);
}

std::string GF2Vector::to_string() const {
  std::string s(length, '0');
  for (int i = 0; i < length; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool symplectic_form(const GF2Vector& u, const GF2Vector& v) {
  if (u.length != v.length)
    throw DimensionMismatch("symplectic_form: lengths differ");
  // Pair (2i, 2i+1): swap adjacent bits of v and take <u, v_swapped>.
  const std::uint32_t swapped =
      ((v.bits & 0x55555555u) << 1) | ((v.bits & 0xaaaaaaaau) >> 1);
  return std::popcount(u.bits & swapped) & 1;
}

GF2Matrix GF2Matrix::identity_of(int dim) {
  if (dim <= 0 || dim > 8)
    throw RangeError("GF2Matrix dimension must be in 1..8");
  GF2Matrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.rows[i] = static_cast<std::uint8_t>(1u << i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(int dim, const std::vector<std::uint32_t>& rows) {
  if (dim <= 0 || dim > 8 || static_cast<int>(rows.size()) != dim)
    throw RangeError("GF2Matrix: need dim rows, dim in 1..8");
  GF2Matrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) {
    if (rows[i] >> dim) throw RangeError("GF2Matrix row exceeds dimension");
    m.rows[i] = static_cast<std::uint8_t>(rows[i]);
  }
  return m;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
  if (dim != rhs.dim) throw DimensionMismatch("GF2Matrix dimensions differ");
  GF2Matrix out;
  out.dim = dim;
  for (int i = 0; i < dim; ++i) {
    std::uint8_t r = rows[i], acc = 0;
    while (r) {
      acc ^= rhs.rows[std::countr_zero(r)];
      r &= static_cast<std::uint8_t>(r - 1);
    }
    out.rows[i] = acc;
  }
  return out;
}

GF2Matrix GF2Matrix::inverse() const {
  // Gauss-Jordan on [M | I].
  std::array<std::uint8_t, 8> a = rows, inv{};
  for (int i = 0; i < dim; ++i) inv[i] = static_cast<std::uint8_t>(1u << i);
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r)
      if ((a[r] >> col) & 1u) { pivot = r; break; }
    if (pivot < 0) throw Error("GF2Matrix::inverse: matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < dim; ++r) {
      if (r != col && ((a[r] >> col) & 1u)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  GF2Matrix out;
  out.dim = dim;
  out.rows = inv;
  return out;
}

GF2Matrix::Key GF2Matrix::key() const {
  Key k = static_cast<Key>(dim);
  for (int i = 0; i < dim; ++i) k = (k << 8) | rows[i];
  return k;
}

std::vector<std::string> GF2Matrix::to_row_strings() const {
  std::vector<std::string> out;
  out.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    std::string s(dim, '0');
    for (int j = 0; j < dim; ++j)
      if ((rows[i] >> j) & 1u) s[j] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

GF2Vector apply(const GF2Matrix& m, const GF2Vector& x) {
  if (m.dim != x.length)
    throw DimensionMismatch("apply: matrix and vector sizes differ");
  std::uint32_t acc = 0, r = x.bits;
  while (r) {
    acc ^= m.rows[std::countr_zero(r)];
    r &= r - 1;
  }
  return GF2Vector(x.length, acc);
}

GF2Matrix transvection(const GF2Vector& v) {
  if (v.is_zero()) throw RangeError("transvection requires a nonzero vector");
  GF2Matrix m;
  m.dim = v.length;
  for (int i = 0; i < v.length; ++i) {
    std::uint32_t row = 1u << i;
    if (symplectic_form(GF2Vector(v.length, row), v)) row ^= v.bits;
    m.rows[i] = static_cast<std::uint8_t>(row);
  }
  return m;
}

bool transvection_vector(const GF2Matrix& m, GF2Vector* out) {
  // Rows of M - I are either 0 or all equal to the defining vector.
  std::uint8_t v = 0;
  for (int i = 0; i < m.dim; ++i) {
    const std::uint8_t d = m.rows[i] ^ static_cast<std::uint8_t>(1u << i);
    if (d == 0) continue;
    if (v == 0)
      v = d;
    else if (v != d)
      return false;
  }
  if (v == 0) return false;  // identity is not a transvection
  GF2Vector candidate(m.dim, v);
  if (!(transvection(candidate) == m)) return false;
  if (out) *out = candidate;
  return true;
}

bool is_symplectic(const GF2Matrix& m) {
  if (m.dim % 2 != 0) throw RangeError("is_symplectic requires even dimension");
  for (int i = 0; i < m.dim; ++i) {
    const GF2Vector ri(m.dim, m.rows[i]);
    for (int j = i + 1; j < m.dim; ++j) {
      const GF2Vector rj(m.dim, m.rows[j]);
      const bool expected =
          symplectic_form(GF2Vector::basis(m.dim, i), GF2Vector::basis(m.dim, j));
      if (symplectic_form(ri, rj) != expected) return false;
    }
  }
  return true;
}

std::uint64_t sp_order_formula(int g) {
  std::uint64_t order = 1;
  for (int i = 0; i < g * g; ++i) order *= 2;
  for (int i = 1; i <= g; ++i) order *= ((1ull << (2 * i)) - 1);
  return order;
}

FiniteGroupTable<GF2Matrix> sp_group(int g, const ClosureOptions& options) {
  if (g < 1 || g > 3)
    throw RangeError("sp_group supports 1 <= g <= 3, got " + std::to_string(g));
  const int dim = 2 * g;
  std::vector<GF2Matrix> gens;
  for (std::uint32_t v = 1; v < (1u << dim); ++v)
    gens.push_back(transvection(GF2Vector(dim, v)));
  auto table = FiniteGroupTable<GF2Matrix>::closure(std::move(gens), options);
  if (table.order() != sp_order_formula(g))
    throw Error("sp_group order disagrees with the product formula");
  return table;
}

std::vector<QuadraticRefinement> quadratic_refinements(int g) {
  if (g < 1 || g > 3) throw RangeError("quadratic_refinements supports g <= 3");
  const int dim = 2 * g;
  const std::uint32_t space = 1u << dim;
  std::vector<QuadraticRefinement> out;
  out.reserve(space);
  // A refinement is determined by its values on the basis vectors.
  for (std::uint32_t basis_values = 0; basis_values < space; ++basis_values) {
    QuadraticRefinement q;
    q.g = g;
    std::vector<bool> val(space, false);
    for (std::uint32_t x = 1; x < space; ++x) {
      const int b = std::countr_zero(x);
      const std::uint32_t rest = x & (x - 1);
      const bool qb = (basis_values >> b) & 1u;
      if (rest == 0) {
        val[x] = qb;
      } else {
        val[x] = qb ^ val[rest] ^
                 symplectic_form(GF2Vector::basis(dim, b), GF2Vector(dim, rest));
      }
    }
    for (std::uint32_t x = 0; x < space; ++x)
      if (val[x]) q.values |= (1ull << x);
    out.push_back(q);
  }
  std::sort(out.begin(), out.end(),
            [](const QuadraticRefinement& a, const QuadraticRefinement& b) {
              return a.values < b.values;
            });
  return out;
}

bool arf(const QuadraticRefinement& q) {
  const std::uint32_t space = 1u << (2 * q.g);
  const int ones = std::popcount(q.values);
  const int zeros = static_cast<int>(space) - ones;
  return !(zeros > static_cast<int>(space) / 2);
}

std::string QuadraticRefinement::to_string() const {
  const std::uint32_t space = 1u << (2 * g);
  std::string s(space, '0');
  for (std::uint32_t x = 0; x < space; ++x)
    if (value_at(x)) s[x] = '1';
  return s;
}

QuadraticRefinement sp_refinement_action(const GF2Matrix& m,
                                         const QuadraticRefinement& q) {
  if (m.dim != 2 * q.g)
    throw DimensionMismatch("sp_refinement_action: sizes differ");
  const GF2Matrix minv = m.inverse();
  const std::uint32_t space = 1u << m.dim;
  QuadraticRefinement out;
  out.g = q.g;
  for (std::uint32_t x = 0; x < space; ++x) {
    const GF2Vector y = apply(minv, GF2Vector(m.dim, x));
    if (q.value_at(y.bits)) out.values |= (1ull << x);
  }
  return out;
}

GF2Vector witness_vector(const GF2Vector& v, const GF2Vector& w) {
  if (v.length != w.length)
    throw DimensionMismatch("witness_vector: lengths differ");
  if (v == w || v.is_zero() || w.is_zero())
    throw RangeError("witness_vector requires distinct nonzero vectors");
  for (std::uint32_t u = 1; u < (1u << v.length); ++u) {
    const GF2Vector cand(v.length, u);
    if (symplectic_form(cand, v) && !symplectic_form(cand, w)) return cand;
  }
  throw Error("witness_vector: no witness exists (should be impossible)");
}

SymplecticToSymmetric iso_to_symmetric(int g,
                                       const FiniteGroupTable<GF2Matrix>& sp) {
  if (g != 1 && g != 2)
    throw RangeError("iso_to_symmetric supports g in {1, 2}");
  // g = 1: Sp permutes the 3 even forms (the odd one is alone in its
  // class); g = 2: it permutes the 6 odd forms.
  const bool wanted_arf = (g == 2);
  SymplecticToSymmetric out;
  out.g = g;
  for (const auto& q : quadratic_refinements(g))
    if (arf(q) == wanted_arf) out.forms.push_back(q);
  const int count = static_cast<int>(out.forms.size());

  auto induced = [&](const GF2Matrix& m) {
    std::vector<int> images(count);
    for (int i = 0; i < count; ++i) {
      const QuadraticRefinement moved = sp_refinement_action(m, out.forms[i]);
      auto it = std::find(out.forms.begin(), out.forms.end(), moved);
      if (it == out.forms.end())
        throw Error("refinement action left the Arf class");
      images[i] = static_cast<int>(it - out.forms.begin()) + 1;
    }
    return Permutation::from_images(images);
  };

  out.images.reserve(sp.order());
  std::unordered_set<std::string> distinct;
  for (std::size_t i = 0; i < sp.order(); ++i) {
    out.images.push_back(induced(sp.at(i)));
    distinct.insert(out.images.back().key());
  }
  if (distinct.size() != sp.order())
    throw Error("refinement action is not injective");
  // Homomorphism check on (element, generator) pairs, which extends to
  // all products by induction on word length.
  for (std::size_t i = 0; i < sp.order(); ++i) {
    for (const GF2Matrix& gen : sp.generators()) {
      const std::uint32_t pi = sp.index_of(sp.at(i) * gen);
      if (!(out.images[pi] ==
            out.images[i] * out.images[sp.index_of(gen)]))
        throw Error("refinement action is not a homomorphism");
    }
  }
  std::vector<Permutation> perm_gens;
  for (const GF2Matrix& gen : sp.generators())
    perm_gens.push_back(out.images[sp.index_of(gen)]);
  const auto image_group = FiniteGroupTable<Permutation>::closure(perm_gens);
  std::uint64_t factorial = 1;
  for (int i = 2; i <= count; ++i) factorial *= i;
  if (image_group.order() != sp.order() || image_group.order() != factorial)
    throw Error("refinement action image is not the full symmetric group");
  return out;
}

SpCountingReport sp_counting_checks(int g,
                                    const FiniteGroupTable<GF2Matrix>& sp,
                                    const FiniteGroupTable<GF2Matrix>& sp_prev,
                                    int workers) {
  if (g < 2 || g > 3)
    throw RangeError("sp_counting_checks supports 2 <= g <= 3");
  const int dim = 2 * g;
  const std::uint32_t space = 1u << dim;
  SpCountingReport report;
  report.g = g;
  report.sp_order = sp.order();
  report.sp_prev_order = sp_prev.order();

  for (std::uint32_t v = 0; v < space; ++v)
    for (std::uint32_t w = 0; w < space; ++w)
      if (symplectic_form(GF2Vector(dim, v), GF2Vector(dim, w)))
        ++report.pair_count;
  const std::uint64_t expected_pairs =
      (1ull << (dim - 1)) * ((1ull << dim) - 1);
  report.pair_count_ok = report.pair_count == expected_pairs;

  // Orbit of (e1, e2) under the simultaneous row action on vector pairs.
  {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::pair<GF2Vector, GF2Vector>> orbit;
    const auto push = [&](const GF2Vector& a, const GF2Vector& b) {
      if (seen.insert((a.bits << dim) | b.bits).second) orbit.emplace_back(a, b);
    };
    push(GF2Vector::basis(dim, 0), GF2Vector::basis(dim, 1));
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const auto p = orbit[head];
      for (const GF2Matrix& gen : sp.generators())
        push(apply(gen, p.first), apply(gen, p.second));
    }
    report.pair_orbit = orbit.size();
  }
  report.transitive_ok = report.pair_orbit == report.pair_count;

  report.order_identity_ok =
      report.sp_order == report.pair_count * report.sp_prev_order;

  const GF2Matrix t1 = transvection(GF2Vector::basis(dim, 0));
  const GF2Matrix t2 = transvection(GF2Vector::basis(dim, 1));
  const auto counts = orbit_stabilizer_pair(sp, t1, t2, workers);
  report.conj_pair_orbit = counts.orbit;
  report.conj_pair_stabilizer = counts.stabilizer;
  report.stabilizer_ok = report.conj_pair_stabilizer == report.sp_prev_order;
  return report;
}

SpCountingReport sp_counting_checks(int g, int workers) {
  const auto sp = sp_group(g);
  const auto sp_prev = sp_group(g - 1);
  return sp_counting_checks(g, sp, sp_prev, workers);
}

}  // namespace minquot
