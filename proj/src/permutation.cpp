#include "minquot/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minquot {

Permutation Permutation::identity_of(int degree) {
  if (degree < 1 || degree > 255)
    throw RangeError("permutation degree must be in 1..255, got " +
                     std::to_string(degree));
  std::vector<std::uint8_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  const int n = static_cast<int>(one_based.size());
  if (n < 1 || n > 255)
    throw RangeError("permutation degree must be in 1..255, got " +
                     std::to_string(n));
  std::vector<std::uint8_t> im(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = one_based[i];
    if (v < 1 || v > n || seen[v - 1])
      throw InvalidWord("image array is not a bijection on 1.." +
                        std::to_string(n));
    seen[v - 1] = true;
    im[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  Permutation result = identity_of(degree);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidWord("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && (text[pos] == ',')) { ++pos; continue; }
      skip_ws();
      if (pos >= text.size())
        throw InvalidWord("unterminated cycle in: " + text);
      if (text[pos] == ')') { ++pos; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidWord("expected point or ')' in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree)
        throw InvalidWord("point " + std::to_string(v) +
                          " out of range 1.." + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw InvalidWord("repeated point " + std::to_string(v) +
                          " in cycle: " + text);
      cycle.push_back(v);
    }
    if (cycle.size() >= 2) {
      std::vector<int> im(degree);
      for (int i = 0; i < degree; ++i) im[i] = i + 1;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        im[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      result = result * from_images(im);
    }
    any = true;
    skip_ws();
  }
  if (!any && !text.empty())
    throw InvalidWord("empty cycle notation: " + text);
  return result;
}

int Permutation::apply(int point) const {
  if (point < 1 || point > degree())
    throw RangeError("point out of range");
  return images_[point - 1] + 1;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw DimensionMismatch("permutation degrees differ: " +
                            std::to_string(degree()) + " vs " +
                            std::to_string(rhs.degree()));
  std::vector<std::uint8_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[i] = rhs.images_[images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(im));
}

std::vector<int> Permutation::to_images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool printed = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out << '(';
    std::size_t p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (p + 1);
      seen[p] = true;
      p = images_[p];
      first = false;
    } while (p != start);
    out << ')';
    printed = true;
  }
  if (!printed) return "()";
  return out.str();
}

}  // namespace minquot
