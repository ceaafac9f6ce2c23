#pragma once

// Permutations of {0, ..., degree-1} stored by image table, plus the
// cycle-notation grammar used by the CLI group spec: cycles "(a b c)" with
// whitespace-separated 1-based points, concatenated; "()" is the identity.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "brownlab/defs.hpp"

namespace brownlab {

class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw std::invalid_argument("permutation image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Right-action composition: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& other) const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[i] = other.images_[images_[i]];
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<int> images_;
};

// Disjoint-cycle text with 1-based points; unmentioned points stay fixed.
inline Permutation parse_permutation(const std::string& cycle_text, int degree) {
  if (degree <= 0) throw parse_error("degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < cycle_text.size() && std::isspace(static_cast<unsigned char>(cycle_text[i]))) ++i;
  };
  skip_ws();
  if (i == cycle_text.size()) throw parse_error("empty cycle text");
  bool saw_cycle = false;
  while (i < cycle_text.size()) {
    if (cycle_text[i] != '(') throw parse_error("expected '(' in cycle text: " + cycle_text);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == cycle_text.size()) throw parse_error("unterminated cycle: " + cycle_text);
      if (cycle_text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(cycle_text[i])))
        throw parse_error("unexpected character in cycle text: " + cycle_text);
      int point = 0;
      while (i < cycle_text.size() && std::isdigit(static_cast<unsigned char>(cycle_text[i]))) {
        point = point * 10 + (cycle_text[i] - '0');
        ++i;
      }
      if (point < 1 || point > degree)
        throw parse_error("point " + std::to_string(point) + " out of range 1.." +
                          std::to_string(degree));
      if (used[point - 1])
        throw parse_error("point " + std::to_string(point) + " repeated across cycles");
      used[point - 1] = 1;
      cycle.push_back(point - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle) throw parse_error("no cycles found in: " + cycle_text);
  return Permutation(std::move(im));
}

// Canonical cycle form: cycles ordered by least moved point, each starting
// at its least point, 1-based. Identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int s = 0; s < p.degree(); ++s) {
    if (done[s] || p.apply(s) == s) continue;
    out += '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      done[x] = 1;
      x = p.apply(x);
      first = false;
    } while (x != s);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace brownlab
