#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tsemi/error.hpp"

namespace tsemi {

/// A total map on {1..n}, stored as its image tuple.  Points are 0-based
/// internally; the text literal format `[i1,...,in]` is 1-based.  Values are
/// immutable and totally ordered (degree, then image tuple, lexicographic).
///
/// Composition follows the right-action convention: (x)(f * g) = ((x)f)g,
/// so f * g means "apply f first".
class Transformation {
 public:
  using point_type = std::uint16_t;

  explicit Transformation(std::vector<point_type> images)
      : images_(std::move(images)) {
    if (images_.empty()) {
      throw invalid_input_error("transformation degree must be positive");
    }
    for (point_type v : images_) {
      if (v >= images_.size()) {
        throw invalid_input_error("transformation image value out of range");
      }
    }
  }

  static Transformation identity(std::size_t n) {
    if (n == 0) {
      throw invalid_input_error("transformation degree must be positive");
    }
    std::vector<point_type> im(n);
    std::iota(im.begin(), im.end(), point_type{0});
    return Transformation(std::move(im));
  }

  std::size_t degree() const { return images_.size(); }

  /// Image of 0-based point i.
  point_type operator[](std::size_t i) const { return images_[i]; }

  const std::vector<point_type>& images() const { return images_; }

  friend bool operator==(const Transformation&,
                         const Transformation&) = default;
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(),
        b.images_.end());
  }

 private:
  std::vector<point_type> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : t.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

inline Transformation compose(const Transformation& f,
                              const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw invalid_input_error("cannot compose transformations of degrees " +
                              std::to_string(f.degree()) + " and " +
                              std::to_string(g.degree()));
  }
  std::vector<Transformation::point_type> im(f.degree());
  for (std::size_t i = 0; i < f.degree(); ++i) {
    im[i] = g[f[i]];
  }
  return Transformation(std::move(im));
}

inline Transformation operator*(const Transformation& f,
                                const Transformation& g) {
  return compose(f, g);
}

inline std::size_t rank(const Transformation& f) {
  std::vector<bool> seen(f.degree(), false);
  std::size_t r = 0;
  for (auto v : f.images()) {
    if (!seen[v]) {
      seen[v] = true;
      ++r;
    }
  }
  return r;
}

/// Sorted set of 0-based image points.
inline std::vector<Transformation::point_type> image(const Transformation& f) {
  std::vector<bool> seen(f.degree(), false);
  for (auto v : f.images()) {
    seen[v] = true;
  }
  std::vector<Transformation::point_type> out;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (seen[i]) {
      out.push_back(static_cast<Transformation::point_type>(i));
    }
  }
  return out;
}

/// Kernel of f as a partition of {0..n-1}: blocks of points with equal
/// image, each block sorted, blocks ordered by their least point.
inline std::vector<std::vector<Transformation::point_type>> kernel(
    const Transformation& f) {
  std::vector<int> block_of(f.degree(), -1);
  std::vector<std::vector<Transformation::point_type>> blocks;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    auto v = f[i];
    if (block_of[v] < 0) {
      block_of[v] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[v]].push_back(static_cast<Transformation::point_type>(i));
  }
  return blocks;
}

inline bool is_permutation(const Transformation& f) {
  return rank(f) == f.degree();
}

inline bool is_idempotent(const Transformation& f) {
  for (auto v : image(f)) {
    if (f[v] != v) {
      return false;
    }
  }
  return true;
}

/// True iff <f> is a group, i.e. f acts as a bijection on its image.
/// Equivalent to rank(f * f) == rank(f).
inline bool is_group_generator(const Transformation& f) {
  std::vector<bool> hit(f.degree(), false);
  for (auto v : image(f)) {
    auto w = f[v];
    if (hit[w]) {
      return false;
    }
    hit[w] = true;
  }
  return true;
}

/// p^-1 f p under the right-action convention; p must be a permutation of
/// the same degree.
inline Transformation conjugate(const Transformation& f,
                                const Transformation& p) {
  if (p.degree() != f.degree()) {
    throw invalid_input_error("conjugating permutation has wrong degree");
  }
  if (!is_permutation(p)) {
    throw invalid_input_error("conjugation requires a permutation");
  }
  std::vector<Transformation::point_type> pinv(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) {
    pinv[p[i]] = static_cast<Transformation::point_type>(i);
  }
  std::vector<Transformation::point_type> im(f.degree());
  for (std::size_t x = 0; x < f.degree(); ++x) {
    im[x] = p[f[pinv[x]]];
  }
  return Transformation(std::move(im));
}

/// Parses the text literal `[i1,i2,...,in]` (1-based, whitespace ignored).
inline Transformation parse_transformation(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') {
    throw invalid_input_error("malformed transformation literal: " + text);
  }
  std::vector<long> raw;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos || end > s.size() - 1) {
      end = s.size() - 1;
    }
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw invalid_input_error("malformed transformation literal: " + text);
    }
    raw.push_back(std::stol(tok));
    pos = end + 1;
  }
  const long n = static_cast<long>(raw.size());
  std::vector<Transformation::point_type> im;
  im.reserve(raw.size());
  for (long v : raw) {
    if (v < 1 || v > n) {
      throw invalid_input_error("image value out of range in literal: " + text);
    }
    im.push_back(static_cast<Transformation::point_type>(v - 1));
  }
  return Transformation(std::move(im));
}

inline std::string to_literal(const Transformation& f) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << f[i] + 1;
  }
  out << ']';
  return out.str();
}

}  // namespace tsemi
