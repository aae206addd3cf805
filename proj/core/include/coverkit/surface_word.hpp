#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coverkit {

// Alphabet B = {x, y, x', y'} and inverses, encoded x X y Y a A b B.
// The shortlex order used for canonical forms is that listing order.
inline constexpr std::string_view kSurfaceAlphabet = "xXyYaAbB";
inline constexpr int kDefaultMaxRadius = 8;

// u v^{-1} with u = [x,y] and v = [y',x'].
inline constexpr std::string_view kSurfaceRelator = "xyXYabAB";

class SurfaceWord {
 public:
  SurfaceWord() = default;
  // Throws PreconditionError on letters outside the alphabet. Applies free
  // reduction only.
  explicit SurfaceWord(std::string_view letters, bool canonical = false);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool canonical() const { return canonical_; }

  SurfaceWord inverse() const;
  friend SurfaceWord operator*(const SurfaceWord& a, const SurfaceWord& b);
  friend bool operator==(const SurfaceWord& a, const SurfaceWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::string letters_;
  bool canonical_ = false;
};

// Dehn's algorithm: free reduction plus replacement of any subword that is
// more than half of a cyclic conjugate of the relator or its inverse.
std::string dehn_reduce(std::string_view letters);

// Exact word problem: w1 = w2 in SG2.
bool same_element(const SurfaceWord& w1, const SurfaceWord& w2);
inline bool is_identity(const SurfaceWord& w) { return dehn_reduce(w.str()).empty(); }

// Shortlex-least geodesic when the element lies in the cached ball, else the
// Dehn-reduced word with canonical() == false.
SurfaceWord dehn_canonical(const SurfaceWord& w, int max_radius = kDefaultMaxRadius);

// Exact geodesic length. Throws OutOfRadius past max_radius.
int length_B(const SurfaceWord& w, int max_radius = kDefaultMaxRadius);

struct BallElement {
  std::string word;  // canonical form
  int length = 0;
};

// All elements with l_B <= radius, ordered by length then shortlex.
std::vector<BallElement> enumerate_ball(int radius, int max_radius = kDefaultMaxRadius);
std::vector<std::size_t> sphere_sizes(int radius, int max_radius = kDefaultMaxRadius);

}  // namespace coverkit
