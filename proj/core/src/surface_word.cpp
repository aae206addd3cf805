#include "coverkit/surface_word.hpp"

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "coverkit/error.hpp"
#include "coverkit/free_word.hpp"
#include "coverkit/rng.hpp"

namespace coverkit {

namespace {

int letter_index(char c) {
  const auto pos = kSurfaceAlphabet.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

// The 16 cyclic conjugates of the relator and of its inverse.
const std::array<std::string, 16>& relator_rotations() {
  static const std::array<std::string, 16> rots = [] {
    std::array<std::string, 16> out;
    const std::string r(kSurfaceRelator);
    const std::string ri = invert_letters(r);
    for (int i = 0; i < 8; ++i) {
      out[i] = r.substr(i) + r.substr(0, i);
      out[8 + i] = ri.substr(i) + ri.substr(0, i);
    }
    return out;
  }();
  return rots;
}

// --- exact homomorphic fingerprint -------------------------------------
// Two maps SG2 -> F2 (x->x, y->y, x'->u^l y u^-l, y'->u^l x u^-l for l=1,2),
// each followed by F2 -> SL(2, Z/p) with p = 2^61 - 1. Equal elements get
// equal fingerprints; equal fingerprints are confirmed by the word problem.

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 z = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}

using Mat = std::array<std::uint64_t, 4>;
constexpr Mat kIdentity{1, 0, 0, 1};

Mat mul(const Mat& a, const Mat& b) {
  return {addmod(mulmod(a[0], b[0]), mulmod(a[1], b[2])),
          addmod(mulmod(a[0], b[1]), mulmod(a[1], b[3])),
          addmod(mulmod(a[2], b[0]), mulmod(a[3], b[2])),
          addmod(mulmod(a[2], b[1]), mulmod(a[3], b[3]))};
}

struct Fingerprint {
  std::array<Mat, 2> m{kIdentity, kIdentity};
  std::uint64_t key() const {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (const auto& mm : m)
      for (auto v : mm) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

struct LetterTable {
  std::array<std::array<Mat, 8>, 2> mats;
  LetterTable() {
    const Mat x{1, 2, 0, 1}, X{1, kP - 2, 0, 1}, y{1, 0, 2, 1}, Y{1, 0, kP - 2, 1};
    auto eval = [&](std::string_view w) {
      Mat acc = kIdentity;
      for (char c : w) {
        switch (c) {
          case 'x': acc = mul(acc, x); break;
          case 'X': acc = mul(acc, X); break;
          case 'y': acc = mul(acc, y); break;
          default: acc = mul(acc, Y); break;
        }
      }
      return acc;
    };
    for (int l = 1; l <= 2; ++l) {
      const std::string ul = FreeWord::u_power(l).str();
      const std::string uinv = FreeWord::u_power(-l).str();
      auto& t = mats[l - 1];
      t[0] = x;
      t[1] = X;
      t[2] = y;
      t[3] = Y;
      t[4] = eval(ul + "y" + uinv);
      t[5] = eval(ul + "Y" + uinv);
      t[6] = eval(ul + "x" + uinv);
      t[7] = eval(ul + "X" + uinv);
    }
  }
};

const LetterTable& letter_table() {
  static const LetterTable t;
  return t;
}

Fingerprint fingerprint(std::string_view w) {
  const auto& t = letter_table();
  Fingerprint f;
  for (char c : w) {
    const int i = letter_index(c);
    f.m[0] = mul(f.m[0], t.mats[0][i]);
    f.m[1] = mul(f.m[1], t.mats[1][i]);
  }
  return f;
}

Fingerprint extend(const Fingerprint& f, int letter) {
  const auto& t = letter_table();
  return {{mul(f.m[0], t.mats[0][letter]), mul(f.m[1], t.mats[1][letter])}};
}

bool equal_words(std::string_view a, std::string_view b) {
  return dehn_reduce(std::string(a) + invert_letters(b)).empty();
}

// --- lazily grown ball of canonical forms ------------------------------
// Words are packed 3 bits per letter; at radius 8 the ball holds ~6e6 elements.
class BallCache {
 public:
  std::optional<std::uint32_t> find(std::string_view w, std::uint64_t key) const {
    auto [lo, hi] = index_.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (equal_words(w, decode(it->second))) return it->second;
    return std::nullopt;
  }

  void extend_to(int radius) {
    if (lengths_.empty()) add(std::string{}, Fingerprint{}.key());
    while (built_ < radius) {
      const std::size_t begin = sphere_begin_.back();
      const std::size_t end = lengths_.size();
      sphere_begin_.push_back(end);
      for (std::size_t i = begin; i < end; ++i) {
        const std::string w = decode(static_cast<std::uint32_t>(i));
        const Fingerprint f = fingerprint(w);
        for (int g = 0; g < 8; ++g) {
          if (!w.empty() && w.back() == inverse_letter(kSurfaceAlphabet[g])) continue;
          std::string cand = w;
          cand.push_back(kSurfaceAlphabet[g]);
          const std::uint64_t key = extend(f, g).key();
          if (!find(cand, key)) add(cand, key);
        }
      }
      ++built_;
    }
  }

  int built() const { return built_; }
  std::size_t size() const { return lengths_.size(); }
  std::size_t sphere_begin(int r) const { return sphere_begin_[r]; }
  int length(std::uint32_t i) const { return lengths_[i]; }

  std::string decode(std::uint32_t i) const {
    std::string w(lengths_[i], '\0');
    std::uint32_t c = codes_[i];
    for (int k = 0; k < lengths_[i]; ++k, c >>= 3) w[k] = kSurfaceAlphabet[c & 7u];
    return w;
  }

 private:
  void add(const std::string& w, std::uint64_t key) {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      c |= static_cast<std::uint32_t>(letter_index(w[k])) << (3 * k);
    const auto idx = static_cast<std::uint32_t>(lengths_.size());
    codes_.push_back(c);
    lengths_.push_back(static_cast<std::uint8_t>(w.size()));
    index_.emplace(key, idx);
  }

  std::vector<std::uint32_t> codes_;
  std::vector<std::uint8_t> lengths_;
  std::vector<std::size_t> sphere_begin_{0};
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  int built_ = 0;
};

constexpr int kHardRadiusCap = 10;  // 3 bits x 10 letters fit in 32 bits

std::mutex g_ball_mutex;
BallCache& ball() {
  static BallCache cache;
  return cache;
}

void check_radius(int radius, int max_radius) {
  if (max_radius > kHardRadiusCap)
    throw PreconditionError("max radius exceeds the supported cap of 10");
  if (radius < 0) throw PreconditionError("negative radius");
  if (radius > max_radius) throw OutOfRadius("radius exceeds configured maximum");
}

}  // namespace

SurfaceWord::SurfaceWord(std::string_view letters, bool canonical) : canonical_(canonical) {
  for (char c : letters)
    if (letter_index(c) < 0)
      throw PreconditionError(std::string("letter outside surface alphabet: ") + c);
  letters_ = free_reduce(letters);
}

SurfaceWord SurfaceWord::inverse() const { return SurfaceWord(invert_letters(letters_)); }

SurfaceWord operator*(const SurfaceWord& a, const SurfaceWord& b) {
  return SurfaceWord(a.letters_ + b.letters_);
}

std::string dehn_reduce(std::string_view letters) {
  std::string s = free_reduce(letters);
  const auto& rots = relator_rotations();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i) {
      std::size_t best_len = 0;
      int best_rot = -1;
      for (int r = 0; r < 16; ++r) {
        std::size_t L = 0;
        while (L < 8 && i + L < s.size() && s[i + L] == rots[r][L]) ++L;
        if (L > best_len) {
          best_len = L;
          best_rot = r;
        }
      }
      if (best_len >= 5) {
        const std::string repl = invert_letters(std::string_view(rots[best_rot]).substr(best_len));
        s = free_reduce(s.substr(0, i) + repl + s.substr(i + best_len));
        changed = true;
      }
    }
  }
  return s;
}

bool same_element(const SurfaceWord& w1, const SurfaceWord& w2) {
  return equal_words(w1.str(), w2.str());
}

namespace {
struct Located {
  std::string word;
  int length;
};

std::optional<Located> locate(const SurfaceWord& w, int max_radius) {
  check_radius(0, max_radius);
  const std::string d = dehn_reduce(w.str());
  const int target = std::min<int>(static_cast<int>(d.size()), max_radius);
  std::lock_guard<std::mutex> lock(g_ball_mutex);
  BallCache& b = ball();
  if (b.built() < target) b.extend_to(target);
  const auto idx = b.find(d, fingerprint(d).key());
  if (!idx || b.length(*idx) > max_radius) return std::nullopt;
  return Located{b.decode(*idx), b.length(*idx)};
}
}  // namespace

SurfaceWord dehn_canonical(const SurfaceWord& w, int max_radius) {
  if (auto hit = locate(w, max_radius)) return SurfaceWord(hit->word, true);
  return SurfaceWord(dehn_reduce(w.str()), false);
}

int length_B(const SurfaceWord& w, int max_radius) {
  if (auto hit = locate(w, max_radius)) return hit->length;
  throw OutOfRadius("length_B: element lies outside the ball of radius " +
                    std::to_string(max_radius));
}

std::vector<BallElement> enumerate_ball(int radius, int max_radius) {
  check_radius(radius, max_radius);
  std::lock_guard<std::mutex> lock(g_ball_mutex);
  BallCache& b = ball();
  if (b.built() < radius) b.extend_to(radius);
  const std::size_t end = static_cast<std::size_t>(radius) < static_cast<std::size_t>(b.built())
                              ? b.sphere_begin(radius + 1)
                              : b.size();
  std::vector<BallElement> out;
  out.reserve(end);
  for (std::size_t i = 0; i < end; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    out.push_back({b.decode(idx), b.length(idx)});
  }
  return out;
}

std::vector<std::size_t> sphere_sizes(int radius, int max_radius) {
  std::vector<std::size_t> sizes(radius + 1, 0);
  for (const auto& e : enumerate_ball(radius, max_radius)) ++sizes[e.length];
  return sizes;
}

}  // namespace coverkit
