#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace coverkit {

// Letters use the wire alphabet: x y a b for generators, upper case for
// inverses. FreeWord only admits x X y Y.
inline char inverse_letter(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                : static_cast<char>(c - 'A' + 'a');
}

// Free reduction over any alphabet closed under inverse_letter.
std::string free_reduce(std::string_view letters);
std::string invert_letters(std::string_view letters);

class FreeWord {
 public:
  FreeWord() = default;
  // Throws PreconditionError on letters outside x X y Y.
  explicit FreeWord(std::string_view letters);

  static FreeWord u();
  static FreeWord u_power(long j);

  const std::string& str() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord pow(long e) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  struct Trusted {};
  FreeWord(std::string s, Trusted) : letters_(std::move(s)) {}
  std::string letters_;
};

FreeWord reduce(std::string_view letters);

// l_A(hf) < l_A(h) + l_A(f).
bool reacts(const FreeWord& h, const FreeWord& f);
inline bool wedge(const FreeWord& h, const FreeWord& f) { return !reacts(h, f); }

// True iff w = u^j; the exponent is written to *j when given.
bool in_cyclic_u(const FreeWord& w, long* j = nullptr);

struct WedgeSplit {
  long i1 = 0;
  FreeWord core;
  long i2 = 0;
};

WedgeSplit wedge_split_u(const FreeWord& gamma);

struct Sandwich {
  long left = 0;  // exponent of u on the left
  FreeWord middle;
  long right = 0;
};

// Decomposes u^{e1 m l} gamma u^{e2 m l} as u^{e1 (m-2) l} ^ gamma' ^ u^{e2 (m-2) l}
// and checks the conclusion directly.
Sandwich sandwich_normalize(long m, long l, int eps1, int eps2, const FreeWord& gamma);

}  // namespace coverkit
