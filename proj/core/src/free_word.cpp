#include "coverkit/free_word.hpp"

#include <cstdlib>

#include "coverkit/error.hpp"

namespace coverkit {

namespace {
constexpr std::string_view kU = "xyXY";
constexpr std::string_view kUinv = "yxYX";

bool is_f2_letter(char c) { return c == 'x' || c == 'X' || c == 'y' || c == 'Y'; }
}  // namespace

std::string free_reduce(std::string_view letters) {
  std::string out;
  out.reserve(letters.size());
  for (char c : letters) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string invert_letters(std::string_view letters) {
  std::string out(letters.rbegin(), letters.rend());
  for (char& c : out) c = inverse_letter(c);
  return out;
}

FreeWord::FreeWord(std::string_view letters) {
  for (char c : letters)
    if (!is_f2_letter(c))
      throw PreconditionError(std::string("letter outside {x,X,y,Y}: ") + c);
  letters_ = free_reduce(letters);
}

FreeWord FreeWord::u() { return FreeWord(std::string(kU), Trusted{}); }

FreeWord FreeWord::u_power(long j) { return u().pow(j); }

FreeWord FreeWord::inverse() const { return FreeWord(invert_letters(letters_), Trusted{}); }

FreeWord FreeWord::pow(long e) const {
  const FreeWord base = e < 0 ? inverse() : *this;
  FreeWord acc;
  for (long i = 0; i < std::labs(e); ++i) acc = acc * base;
  return acc;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  return FreeWord(free_reduce(a.letters_ + b.letters_), FreeWord::Trusted{});
}

FreeWord reduce(std::string_view letters) { return FreeWord(letters); }

bool reacts(const FreeWord& h, const FreeWord& f) {
  return (h * f).length() < h.length() + f.length();
}

bool in_cyclic_u(const FreeWord& w, long* j) {
  const std::string& s = w.str();
  if (s.size() % 4 != 0) return false;
  if (s.empty()) {
    if (j) *j = 0;
    return true;
  }
  const std::string_view block = s.compare(0, 4, kU) == 0 ? kU : kUinv;
  for (std::size_t i = 0; i < s.size(); i += 4)
    if (s.compare(i, 4, block) != 0) return false;
  if (j) *j = (block == kU ? 1 : -1) * static_cast<long>(s.size() / 4);
  return true;
}

WedgeSplit wedge_split_u(const FreeWord& gamma) {
  if (in_cyclic_u(gamma)) throw PreconditionError("wedge_split_u: word lies in <u>");
  std::string_view s = gamma.str();
  WedgeSplit out;
  auto strip_front = [&](std::string_view block, long step) {
    while (s.size() >= 4 && s.substr(0, 4) == block) {
      s.remove_prefix(4);
      out.i1 += step;
    }
  };
  auto strip_back = [&](std::string_view block, long step) {
    while (s.size() >= 4 && s.substr(s.size() - 4) == block) {
      s.remove_suffix(4);
      out.i2 += step;
    }
  };
  strip_front(kU, 1);
  if (out.i1 == 0) strip_front(kUinv, -1);
  strip_back(kU, 1);
  if (out.i2 == 0) strip_back(kUinv, -1);
  out.core = FreeWord(s);
  return out;
}

Sandwich sandwich_normalize(long m, long l, int eps1, int eps2, const FreeWord& gamma) {
  if (m < 3) throw PreconditionError("sandwich_normalize: m must be >= 3");
  if (l < 2) throw PreconditionError("sandwich_normalize: l must be >= 2");
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw PreconditionError("sandwich_normalize: signs must be +-1");
  if (in_cyclic_u(gamma)) throw PreconditionError("sandwich_normalize: gamma lies in <u>");
  if (static_cast<long>(gamma.length()) > l)
    throw PreconditionError("sandwich_normalize: l_A(gamma) exceeds l");

  const WedgeSplit sp = wedge_split_u(gamma);
  Sandwich out;
  out.left = eps1 * (m - 2) * l;
  out.right = eps2 * (m - 2) * l;
  out.middle = FreeWord::u_power(2 * eps1 * l + sp.i1) * sp.core *
               FreeWord::u_power(2 * eps2 * l + sp.i2);

  const FreeWord L = FreeWord::u_power(out.left);
  const FreeWord R = FreeWord::u_power(out.right);
  const FreeWord whole = FreeWord::u_power(eps1 * m * l) * gamma * FreeWord::u_power(eps2 * m * l);
  if (out.middle.empty()) throw VerificationError("sandwich_normalize: gamma' is trivial");
  if (reacts(L, out.middle) || reacts(L * out.middle, R))
    throw VerificationError("sandwich_normalize: blocks react");
  if (L * out.middle * R != whole) throw VerificationError("sandwich_normalize: recombination failed");
  return out;
}

}  // namespace coverkit
