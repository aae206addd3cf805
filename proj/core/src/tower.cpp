#include <string>

#include "coverkit/error.hpp"
#include "coverkit/schreier.hpp"

namespace coverkit {

namespace {
// Position of block i on the (2m+1)-cycle 0 -> 1 -> 3 -> ... -> 2m-1 -> 2m -> 2m-2 -> ... -> 2 -> 0.
long cycle_pos(long i, long m) { return i % 2 == 1 ? (i + 1) / 2 : (i == 0 ? 0 : 2 * m + 1 - i / 2); }
long cycle_at(long pos, long m) { return pos <= m ? (pos == 0 ? 0 : 2 * pos - 1) : 2 * (2 * m + 1 - pos); }
}  // namespace

PermTower::PermTower(int k, int m, int r) : k_(k), m_(m), r_(r) {
  if (k < 1 || m < 1 || r < 1) throw PreconditionError("perm_tower: k, m, r must be >= 1");
  l_ = {0};
  n_ = {k};
  sigma_.push_back({0, k});
  tau_.push_back({0, 0});
  for (int i = 0; i < r; ++i) {
    const long B = n_.back() - l_.back();
    const long lnext = l_.back() + (2L * m + 1) * B;
    const long nnext = n_.back() + (2L * m + 1) * (2L * m) * B;
    if (nnext > kMaxPoints)
      throw PreconditionError("perm_tower: n_" + std::to_string(i + 1) + " = " + std::to_string(nnext) +
                              " exceeds the size guard " + std::to_string(kMaxPoints));
    tau_.push_back({l_.back(), B});
    sigma_.push_back({n_.back(), 2L * m * B});
    l_.push_back(lnext);
    n_.push_back(nnext);
  }
}

long PermTower::apply(const TowerPart& p, long x, long power) const {
  const long span = (2L * m_ + 1) * p.block;
  if (p.block == 0 || x <= p.lo || x > p.lo + span) return x;
  const long off = x - p.lo - 1;
  const long i = off / p.block, j = off % p.block;
  const long len = 2L * m_ + 1;
  const long pos = (((cycle_pos(i, m_) + power) % len) + len) % len;
  return p.lo + cycle_at(pos, m_) * p.block + j + 1;
}

long PermTower::sigma(int part, long x, long power) const {
  if (part == 0) {
    if (x < 1 || x > k_) return x;
    return (((x - 1 + power) % k_) + k_) % k_ + 1;
  }
  return apply(sigma_.at(part), x, power);
}

long PermTower::tau(int part, long x, long power) const {
  if (part == 0) return x;
  return apply(tau_.at(part), x, power);
}

std::pair<long, long> PermTower::sigma_support(int part) const {
  // For k = 1 sigma_0 is the identity; [1, k] is still its block in the construction.
  if (part == 0) return {1L, static_cast<long>(k_)};
  return {n_[part - 1] + 1, n_[part]};
}

std::pair<long, long> PermTower::tau_support(int part) const {
  if (part == 0) return {1, 0};
  return {l_[part - 1] + 1, l_[part]};
}

long PermTower::degree_closed_form() const {
  const long t = 4L * m_ * m_;
  long tp = 1;
  for (int i = 0; i < r_; ++i) tp *= t;
  return k_ * (1 + (2L * m_ + 1) * (2L * m_) * (tp - 1) / (t - 1));
}

double PermTower::degree_printed_form() const {
  const double t = 4.0 * m_ * m_;
  double tp = 1;
  for (int i = 0; i < r_; ++i) tp *= t;
  return k_ * (1 + (tp - 1) / (4.0 * m_ - 1) * (2.0 * m_ + 1) * (2.0 * m_));
}

TowerCheck check_tower(const PermTower& t) {
  TowerCheck c;
  const long N = t.degree();
  const int R = t.r(), m = t.m(), k = t.k();
  auto in = [](std::pair<long, long> iv, long x) { return x >= iv.first && x <= iv.second; };

  const auto& l = t.l_bounds();
  const auto& n = t.n_bounds();
  if (l[0] != 0 || n[0] != k) ++c.recurrence_violations;
  if (l[1] != (2L * m + 1) * k || n[1] != l[1] + 4L * m * m * k) ++c.recurrence_violations;
  for (int i = 0; i < R; ++i) {
    if (l[i + 1] != l[i] + (2L * m + 1) * (n[i] - l[i])) ++c.recurrence_violations;
    if (n[i + 1] != n[i] + (2L * m + 1) * (2L * m) * (n[i] - l[i])) ++c.recurrence_violations;
    if (!(n[i + 1] > l[i + 1] && l[i + 1] > n[i])) ++c.recurrence_violations;
  }

  for (long x = 1; x <= N; ++x) {
    ++c.points_checked;
    for (int r = 0; r <= R; ++r) {
      if ((r > 0 || k > 1) && (t.sigma(r, x) != x) != in(t.sigma_support(r), x)) ++c.support_violations;
      if ((t.tau(r, x) != x) != in(t.tau_support(r), x)) ++c.support_violations;
    }
    for (int r = 1; r <= R; ++r) {
      const bool in_sigma_prev = in(t.sigma_support(r - 1), x);
      const bool in_tau_prev = in(t.tau_support(r - 1), x);
      const bool in_tau = in(t.tau_support(r), x);
      for (int p = -m; p <= m; ++p) {
        if (p == 0) continue;
        if (in_sigma_prev) {
          const bool ok = in(t.sigma_support(r), t.tau(r, x, p));
          if (!ok) ++c.relation2_literal_violations;
          if (!ok && !in_tau_prev) ++c.relation2_violations;
        }
        if (in_tau && !in_sigma_prev) {
          const long y = t.sigma(r, x, p);
          if (!in(t.sigma_support(r), y) || in(t.tau_support(r), y)) ++c.relation3_violations;
        }
      }
    }
  }
  return c;
}

SchreierAction stabilizer_action_Hk(const PermTower& t) {
  SchreierAction a;
  a.n = static_cast<int>(t.degree());
  a.base = 0;
  a.x.resize(a.n);
  a.y.resize(a.n);
  for (long x = 1; x <= t.degree(); ++x) {
    long sx = x, ty = x;
    for (int r = 0; r <= t.r(); ++r) {
      if (sx == x) sx = t.sigma(r, x);
      if (ty == x) ty = t.tau(r, x);
    }
    a.x[x - 1] = static_cast<int>(sx - 1);
    a.y[x - 1] = static_cast<int>(ty - 1);
  }
  a.validate();
  return a;
}

}  // namespace coverkit
