#include "springer/subspace.hpp"

#include "springer/error.hpp"

namespace springer {

Subspace::Subspace(int n) : n_(n), parent_(n + 1), sign_(n + 1, 1), pin_(n + 1, 0) {
  for (int i = 0; i <= n; ++i) parent_[i] = i;
}

std::pair<int, int> Subspace::find(int i) const {
  int s = 1, v = i;
  while (parent_[v] != v) {
    s *= sign_[v];
    v = parent_[v];
  }
  return {v, s};
}

void Subspace::relate(int i, int j, int sign) {
  if (empty_) return;
  auto [ri, si] = find(i);
  auto [rj, sj] = find(j);
  // x_ri = si x_i = si sign x_j = si sign sj x_rj
  int rel = si * sign * sj;
  if (ri == rj) {
    if (rel != 1) empty_ = true;
    return;
  }
  parent_[ri] = rj;
  sign_[ri] = rel;
  if (pin_[ri] != 0) {
    int carried = pin_[ri] * rel;  // x_rj = rel * x_ri
    if (pin_[rj] != 0 && pin_[rj] != carried) empty_ = true;
    pin_[rj] = carried;
  }
}

void Subspace::pin(int i, int value) {
  if (empty_) return;
  auto [r, s] = find(i);
  int v = value * s;
  if (pin_[r] != 0 && pin_[r] != v) empty_ = true;
  pin_[r] = v;
}

int Subspace::free_classes() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i)
    if (find(i).first == i && pin_[i] == 0) ++c;
  return c;
}

std::vector<Subspace::Slot> Subspace::canonical() const {
  std::vector<Slot> out(n_ + 1);
  std::vector<int> smallest(n_ + 1, 0), smallest_sign(n_ + 1, 1);
  for (int i = 1; i <= n_; ++i) {
    auto [r, s] = find(i);
    if (smallest[r] == 0) {
      smallest[r] = i;
      smallest_sign[r] = s;
    }
  }
  for (int i = 1; i <= n_; ++i) {
    auto [r, s] = find(i);
    if (pin_[r] != 0) {
      out[i] = {pin_[r] * s, 0, 1};
    } else {
      // x_i = s x_r and x_min = s' x_r give x_i = s s' x_min.
      out[i] = {0, smallest[r], s * smallest_sign[r]};
    }
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  if (n_ != o.n_ || empty_ != o.empty_) return false;
  return empty_ || canonical() == o.canonical();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::SizeMismatch, "subspaces of different size");
  Subspace out = *this;
  if (other.empty_) out.empty_ = true;
  auto c = other.canonical();
  for (int i = 1; i <= n_ && !out.empty_; ++i) {
    if (c[i].pin != 0)
      out.pin(i, c[i].pin);
    else if (c[i].rep != i)
      out.relate(i, c[i].rep, c[i].sign);
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::SizeMismatch, "subspaces of different size");
  if (other.empty_) return true;
  if (empty_) return false;
  return intersect(other) == other;
}

Subspace Subspace::transport(int target_n, const std::vector<int>& dest, const std::vector<int>& scale,
                             const std::vector<std::pair<int, int>>& new_pins) const {
  Subspace out(target_n);
  out.empty_ = empty_;
  if (empty_) return out;
  auto c = canonical();
  for (int i = 1; i <= n_; ++i) {
    // y_dest(i) = scale_i x_i
    if (c[i].pin != 0) {
      out.pin(dest[i], scale[i] * c[i].pin);
    } else if (c[i].rep != i) {
      int j = c[i].rep;
      // y_di = scale_i s x_j = scale_i s scale_j y_dj
      out.relate(dest[i], dest[j], scale[i] * c[i].sign * scale[j]);
    }
  }
  for (auto [slot, v] : new_pins) out.pin(slot, v);
  return out;
}

Subspace Subspace::gamma() const {
  std::vector<int> dest(n_ + 1), scale(n_ + 1);
  for (int i = 1; i <= n_; ++i) {
    dest[i] = i;
    scale[i] = i % 2 ? -1 : 1;
  }
  return transport(n_, dest, scale, {});
}

namespace {

int check_pad(int n, int target_n) {
  int pad = target_n - n;
  // The pad is n-2k for some k, so the target 2n-2k is even and at most 2n.
  if (pad < 0 || pad > n || target_n % 2 != 0)
    throw Error(ErrorCode::PadSizeMismatch, "target size must be 2n-2k for some 0 <= k <= n/2");
  return pad;
}

}  // namespace

Subspace Subspace::eta(int target_n) const {
  int pad = check_pad(n_, target_n);
  std::vector<int> dest(n_ + 1), scale(n_ + 1, 1);
  for (int i = 1; i <= n_; ++i) dest[i] = i + pad;
  std::vector<std::pair<int, int>> pins;
  for (int t = 1; t <= pad; ++t) pins.emplace_back(t, (pad - t + 1) % 2 ? -1 : 1);
  return transport(target_n, dest, scale, pins);
}

Subspace Subspace::iota(int target_n) const {
  int pad = check_pad(n_, target_n);
  int s = n_ % 2 ? -1 : 1;
  std::vector<int> dest(n_ + 1), scale(n_ + 1, s);
  for (int i = 1; i <= n_; ++i) dest[i] = i + pad;
  std::vector<std::pair<int, int>> pins;
  for (int t = 1; t <= pad; ++t) pins.emplace_back(t, -s);
  return transport(target_n, dest, scale, pins);
}

std::string Subspace::to_string() const {
  if (empty_) return "empty";
  auto c = canonical();
  std::string out = "(";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ", ";
    if (c[i].pin != 0)
      out += c[i].pin > 0 ? "p" : "-p";
    else
      out += (c[i].sign < 0 ? "-x" : "x") + std::to_string(c[i].rep);
  }
  return out + ")";
}

Subspace subspace_of(const Matching& a, Variant v) {
  Subspace s(a.n());
  for (const auto& arc : a.arcs()) s.relate(arc.left, arc.right, v == Variant::Plain ? 1 : -1);
  for (int r : a.rays()) s.pin(r, v == Variant::Primed ? 1 : (r % 2 ? -1 : 1));
  return s;
}

}  // namespace springer
