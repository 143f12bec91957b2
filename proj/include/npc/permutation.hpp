#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace npc {

/// Thrown when two values built over different dimensions n are combined.
class dimension_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of the dimension set {1..n}, stored in one-line notation:
/// image()[k-1] == pi(k). Values are 1-based throughout.
class Perm {
 public:
  /// Validates that `image` is a bijection on {1..n}.
  explicit Perm(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1) throw std::invalid_argument("permutation must have size >= 1");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : image_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
        throw std::invalid_argument("permutation image is not a bijection on {1..n}");
      seen[static_cast<size_t>(v - 1)] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Perm(std::move(img));
  }

  /// The exchange (ij): swaps i and j, fixes everything else. exchange(i,i)
  /// is the identity, so rule constructors stay total; side conditions such
  /// as i != k are enforced by the kernel where the rules state them.
  static Perm exchange(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("exchange index out of range");
    Perm p = identity(n);
    std::swap(p.image_[static_cast<size_t>(i - 1)], p.image_[static_cast<size_t>(j - 1)]);
    return p;
  }

  int n() const { return static_cast<int>(image_.size()); }

  /// pi(x), 1-based.
  int operator()(int x) const {
    if (x < 1 || x > n()) throw std::invalid_argument("permutation applied out of range");
    return image_[static_cast<size_t>(x - 1)];
  }

  /// pi^-1(x), 1-based.
  int inverse_at(int x) const {
    for (int k = 1; k <= n(); ++k)
      if (image_[static_cast<size_t>(k - 1)] == x) return k;
    throw std::invalid_argument("permutation inverse applied out of range");
  }

  Perm inverse() const {
    std::vector<int> inv(image_.size());
    for (int k = 1; k <= n(); ++k) inv[static_cast<size_t>(image_[static_cast<size_t>(k - 1)] - 1)] = k;
    return Perm(std::move(inv));
  }

  bool is_identity() const {
    for (int k = 1; k <= n(); ++k)
      if (image_[static_cast<size_t>(k - 1)] != k) return false;
    return true;
  }

  const std::vector<int>& image() const { return image_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

/// Functional composition: (pi o rho)(x) = pi(rho(x)).
inline Perm compose(const Perm& pi, const Perm& rho) {
  if (pi.n() != rho.n())
    throw dimension_mismatch("compose: permutations of different dimension");
  std::vector<int> img(static_cast<size_t>(pi.n()));
  for (int x = 1; x <= pi.n(); ++x) img[static_cast<size_t>(x - 1)] = pi(rho(x));
  return Perm(std::move(img));
}

/// "[2,1,3]" one-line rendering.
inline std::string to_string(const Perm& p) {
  std::string s = "[";
  for (int k = 1; k <= p.n(); ++k) {
    if (k > 1) s += ',';
    s += std::to_string(p(k));
  }
  s += ']';
  return s;
}

}  // namespace npc
