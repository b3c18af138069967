#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace braidsplit {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}, stored as its image array.
class Permutation
{
public:
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const &images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(Permutation const &p, Permutation const &r);

  std::vector<Point> images_;
};

// x -> p(r(x)): the right factor acts first.
Permutation compose(Permutation const &p, Permutation const &r);

inline Permutation operator*(Permutation const &p, Permutation const &r)
{
  return compose(p, r);
}

// g k g^-1
Permutation conjugate(Permutation const &g, Permutation const &k);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace braidsplit
