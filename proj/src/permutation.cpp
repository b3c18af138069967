#include "braidsplit/permutation.hpp"

#include <ostream>
#include <string>

#include "braidsplit/error.hpp"

namespace braidsplit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("image array is not a bijection on " +
                        std::to_string(images_.size()) + " points");
    seen[x] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
  : Permutation(std::vector<Point>(images))
{}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<Point>(i);
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b)
{
  if (a >= degree || b >= degree)
    throw DomainError("transposition point out of range");
  auto p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation compose(Permutation const &p, Permutation const &r)
{
  if (p.degree() != r.degree())
    throw DimensionMismatch("compose: degree " + std::to_string(p.degree()) + " vs " +
                            std::to_string(r.degree()));
  std::vector<Point> im(p.degree());
  for (std::size_t x = 0; x < im.size(); ++x)
    im[x] = p.images_[r.images_[x]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation conjugate(Permutation const &g, Permutation const &k)
{
  return compose(compose(g, k), g.inverse());
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  os << '[';
  for (std::size_t i = 0; i < p.degree(); ++i)
    os << (i ? "," : "") << p[static_cast<Point>(i)];
  return os << ']';
}

} // namespace braidsplit
