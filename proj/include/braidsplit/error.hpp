#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidsplit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error
{
public:
  using Error::Error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

class ModulusMismatch : public Error
{
public:
  using Error::Error;
};

// A configured cap (group size, search budget) would be exceeded.
class ResourceError : public Error
{
public:
  ResourceError(std::string const &what, std::size_t cap)
    : Error(what), cap_(cap)
  {}

  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

// A permutation does not have the block / translation shape an operation needs.
class StructureError : public Error
{
public:
  using Error::Error;
};

// A constructed object fails one of its mathematical invariants.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

} // namespace braidsplit
