#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqstr {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The full (m+1)x(n+1) table would exceed the configured cell budget.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(std::size_t cells, std::size_t limit)
      : Error("matrix of " + std::to_string(cells) + " cells exceeds size limit of " +
              std::to_string(limit) + " cells"),
        cells_(cells),
        limit_(limit) {}

  std::size_t cells() const noexcept { return cells_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t cells_;
  std::size_t limit_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidEncoding : public Error {
 public:
  using Error::Error;
};

class EmptyFasta : public Error {
 public:
  using Error::Error;
};

class RecordNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace seqstr
