#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace seqstr {

// One symbol: a byte value or a Unicode scalar value depending on how the
// input was decoded. Equality is exact code-unit equality.
using Symbol = std::uint32_t;

// Immutable, 0-indexed run of symbols. Prefixes and slices are expressed as
// index ranges or spans over this type, never as copies.
class SymbolSequence {
 public:
  SymbolSequence() = default;
  explicit SymbolSequence(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  SymbolSequence(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  // Byte-per-symbol view of an ASCII/byte string.
  static SymbolSequence from_bytes(std::string_view bytes) {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) out.push_back(c);
    return SymbolSequence(std::move(out));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  std::span<const Symbol> view() const noexcept { return symbols_; }
  std::span<const Symbol> slice(std::size_t begin, std::size_t end) const {
    return view().subspan(begin, end - begin);
  }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

 private:
  std::vector<Symbol> symbols_;
};

}  // namespace seqstr
