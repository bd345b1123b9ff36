#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqstr/sequence.hpp"

namespace seqstr {

enum class SymbolMode { byte, codepoint };
enum class InputFormat { plain, fasta };

struct InlineSource {
  std::string text;
};
struct FileSource {
  std::string path;
};
struct StdinSource {};

using InputSource = std::variant<InlineSource, FileSource, StdinSource>;

struct InputSpec {
  InputSource source = InlineSource{};
  InputFormat format = InputFormat::plain;
  SymbolMode symbol_mode = SymbolMode::byte;
  std::optional<std::string> fasta_record;  // fasta only
  bool strip_trailing_newline = true;
};

struct FastaRecord {
  std::string id;
  std::string description;
  std::string sequence;
};

// Byte mode: one symbol per byte, total. Codepoint mode: one symbol per UTF-8
// encoded scalar value; malformed input throws InvalidEncoding.
SymbolSequence decode(std::string_view bytes, SymbolMode mode);

// Inverse of decode, used for printing matches.
std::string encode(const SymbolSequence& symbols, SymbolMode mode);

// Raw bytes of the spec's source. Throws IoError when a file cannot be read.
std::string read_source(const InputSpec& spec, std::istream& stdin_stream);

std::vector<FastaRecord> parse_fasta(std::string_view text);

SymbolSequence read_plain(const InputSpec& spec, std::istream& stdin_stream);
SymbolSequence read_plain(const InputSpec& spec);

// Selects spec.fasta_record by id, else the first record.
SymbolSequence read_fasta(const InputSpec& spec, std::istream& stdin_stream);
SymbolSequence read_fasta(const InputSpec& spec);

// Dispatches on spec.format.
SymbolSequence read_input(const InputSpec& spec, std::istream& stdin_stream);

}  // namespace seqstr
