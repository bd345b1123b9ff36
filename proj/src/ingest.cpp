#include "seqstr/ingest.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "seqstr/errors.hpp"

namespace seqstr {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<Symbol> decode_utf8(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  auto fail = [&](const char* what) -> void {
    throw InvalidEncoding(std::string("invalid UTF-8 at byte ") + std::to_string(i) + ": " + what);
  };
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    std::size_t extra = 0;
    Symbol cp = 0;
    Symbol min = 0;
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, cp = lead & 0x07, min = 0x10000;
    } else {
      fail("bad lead byte");
    }
    if (i + extra >= bytes.size()) fail("truncated sequence");
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) fail("bad continuation byte");
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min) fail("overlong encoding");
    if (cp > 0x10FFFF) fail("code point out of range");
    if (cp >= 0xD800 && cp <= 0xDFFF) fail("surrogate code point");
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_utf8(std::string& out, Symbol cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string_view strip_one_newline(std::string_view text) {
  if (!text.empty() && text.back() == '\n') {
    text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  }
  return text;
}

}  // namespace

SymbolSequence decode(std::string_view bytes, SymbolMode mode) {
  if (mode == SymbolMode::byte) return SymbolSequence::from_bytes(bytes);
  return SymbolSequence(decode_utf8(bytes));
}

std::string encode(const SymbolSequence& symbols, SymbolMode mode) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) {
    if (mode == SymbolMode::byte) {
      out.push_back(static_cast<char>(static_cast<unsigned char>(s)));
    } else {
      append_utf8(out, s);
    }
  }
  return out;
}

std::string read_source(const InputSpec& spec, std::istream& stdin_stream) {
  struct Reader {
    std::istream& in;
    std::string operator()(const InlineSource& s) const { return s.text; }
    std::string operator()(const FileSource& s) const {
      std::ifstream file(s.path, std::ios::binary);
      if (!file) throw IoError("cannot open " + s.path);
      std::ostringstream buf;
      buf << file.rdbuf();
      if (file.bad()) throw IoError("error reading " + s.path);
      return std::move(buf).str();
    }
    std::string operator()(const StdinSource&) const {
      std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      if (in.bad()) throw IoError("error reading standard input");
      return data;
    }
  };
  return std::visit(Reader{stdin_stream}, spec.source);
}

std::vector<FastaRecord> parse_fasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      std::string_view header = line.substr(1);
      std::size_t p = 0;
      while (p < header.size() && is_ascii_space(header[p])) ++p;
      std::size_t q = p;
      while (q < header.size() && !is_ascii_space(header[q])) ++q;
      FastaRecord rec;
      rec.id = std::string(header.substr(p, q - p));
      if (rec.id.empty()) {
        throw InvalidEncoding("FASTA header without id on line " + std::to_string(line_no));
      }
      while (q < header.size() && is_ascii_space(header[q])) ++q;
      rec.description = std::string(header.substr(q));
      records.push_back(std::move(rec));
      continue;
    }

    bool blank = true;
    for (char c : line) {
      if (!is_ascii_space(c)) {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    if (records.empty()) {
      throw InvalidEncoding("FASTA sequence data before first header on line " +
                            std::to_string(line_no));
    }
    for (char c : line) {
      if (!is_ascii_space(c)) records.back().sequence.push_back(c);
    }
  }
  return records;
}

SymbolSequence read_plain(const InputSpec& spec, std::istream& stdin_stream) {
  const std::string raw = read_source(spec, stdin_stream);
  std::string_view body = raw;
  if (spec.strip_trailing_newline) body = strip_one_newline(body);
  return decode(body, spec.symbol_mode);
}

SymbolSequence read_plain(const InputSpec& spec) { return read_plain(spec, std::cin); }

SymbolSequence read_fasta(const InputSpec& spec, std::istream& stdin_stream) {
  const std::vector<FastaRecord> records = parse_fasta(read_source(spec, stdin_stream));
  if (records.empty()) throw EmptyFasta("FASTA input contains no records");
  if (!spec.fasta_record) return decode(records.front().sequence, spec.symbol_mode);
  for (const FastaRecord& rec : records) {
    if (rec.id == *spec.fasta_record) return decode(rec.sequence, spec.symbol_mode);
  }
  throw RecordNotFound("FASTA record '" + *spec.fasta_record + "' not found");
}

SymbolSequence read_fasta(const InputSpec& spec) { return read_fasta(spec, std::cin); }

SymbolSequence read_input(const InputSpec& spec, std::istream& stdin_stream) {
  return spec.format == InputFormat::fasta ? read_fasta(spec, stdin_stream)
                                           : read_plain(spec, stdin_stream);
}

}  // namespace seqstr
