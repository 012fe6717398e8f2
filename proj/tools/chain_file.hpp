#pragma once

// Plain-text chain files, one record per line:
//
//   [name:] word [@ x y]
//
// `#` starts a comment, blank lines are ignored, whitespace inside the word
// is ignored, LF and CRLF line endings are accepted. Labels are unique.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeman/chain_word.hpp"
#include "freeman/error.hpp"

namespace freeman::cli {

struct ChainRecord {
  std::optional<std::string> name;
  ChainWord word;
  std::optional<Point> start;
  friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

struct ChainFile {
  std::vector<ChainRecord> records;
  friend bool operator==(const ChainFile&, const ChainFile&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

ChainFile parse_chain_file(std::string_view text);
std::string serialize(const ChainFile& file);

}  // namespace freeman::cli
