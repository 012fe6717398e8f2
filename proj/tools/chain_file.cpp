#include "chain_file.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace freeman::cli {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// First and one-past-last non-blank positions of line[from, to).
std::pair<std::size_t, std::size_t> trim(std::string_view line, std::size_t from, std::size_t to) {
  while (from < to && is_space(line[from])) ++from;
  while (to > from && is_space(line[to - 1])) --to;
  return {from, to};
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

ChainFile parse_chain_file(std::string_view text) {
  ChainFile file;
  std::set<std::string> labels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    std::size_t end = line.find('#');
    if (end == std::string_view::npos) end = line.size();
    auto [first, last] = trim(line, 0, end);
    if (first == last) continue;

    auto error = [line_no](std::size_t col0, const std::string& message) {
      return ParseError(line_no, col0 + 1, message);
    };

    ChainRecord record;
    std::size_t word_from = first;
    const std::size_t colon = line.substr(0, last).find(':');
    if (colon != std::string_view::npos) {
      auto [nf, nl] = trim(line, first, colon);
      if (nf == nl) throw error(colon, "empty label");
      for (std::size_t i = nf; i < nl; ++i) {
        if (!is_label_char(line[i])) throw error(i, "invalid label character");
      }
      std::string name(line.substr(nf, nl - nf));
      if (!labels.insert(name).second) throw error(nf, "duplicate label '" + name + "'");
      record.name = std::move(name);
      word_from = colon + 1;
    }

    std::size_t at = line.substr(0, last).find('@', word_from);
    const std::size_t word_to = at == std::string_view::npos ? last : at;
    std::vector<Letter> letters;
    for (std::size_t i = word_from; i < word_to; ++i) {
      const char c = line[i];
      if (is_space(c)) continue;
      if (c < '0' || c > '3') throw error(i, std::string("invalid letter '") + c + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
    record.word = ChainWord(std::move(letters));

    if (at != std::string_view::npos) {
      std::int64_t coords[2];
      std::size_t i = at + 1;
      for (int k = 0; k < 2; ++k) {
        while (i < last && is_space(line[i])) ++i;
        if (i == last) throw error(i, "expected coordinate");
        const auto res = std::from_chars(line.data() + i, line.data() + last, coords[k]);
        if (res.ec != std::errc()) throw error(i, "expected coordinate");
        i = static_cast<std::size_t>(res.ptr - line.data());
        if (i < last && !is_space(line[i])) throw error(i, "unexpected character");
      }
      while (i < last && is_space(line[i])) ++i;
      if (i != last) throw error(i, "trailing characters after start point");
      record.start = Point{coords[0], coords[1]};
    }
    file.records.push_back(std::move(record));
  }
  return file;
}

std::string serialize(const ChainFile& file) {
  std::ostringstream os;
  for (const auto& r : file.records) {
    if (r.name) os << *r.name << ": ";
    os << r.word;
    if (r.start) os << " @ " << r.start->x << ' ' << r.start->y;
    os << '\n';
  }
  return os.str();
}

}  // namespace freeman::cli
