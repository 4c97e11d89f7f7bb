#include "schemeforge/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "schemeforge/errors.hpp"

namespace schemeforge {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t order = 0;
  bool have_order = false;
  std::vector<std::vector<Rational>> rows;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!have_order) {
      if (tokens.size() != 1) throw ParseError("order line must hold a single integer", line_no, tokens[1].column);
      Rational n;
      if (!try_parse_rational(tokens[0].text, n) || !is_integer(n) || n <= 0 ||
          tokens[0].text.find('.') != std::string_view::npos || tokens[0].text.find('/') != std::string_view::npos) {
        throw ParseError("order must be a positive integer, got '" + std::string(tokens[0].text) + "'", line_no,
                         tokens[0].column);
      }
      if (!n.get_num().fits_ulong_p() || n.get_num() > 100000) {
        throw ParseError("order too large", line_no, tokens[0].column);
      }
      order = n.get_num().get_ui();
      have_order = true;
    } else {
      if (rows.size() == order) throw ParseError("more than " + std::to_string(order) + " rows", line_no, tokens[0].column);
      if (tokens.size() != order) {
        const std::size_t col = tokens.size() > order ? tokens[order].column : line.size() + 1;
        throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(order),
                         line_no, col);
      }
      std::vector<Rational> row;
      row.reserve(order);
      for (const auto& t : tokens) {
        Rational v;
        if (!try_parse_rational(t.text, v)) {
          throw ParseError("cannot read '" + std::string(t.text) + "' as an exact number", line_no, t.column);
        }
        row.push_back(std::move(v));
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }

  if (!have_order) throw ParseError("missing order line", line_no, 1);
  if (rows.size() != order) {
    throw ParseError("expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()), line_no, 1);
  }
  return Matrix::from_rows(rows);
}

Matrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string serialize_matrix(const Matrix& m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (std::size_t x = 0; x < m.order(); ++x) {
    for (std::size_t y = 0; y < m.order(); ++y) {
      if (y) out += ' ';
      out += to_string(m(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace schemeforge
