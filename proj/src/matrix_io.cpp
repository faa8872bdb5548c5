#include "combmat/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace combmat {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a non-negative dimension, got '" + tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError(line, "dimension out of range '" + tok + "'");
  }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON matrix: ") + e.what());
    }
    return parse_matrix_json(j);
  }
  return parse_matrix_text(text);
}

Matrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!is_blank_or_comment(line)) return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 'rows cols'");
  const auto header = split_ws(line);
  if (header.size() != 2) throw ParseError(lineno, "header must be 'rows cols'");
  const std::size_t rows = parse_count(header[0], lineno);
  const std::size_t cols = parse_count(header[1], lineno);

  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows && cols > 0; ++r) {
    if (!next_content_line()) {
      throw ParseError(lineno + 1, "expected " + std::to_string(rows) + " rows, found " +
                                       std::to_string(r));
    }
    const auto toks = split_ws(line);
    if (toks.size() != cols) {
      throw ParseError(lineno, "expected " + std::to_string(cols) + " entries, got " +
                                   std::to_string(toks.size()));
    }
    for (const auto& t : toks) {
      try {
        entries.push_back(Rational::parse(t));
      } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
      }
    }
  }
  if (next_content_line()) throw ParseError(lineno, "trailing content after matrix");
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError(0, "JSON matrix needs 'rows', 'cols' and 'entries'");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw ParseError(0, "JSON 'rows'/'cols' must be non-negative integers");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& e = j["entries"];
  if (!e.is_array() || e.size() != rows) throw ParseError(0, "JSON 'entries' must hold 'rows' arrays");
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!e[r].is_array() || e[r].size() != cols) {
      throw ParseError(0, "JSON row " + std::to_string(r + 1) + " must hold 'cols' entries");
    }
    for (const auto& v : e[r]) {
      if (v.is_string()) {
        entries.push_back(Rational::parse(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        entries.push_back(Rational(v.get<long>()));
      } else {
        throw ParseError(0, "JSON entries must be strings \"p/q\" or integers");
      }
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

std::string render_matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

std::string render_matrix_compact(const Matrix& m) {
  Integer common = 1;
  for (const auto& x : m.entries()) {
    const Integer d = x.den();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
  }
  std::ostringstream os;
  if (common != 1) os << "1/" << common.get_str() << "\xC2\xB7";
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << (m(i, j) * Rational(common));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace combmat
