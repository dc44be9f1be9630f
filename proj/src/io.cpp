#include "ftpoly/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ftpoly/error.hpp"

namespace ftpoly {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && seps.find(line[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < line.size() && seps.find(line[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Element parse_element(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  Element v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::Parse, "not an integer: '" + std::string(tok) + "'");
  return v;
}

std::vector<Element> parse_json_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw Error(ErrorCode::Parse, "JSON instance must be an object with an \"elements\" array");
  std::vector<Element> out;
  for (const auto& e : doc["elements"]) {
    if (!e.is_number_integer()) throw Error(ErrorCode::Parse, "JSON elements must be integers");
    out.push_back(e.get<Element>());
  }
  return out;
}

}  // namespace

std::vector<Element> parse_instance_text(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_instance(body);
  std::vector<Element> out;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    for (std::string_view tok : tokens(line, " \t\r,")) out.push_back(parse_element(tok));
  }
  return out;
}

std::string write_ine(const ConstraintSystem& cs) {
  std::ostringstream os;
  os << "H-representation\nbegin\n" << cs.size() << ' ' << cs.dimension() + 1 << " rational\n";
  for (const Halfspace& h : cs.rows()) {
    os << to_string(h.rhs);
    for (const Rational& a : h.coeffs) os << ' ' << to_string(Rational(-a));
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string write_ext(const ConstraintSystem& cs, const std::vector<Vertex>& vertices) {
  std::ostringstream os;
  os << "V-representation\nbegin\n" << vertices.size() << ' ' << cs.dimension() + 1 << " rational\n";
  for (const Vertex& v : vertices) {
    os << '1';
    for (const Rational& x : v.coords) os << ' ' << to_string(x);
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

bool looks_like_ine(std::string_view text) { return text.find("H-representation") != std::string_view::npos; }

namespace {

struct RawRow {
  Rational rhs;
  std::vector<Rational> coeffs;  // a, for a.x <= rhs
};

std::vector<RawRow> read_cdd_rows(std::string_view text) {
  std::vector<RawRow> rows;
  bool in_body = false, have_header = false, done = false;
  std::size_t expect_rows = 0, expect_cols = 0;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '*' || line.front() == '#') continue;
    if (done) break;
    if (!in_body) {
      if (line == "begin") in_body = true;
      continue;
    }
    if (line == "end") {
      done = true;
      continue;
    }
    auto toks = tokens(line, " \t\r");
    if (!have_header) {
      if (toks.size() != 3 || toks[2] != "rational")
        throw Error(ErrorCode::Parse, "expected '<rows> <cols> rational', got '" + std::string(line) + "'");
      expect_rows = static_cast<std::size_t>(parse_element(toks[0]));
      expect_cols = static_cast<std::size_t>(parse_element(toks[1]));
      have_header = true;
      continue;
    }
    if (toks.size() != expect_cols)
      throw Error(ErrorCode::Parse, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                        std::to_string(expect_cols));
    RawRow row;
    Rational value;
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (!parse_rational(toks[k], value)) throw Error(ErrorCode::Parse, "bad rational '" + std::string(toks[k]) + "'");
      if (k == 0) {
        row.rhs = value;
      } else {
        row.coeffs.push_back(-value);
      }
    }
    rows.push_back(std::move(row));
  }
  if (!have_header || !done) throw Error(ErrorCode::Parse, "missing 'begin'/'end' block");
  if (rows.size() != expect_rows)
    throw Error(ErrorCode::Parse, "header announces " + std::to_string(expect_rows) + " rows, found " +
                                      std::to_string(rows.size()));
  return rows;
}

bool is_box_row(const RawRow& r) {
  std::size_t nonzero = 0;
  for (const auto& a : r.coeffs) nonzero += sgn(a) != 0;
  return nonzero == 1;
}

// Recovers s_i from a K1 row: sum of coefficients is 2m*M + S = (2m+1)M - 1.
std::optional<ConstraintSystem> rebuild_from_k1(const RawRow& k1) {
  const std::size_t n = k1.coeffs.size();
  Rational total(0);
  for (const auto& a : k1.coeffs) total += a;
  const Rational big_m = (total + 1) / rational(static_cast<Element>(n + 1));
  if (big_m.get_den() != 1) return std::nullopt;
  std::vector<Element> elems;
  for (const auto& a : k1.coeffs) {
    const Rational s = a - big_m;
    if (s.get_den() != 1 || !s.get_num().fits_slong_p()) return std::nullopt;
    elems.push_back(s.get_num().get_si());
  }
  try {
    Instance inst(std::move(elems));
    if (!inst.positive()) return std::nullopt;
    return build_constraints(inst);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool same_rows(const ConstraintSystem& cs, const std::vector<RawRow>& rows) {
  if (rows.size() != cs.size()) return false;
  std::vector<bool> used(rows.size(), false);
  for (const Halfspace& h : cs.rows()) {
    bool matched = false;
    for (std::size_t k = 0; k < rows.size() && !matched; ++k) {
      if (!used[k] && rows[k].rhs == h.rhs && rows[k].coeffs == h.coeffs) used[k] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

ConstraintSystem parse_ine(std::string_view text) {
  if (!looks_like_ine(text)) throw Error(ErrorCode::Parse, "not an H-representation");
  const std::vector<RawRow> rows = read_cdd_rows(text);
  if (rows.empty() || rows.front().coeffs.empty()) throw Error(ErrorCode::Parse, "empty H-representation");
  const std::size_t n = rows.front().coeffs.size();
  if (rows.size() != 2 * n + 2)
    throw Error(ErrorCode::Parse, "expected " + std::to_string(2 * n + 2) + " rows for dimension " +
                                      std::to_string(n));
  std::vector<const RawRow*> knapsacks;
  for (const auto& r : rows) {
    if (!is_box_row(r)) knapsacks.push_back(&r);
  }
  if (knapsacks.size() != 2) throw Error(ErrorCode::Parse, "expected exactly two knapsack rows");
  for (const RawRow* candidate : {knapsacks[0], knapsacks[1]}) {
    auto cs = rebuild_from_k1(*candidate);
    if (cs && same_rows(*cs, rows)) return std::move(*cs);
  }
  throw Error(ErrorCode::Parse, "rows do not form the relaxation of an Exact Partition instance");
}

}  // namespace ftpoly
