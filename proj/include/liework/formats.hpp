#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liework/catalog.hpp"
#include "liework/errors.hpp"
#include "liework/finite_group.hpp"
#include "liework/invariants.hpp"
#include "liework/lie_algebra.hpp"

namespace liework {

struct LieFile {
  std::string name;
  LieAlgebra algebra;
  std::optional<MetricTensor> metric;
};

struct FmgFile {
  std::string name;
  FiniteMetricGroup group;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

/// Line-oriented token stream; '#' starts a comment, blank lines are skipped.
class TokenLines {
public:
  explicit TokenLines(std::string_view text) {
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t eol = text.find('\n', start);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(start, eol - start);
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      std::vector<Token> toks;
      std::size_t i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        toks.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
        i = j;
      }
      if (!toks.empty()) lines_.push_back(std::move(toks));
      ++line_no;
      if (eol == text.size()) break;
      start = eol + 1;
    }
    end_line_ = lines_.empty() ? 1 : lines_.back().back().line + 1;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const std::vector<Token>& peek() const { return lines_[pos_]; }
  const std::vector<Token>& next() {
    if (done()) throw ParseError(end_line_, 1, "unexpected end of file");
    return lines_[pos_++];
  }
  [[noreturn]] void fail_eof(const std::string& expected) const {
    throw ParseError(end_line_, 1, "unexpected end of file, expected " + expected);
  }

private:
  std::vector<std::vector<Token>> lines_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
};

inline bool valid_id(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

inline Rat parse_rat_token(const Token& t) {
  auto r = Rat::from_string(t.text);
  if (!r) throw ParseError(t.line, t.col, "expected a rational number, got '" + t.text + "'");
  return *r;
}

inline std::size_t parse_count_token(const Token& t) {
  for (char c : t.text)
    if (c < '0' || c > '9')
      throw ParseError(t.line, t.col, "expected a non-negative integer, got '" + t.text + "'");
  if (t.text.empty() || t.text.size() > 6)
    throw ParseError(t.line, t.col, "expected a non-negative integer, got '" + t.text + "'");
  return static_cast<std::size_t>(std::stoul(t.text));
}

inline void expect_keyword(const std::vector<Token>& line, const std::string& kw,
                           std::size_t ntokens) {
  if (line[0].text != kw)
    throw ParseError(line[0].line, line[0].col, "expected '" + kw + "', got '" + line[0].text + "'");
  if (ntokens != 0 && line.size() != ntokens)
    throw ParseError(line[0].line, line[0].col,
                     "'" + kw + "' line has " + std::to_string(line.size()) + " tokens, expected " +
                         std::to_string(ntokens));
}

inline Mat parse_matrix_rows(TokenLines& in, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (in.done()) in.fail_eof("a matrix row");
    const auto& line = in.next();
    if (line.size() != cols)
      throw ParseError(line[0].line, line[0].col,
                       "matrix row has " + std::to_string(line.size()) + " entries, expected " +
                           std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rat_token(line[c]);
  }
  return m;
}

}  // namespace detail

/// Parses and validates a Lie algebra file; throws ParseError on syntax
/// problems and ValidationError with a transcript on axiom failures.
inline LieFile parse_lie(std::string_view text) {
  using detail::Token;
  detail::TokenLines in(text);

  if (in.done()) in.fail_eof("'lie_algebra <name>'");
  const auto& head = in.next();
  detail::expect_keyword(head, "lie_algebra", 2);
  if (!detail::valid_id(head[1].text))
    throw ParseError(head[1].line, head[1].col, "invalid name '" + head[1].text + "'");
  LieFile out;
  out.name = head[1].text;

  if (in.done()) in.fail_eof("'dim <n>'");
  const auto& dim_line = in.next();
  detail::expect_keyword(dim_line, "dim", 2);
  const std::size_t dim = detail::parse_count_token(dim_line[1]);

  if (in.done()) in.fail_eof("'basis ...'");
  const auto& basis_line = in.next();
  detail::expect_keyword(basis_line, "basis", dim + 1);
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 1; i < basis_line.size(); ++i) {
    const Token& t = basis_line[i];
    if (!detail::valid_id(t.text))
      throw ParseError(t.line, t.col, "invalid basis id '" + t.text + "'");
    if (!index.emplace(t.text, i - 1).second)
      throw ParseError(t.line, t.col, "duplicate basis id '" + t.text + "'");
    names.push_back(t.text);
  }

  LieAlgebra g(dim, names);
  std::set<std::pair<std::size_t, std::size_t>> declared;
  bool saw_end = false;

  auto resolve = [&index](const Token& where, const std::string& id) {
    auto it = index.find(id);
    if (it == index.end())
      throw ParseError(where.line, where.col, "unknown basis id '" + id + "'");
    return it->second;
  };

  while (!in.done()) {
    const auto& line = in.next();
    const Token& kw = line[0];
    if (kw.text == "end") {
      if (line.size() != 1) throw ParseError(kw.line, kw.col, "'end' takes no arguments");
      saw_end = true;
      break;
    }
    if (kw.text == "bracket") {
      if (line.size() < 4)
        throw ParseError(kw.line, kw.col, "bracket line needs '[i,j] = term { + term }'");
      const Token& pair_tok = line[1];
      const std::string& p = pair_tok.text;
      const std::size_t comma = p.find(',');
      if (p.size() < 5 || p.front() != '[' || p.back() != ']' || comma == std::string::npos)
        throw ParseError(pair_tok.line, pair_tok.col, "expected '[id,id]', got '" + p + "'");
      const std::size_t i = resolve(pair_tok, p.substr(1, comma - 1));
      const std::size_t j = resolve(pair_tok, p.substr(comma + 1, p.size() - comma - 2));
      if (i == j)
        throw ParseError(pair_tok.line, pair_tok.col, "bracket pair must be two distinct ids");
      if (i > j)
        throw ParseError(pair_tok.line, pair_tok.col,
                         "bracket pairs must be listed in basis order; write [" + names[j] + "," +
                             names[i] + "] with the opposite sign");
      if (!declared.insert({i, j}).second)
        throw ParseError(pair_tok.line, pair_tok.col, "bracket pair declared twice");
      if (line[2].text != "=")
        throw ParseError(line[2].line, line[2].col, "expected '=' after the bracket pair");

      std::map<std::size_t, Rat> coeffs;
      bool expect_term = true;
      for (std::size_t t = 3; t < line.size(); ++t) {
        const Token& tok = line[t];
        if (!expect_term) {
          if (tok.text != "+")
            throw ParseError(tok.line, tok.col, "expected '+' between terms");
          expect_term = true;
          continue;
        }
        const std::size_t star = tok.text.find('*');
        if (star == std::string::npos)
          throw ParseError(tok.line, tok.col, "expected '<rational>*<id>', got '" + tok.text + "'");
        auto c = Rat::from_string(tok.text.substr(0, star));
        if (!c)
          throw ParseError(tok.line, tok.col,
                           "bad rational coefficient in '" + tok.text + "'");
        const std::size_t k = resolve(tok, tok.text.substr(star + 1));
        coeffs[k] += *c;
        expect_term = false;
      }
      if (expect_term)
        throw ParseError(line.back().line, line.back().col, "dangling '+' at end of bracket line");
      BracketTerms terms;
      for (auto& [k, c] : coeffs)
        if (!c.is_zero()) terms.push_back({k, c});
      if (!terms.empty()) g.add_bracket(i, j, std::move(terms));
      continue;
    }
    if (kw.text == "metric") {
      if (out.metric)
        throw ParseError(kw.line, kw.col, "metric declared twice");
      if (line.size() != 2)
        throw ParseError(kw.line, kw.col, "expected 'metric identity' or 'metric rows'");
      if (line[1].text == "identity") {
        out.metric = MetricTensor::identity(dim);
      } else if (line[1].text == "rows") {
        out.metric = MetricTensor(detail::parse_matrix_rows(in, dim, dim));
      } else {
        throw ParseError(line[1].line, line[1].col,
                         "expected 'identity' or 'rows', got '" + line[1].text + "'");
      }
      continue;
    }
    throw ParseError(kw.line, kw.col, "unexpected '" + kw.text + "'");
  }
  if (!saw_end) in.fail_eof("'end'");
  if (!in.done()) {
    const auto& extra = in.peek();
    throw ParseError(extra[0].line, extra[0].col, "text after 'end'");
  }

  const auto violations = validate(g);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "Jacobi identity fails on " << violations.size() << " basis triple(s):";
    for (const auto& v : violations) {
      os << "\n  (" << g.name(v.i) << "," << g.name(v.j) << "," << g.name(v.k) << ") residual =";
      for (const auto& x : v.residual) os << ' ' << x;
    }
    throw ValidationError(os.str());
  }
  out.algebra = std::move(g);
  return out;
}

/// Parses and validates a finite metric group file.
inline FmgFile parse_fmg(std::string_view text) {
  using detail::Token;
  detail::TokenLines in(text);

  if (in.done()) in.fail_eof("'metric_group <name>'");
  const auto& head = in.next();
  detail::expect_keyword(head, "metric_group", 2);
  if (!detail::valid_id(head[1].text))
    throw ParseError(head[1].line, head[1].col, "invalid name '" + head[1].text + "'");
  const std::string name = head[1].text;

  if (in.done()) in.fail_eof("'order <m>'");
  const auto& order_line = in.next();
  detail::expect_keyword(order_line, "order", 2);
  const std::size_t order = detail::parse_count_token(order_line[1]);
  if (order == 0)
    throw ParseError(order_line[1].line, order_line[1].col, "order must be positive");

  if (in.done()) in.fail_eof("'elements ...'");
  const auto& el_line = in.next();
  detail::expect_keyword(el_line, "elements", order + 1);
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 1; i < el_line.size(); ++i) {
    const Token& t = el_line[i];
    if (!detail::valid_id(t.text))
      throw ParseError(t.line, t.col, "invalid element id '" + t.text + "'");
    if (!index.emplace(t.text, i - 1).second)
      throw ParseError(t.line, t.col, "duplicate element id '" + t.text + "'");
    labels.push_back(t.text);
  }

  if (in.done()) in.fail_eof("'table'");
  detail::expect_keyword(in.next(), "table", 1);
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t r = 0; r < order; ++r) {
    if (in.done()) in.fail_eof("a table row");
    const auto& line = in.next();
    if (line.size() != order)
      throw ParseError(line[0].line, line[0].col,
                       "table row has " + std::to_string(line.size()) + " entries, expected " +
                           std::to_string(order));
    for (std::size_t c = 0; c < order; ++c) {
      auto it = index.find(line[c].text);
      if (it == index.end())
        throw ParseError(line[c].line, line[c].col, "unknown element id '" + line[c].text + "'");
      table[r][c] = it->second;
    }
  }

  if (in.done()) in.fail_eof("'metric'");
  detail::expect_keyword(in.next(), "metric", 1);
  const Mat dist = detail::parse_matrix_rows(in, order, order);

  if (in.done()) in.fail_eof("'end'");
  const auto& end_line = in.next();
  detail::expect_keyword(end_line, "end", 1);
  if (!in.done()) {
    const auto& extra = in.peek();
    throw ParseError(extra[0].line, extra[0].col, "text after 'end'");
  }

  FiniteMetricGroup group(labels, 0, table, dist);
  const auto violations = validate_group(group);
  if (!violations.empty()) {
    std::ostringstream os;
    os << violations.size() << " group/metric axiom violation(s):";
    for (const auto& v : violations) os << "\n  [" << v.kind << "] " << v.detail;
    throw ValidationError(os.str());
  }
  return FmgFile{name, std::move(group)};
}

/// Standalone metric file: a 'metric identity' or 'metric rows' block.
inline MetricTensor parse_metric_override(std::string_view text, std::size_t dim) {
  detail::TokenLines in(text);
  if (in.done()) in.fail_eof("'metric identity' or 'metric rows'");
  const auto& head = in.next();
  detail::expect_keyword(head, "metric", 2);
  MetricTensor result = MetricTensor::identity(dim);
  if (head[1].text == "identity") {
    // keep identity
  } else if (head[1].text == "rows") {
    result = MetricTensor(detail::parse_matrix_rows(in, dim, dim));
  } else {
    throw ParseError(head[1].line, head[1].col,
                     "expected 'identity' or 'rows', got '" + head[1].text + "'");
  }
  if (!in.done()) {
    const auto& line = in.next();
    detail::expect_keyword(line, "end", 1);
  }
  return result;
}

/// First keyword of the file, for dispatching between the two formats.
inline std::string detect_format(std::string_view text) {
  detail::TokenLines in(text);
  if (in.done()) return "";
  return in.peek()[0].text;
}

inline std::string serialize_lie(const LieFile& f) {
  std::ostringstream os;
  const LieAlgebra& g = f.algebra;
  os << "lie_algebra " << f.name << "\n";
  os << "dim " << g.dim() << "\n";
  os << "basis";
  for (const auto& n : g.names()) os << ' ' << n;
  os << "\n";
  for (const auto& [pair, terms] : g.structure()) {
    os << "bracket [" << g.name(pair.first) << "," << g.name(pair.second) << "] =";
    bool first = true;
    for (const auto& t : terms) {
      os << (first ? " " : " + ") << to_string(t.c) << '*' << g.name(t.k);
      first = false;
    }
    os << "\n";
  }
  if (f.metric) {
    if (f.metric->q() == Mat::identity(g.dim())) {
      os << "metric identity\n";
    } else {
      os << "metric rows\n";
      for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < g.dim(); ++j) os << (j ? " " : "") << f.metric->q()(i, j);
        os << "\n";
      }
    }
  }
  os << "end\n";
  return os.str();
}

inline std::string serialize_fmg(const FmgFile& f) {
  std::ostringstream os;
  const FiniteMetricGroup& g = f.group;
  os << "metric_group " << f.name << "\n";
  os << "order " << g.order() << "\n";
  os << "elements";
  for (const auto& l : g.labels()) os << ' ' << l;
  os << "\n";
  os << "table\n";
  for (std::size_t r = 0; r < g.order(); ++r) {
    for (std::size_t c = 0; c < g.order(); ++c)
      os << (c ? " " : "") << g.label(g.mul(r, c));
    os << "\n";
  }
  os << "metric\n";
  for (std::size_t r = 0; r < g.order(); ++r) {
    for (std::size_t c = 0; c < g.order(); ++c) os << (c ? " " : "") << g.distance(r, c);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

/// Canonical text of a catalog entry, in the matching file format.
inline std::string serialize_entry(const CatalogEntry& e) {
  if (e.kind == CatalogKind::lie_algebra)
    return serialize_lie(LieFile{e.name, *e.lie, e.metric});
  return serialize_fmg(FmgFile{e.name, *e.fmg});
}

}  // namespace liework
