#include "cutlift/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "cutlift/errors.hpp"

namespace cutlift {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& msg,
                       const std::string& token = "") {
  throw ParseError(line.number, token, msg);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(line, "expected " + std::to_string(n) + " tokens, got " +
                   std::to_string(line.tokens.size()),
         line.tokens[0]);
}

}  // namespace

Rational parse_rational(const std::string& token) {
  auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(token));
    Int num(token.substr(0, slash));
    Int den(token.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw Error("malformed rational '" + token + "'");
  }
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "", "empty graph file");

  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  bool header_seen = false;
  for (const auto& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "graph") {
      expect_arity(line, 2);
      if (header_seen) fail(line, "duplicate graph header", kw);
      name = line.tokens[1];
      header_seen = true;
    } else if (kw == "node") {
      expect_arity(line, 2);
      nodes.push_back(line.tokens[1]);
    } else if (kw == "edge") {
      expect_arity(line, 3);
      edges.emplace_back(line.tokens[1], line.tokens[2]);
    } else {
      fail(line, "unknown directive", kw);
    }
    if (!header_seen) fail(line, "missing 'graph <name>' header", kw);
  }
  try {
    return Graph(name, std::move(nodes), edges);
  } catch (const Error& e) {
    throw ParseError(lines.back().number, "", e.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << "\n";
  for (const auto& l : g.node_labels()) out << "node " << l << "\n";
  for (const auto& e : g.edges())
    out << "edge " << g.label(e.u) << " " << g.label(e.v) << "\n";
  return out.str();
}

Inequality parse_inequality(const std::string& text, GraphPtr g) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "", "empty inequality file");

  Inequality::CoeffList coeffs;
  Rational rhs;
  bool header_seen = false, rhs_seen = false;
  for (const auto& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "ineq") {
      expect_arity(line, 3);
      if (line.tokens[1] != "over") fail(line, "expected 'ineq over <graph>'", kw);
      if (header_seen) fail(line, "duplicate ineq header", kw);
      if (line.tokens[2] != g->name())
        fail(line, "inequality is over graph '" + line.tokens[2] +
                       "' but got graph '" + g->name() + "'",
             line.tokens[2]);
      header_seen = true;
      continue;
    }
    if (!header_seen) fail(line, "missing 'ineq over <graph>' header", kw);
    if (kw == "coef") {
      expect_arity(line, 4);
      if (rhs_seen) fail(line, "coefficient after rhs", kw);
      try {
        Rational c = parse_rational(line.tokens[3]);
        if (g->edge_index(line.tokens[1], line.tokens[2]) < 0)
          fail(line, "coefficient on non-edge", line.tokens[1] + " " + line.tokens[2]);
        coeffs.emplace_back(line.tokens[1], line.tokens[2], std::move(c));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(line, e.what(), line.tokens[3]);
      }
    } else if (kw == "rhs") {
      expect_arity(line, 2);
      if (rhs_seen) fail(line, "duplicate rhs", kw);
      try {
        rhs = parse_rational(line.tokens[1]);
      } catch (const Error& e) {
        fail(line, e.what(), line.tokens[1]);
      }
      rhs_seen = true;
    } else {
      fail(line, "unknown directive", kw);
    }
  }
  if (!rhs_seen) throw ParseError(lines.back().number, "", "missing rhs line");
  return Inequality(std::move(g), coeffs, std::move(rhs));
}

std::string serialize_inequality(const Inequality& q) {
  const Graph& g = q.graph();
  std::ostringstream out;
  out << "ineq over " << g.name() << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    if (q.coeff(e) == 0) continue;
    const auto& edge = g.edges()[e];
    out << "coef " << g.label(edge.u) << " " << g.label(edge.v) << " "
        << format_rational(q.coeff(e)) << "\n";
  }
  out << "rhs " << format_rational(q.rhs()) << "\n";
  return out.str();
}

EliminationPlan parse_plan(const std::string& text) {
  EliminationPlan plan;
  for (const auto& line : tokenize(text)) {
    if (line.tokens[0] != "elim") fail(line, "unknown directive", line.tokens[0]);
    if (line.tokens.size() != 5 && line.tokens.size() != 6)
      fail(line, "expected 'elim <u> <v> -> <w> [form]'", line.tokens[0]);
    if (line.tokens[3] != "->") fail(line, "expected '->'", line.tokens[3]);
    PlanEntry e;
    e.u = line.tokens[1];
    e.v = line.tokens[2];
    e.w = line.tokens[4];
    if (line.tokens.size() == 6) {
      try {
        e.form = form_from_token(line.tokens[5]);
      } catch (const Error& err) {
        fail(line, err.what(), line.tokens[5]);
      }
    }
    plan.entries.push_back(std::move(e));
  }
  if (plan.entries.empty()) throw ParseError(1, "", "empty plan file");
  return plan;
}

std::string serialize_plan(const EliminationPlan& plan) {
  std::ostringstream out;
  for (const auto& e : plan.entries)
    out << "elim " << e.u << " " << e.v << " -> " << e.w << " "
        << form_token(e.form) << "\n";
  return out.str();
}

Inequality parse_bundle(const std::string& text) {
  std::istringstream in(text);
  std::string raw, section;
  std::vector<std::string> sections;
  while (std::getline(in, raw)) {
    if (raw == "---") {
      sections.push_back(section);
      section.clear();
    } else {
      section += raw;
      section += "\n";
    }
  }
  sections.push_back(section);
  if (sections.size() != 2)
    throw ParseError(1, "", "bundle needs exactly one '---' separator, got " +
                                std::to_string(sections.size() - 1));
  auto g = std::make_shared<const Graph>(parse_graph(sections[0]));
  return parse_inequality(sections[1], std::move(g));
}

std::string serialize_bundle(const Inequality& q) {
  return serialize_graph(q.graph()) + "---\n" + serialize_inequality(q);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace cutlift
