#include "hornlearn/formula_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hornlearn/errors.hpp"

namespace hornlearn {

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Lexeme {
  enum class Kind { token, arrow } kind;
  std::string text;
};

std::vector<Lexeme> lex(std::string_view line, std::size_t line_no) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Lexeme::Kind::arrow, "->"});
      i += 2;
    } else if (is_token_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_token_char(line[j])) ++j;
      out.push_back({Lexeme::Kind::token, std::string(line.substr(i, j - i))});
      i = j;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

}  // namespace

HornFormula parse_formula(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  bool have_header = false;
  std::vector<Implication> imps;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      constexpr std::string_view kHeader = "vars:";
      if (!line.starts_with(kHeader)) throw ParseError(line_no, "missing header 'vars: ...'");
      for (auto& lexeme : lex(line.substr(kHeader.size()), line_no)) {
        if (lexeme.kind != Lexeme::Kind::token)
          throw ParseError(line_no, "unexpected '->' in header");
        if (!index.emplace(lexeme.text, names.size()).second)
          throw ParseError(line_no, "duplicate variable '" + lexeme.text + "'");
        names.push_back(std::move(lexeme.text));
      }
      have_header = true;
      continue;
    }

    const std::size_t n = names.size();
    VarSet antecedent(n), consequent(n);
    bool seen_arrow = false;
    for (auto& lexeme : lex(line, line_no)) {
      if (lexeme.kind == Lexeme::Kind::arrow) {
        if (seen_arrow) throw ParseError(line_no, "more than one '->'");
        seen_arrow = true;
        continue;
      }
      auto it = index.find(lexeme.text);
      if (it == index.end()) throw ParseError(line_no, "unknown variable '" + lexeme.text + "'");
      (seen_arrow ? consequent : antecedent).insert(it->second);
    }
    if (!seen_arrow) throw ParseError(line_no, "expected '->'");
    if (consequent.none()) throw ParseError(line_no, "empty consequent");
    imps.push_back({std::move(antecedent), std::move(consequent)});
  }
  if (!have_header) throw ParseError(0, "missing header 'vars: ...'");
  const std::size_t n = names.size();
  return HornFormula(n, std::move(imps), n == 0 ? std::vector<std::string>{} : std::move(names));
}

std::string format_varset(const VarSet& s, const std::vector<std::string>& names) {
  std::string out;
  for_each_member(s, [&](std::size_t v) {
    if (!out.empty()) out += ' ';
    out += names.at(v);
  });
  return out;
}

std::string serialize_formula(const HornFormula& h) {
  const std::vector<std::string> names = h.has_names() ? h.names() : default_names(h.arity());
  std::ostringstream out;
  out << "vars:";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  for (const auto& imp : h.implications()) {
    std::string lhs = format_varset(imp.antecedent, names);
    if (!lhs.empty()) out << lhs << ' ';
    out << "-> " << format_varset(imp.consequent, names) << '\n';
  }
  return out.str();
}

HornFormula read_formula_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_formula(buf.str());
}

VarSet parse_varset(std::string_view text, const std::vector<std::string>& names) {
  VarSet s(names.size());
  std::string_view t = trim(text);
  if (t.empty() || t == "{}" || t == "-") return s;
  if (t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  std::size_t i = 0;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && is_token_char(t[j])) ++j;
    if (j == i) throw ParseError(0, std::string("unexpected character '") + t[i] + "' in variable set");
    std::string tok(t.substr(i, j - i));
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw ParseError(0, "unknown variable '" + tok + "'");
    s.insert(static_cast<std::size_t>(it - names.begin()));
    i = j;
  }
  return s;
}

}  // namespace hornlearn
