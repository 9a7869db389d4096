#include "argcsp/interchange.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>

namespace argcsp {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

class DlReader {
 public:
  explicit DlReader(std::string_view text) : s_(text) {}

  Framework read() {
    enum class Weights { Unknown, Plain, Cost, Fuzzy } mode = Weights::Unknown;
    std::vector<std::string> names;
    std::unordered_map<std::string, ArgumentId> ids;
    std::vector<Attack> attacks;
    std::set<Attack> seen;
    std::vector<SemiringValue> weights;

    while (true) {
      skip();
      if (i_ == s_.size()) break;
      Token head = word("statement keyword");
      expect('(');
      if (head.text == "arg") {
        Token n = word("argument name");
        expect(')');
        expect('.');
        if (ids.count(n.text)) throw error(n, "duplicate argument '" + n.text + "'");
        ids.emplace(n.text, static_cast<ArgumentId>(names.size()));
        names.push_back(n.text);
        continue;
      }
      if (head.text != "att" && head.text != "watt") throw error(head, "unknown statement '" + head.text + "'");
      Token a = word("argument name");
      expect(',');
      Token b = word("argument name");
      std::optional<Token> w;
      if (head.text == "watt") {
        expect(',');
        w = weight_token();
      }
      expect(')');
      expect('.');

      auto find = [&](const Token& t) {
        auto it = ids.find(t.text);
        if (it == ids.end()) throw error(t, "undeclared argument '" + t.text + "'");
        return it->second;
      };
      Attack at{find(a), find(b)};
      if (!seen.insert(at).second) throw error(head, "duplicate attack (" + a.text + "," + b.text + ")");

      Weights kind = Weights::Plain;
      if (w) kind = w->text.find('.') == std::string::npos ? Weights::Cost : Weights::Fuzzy;
      if (mode != Weights::Unknown && mode != kind) {
        throw error(head, kind == Weights::Plain || mode == Weights::Plain ? "att and watt statements are mixed"
                                                                            : "integer and decimal weights are mixed");
      }
      mode = kind;
      if (w) weights.push_back(parse_weight(*w, kind == Weights::Cost));
      attacks.push_back(at);
    }

    const std::size_t n = names.size();
    if (mode == Weights::Cost || mode == Weights::Fuzzy) {
      auto semiring = make_instance(mode == Weights::Cost ? SemiringKind::Weighted : SemiringKind::Fuzzy);
      return Framework::weighted(n, std::move(attacks), std::move(weights), std::move(semiring),
                                 std::move(names));
    }
    return Framework(n, std::move(attacks), std::move(names));
  }

 private:
  [[nodiscard]] ParseError error(const Token& t, const std::string& what) const {
    return ParseError(t.line, t.column, what);
  }
  [[nodiscard]] ParseError error_here(const std::string& what) const { return ParseError(line_, column(), what); }
  [[nodiscard]] std::size_t column() const { return i_ - line_start_ + 1; }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      line_start_ = i_ + 1;
    }
    ++i_;
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == '%') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token word(const char* what) {
    skip();
    Token t{"", line_, column()};
    while (i_ < s_.size() && name_char(s_[i_])) {
      t.text += s_[i_];
      advance();
    }
    if (t.text.empty()) throw error_here(std::string("expected ") + what);
    return t;
  }

  Token weight_token() {
    skip();
    Token t{"", line_, column()};
    while (i_ < s_.size() && (name_char(s_[i_]) || s_[i_] == '.')) {
      // A '.' not followed by a digit ends the statement rather than the number.
      if (s_[i_] == '.' && (i_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) break;
      t.text += s_[i_];
      advance();
    }
    if (t.text.empty()) throw error_here("expected a weight");
    return t;
  }

  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) {
      throw error_here(std::string("expected '") + c + "'" +
                       (i_ < s_.size() ? std::string(", found '") + s_[i_] + "'" : std::string(" at end of input")));
    }
    advance();
  }

  SemiringValue parse_weight(const Token& t, bool cost) const {
    const std::string& w = t.text;
    if (cost) {
      if (w == "inf") return SemiringValue::infinite_cost();
      if (w.empty() || w.size() > 19 || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw error(t, "malformed integer weight '" + w + "'");
      }
      std::uint64_t v = std::stoull(w);
      if (v == 0) throw error(t, "weight 0 is the top value, which denotes no attack");
      return SemiringValue::cost(v);
    }
    auto dot = w.find('.');
    std::string whole = w.substr(0, dot);
    std::string frac = w.substr(dot + 1);
    auto digits = [](const std::string& x) {
      return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (!digits(whole) || !digits(frac) || frac.size() > 2 || whole.size() > 1) {
      throw error(t, "malformed decimal weight '" + w + "'");
    }
    if (frac.size() == 1) frac += '0';
    int h = std::stoi(whole) * 100 + std::stoi(frac);
    if (h > 100) throw error(t, "decimal weight '" + w + "' exceeds 1");
    if (h == 100) throw error(t, "weight 1.00 is the top value, which denotes no attack");
    return SemiringValue::hundredths(h);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

std::string weight_text(const SemiringValue& v) {
  switch (v.tag()) {
    case ValueTag::Cost: return v.is_infinite() ? "inf" : std::to_string(v.as_cost());
    case ValueTag::Hundredths: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%d.%02d", v.as_hundredths() / 100, v.as_hundredths() % 100);
      return buf;
    }
    default: throw std::invalid_argument("the .dl format stores cost or fuzzy weights only");
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Framework parse_dl(std::string_view text) {
  try {
    return DlReader(text).read();
  } catch (const FrameworkError& e) {
    throw ParseError(0, 0, e.what());
  }
}

std::string emit_dl(const Framework& f, bool unweighted) {
  std::ostringstream out;
  for (const auto& n : f.names()) out << "arg(" << n << ").\n";
  auto attacks = f.attacks();
  const bool weighted = f.is_weighted() && !unweighted;
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    const auto& from = f.name(attacks[i].attacker);
    const auto& to = f.name(attacks[i].target);
    if (weighted) {
      out << "watt(" << from << "," << to << "," << weight_text(f.weights()[i]) << ").\n";
    } else {
      out << "att(" << from << "," << to << ").\n";
    }
  }
  return out.str();
}

std::string emit_dot(const Framework& f, const std::optional<Extension>& highlight) {
  if (highlight && highlight->universe() != f.size()) throw std::invalid_argument("highlight does not match the framework");
  std::ostringstream out;
  out << "digraph af {\n";
  for (ArgumentId a = 0; a < f.size(); ++a) {
    out << "  " << quoted(f.name(a));
    if (highlight && highlight->contains(a)) out << " [style=filled, fillcolor=gray]";
    out << ";\n";
  }
  auto attacks = f.attacks();
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    out << "  " << quoted(f.name(attacks[i].attacker)) << " -> " << quoted(f.name(attacks[i].target));
    if (f.is_weighted()) out << " [label=" << quoted(f.weights()[i].to_string()) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_results(const Framework& f, const SolveOutcome& outcome, const ResultsMeta& meta) {
  std::ostringstream out;
  for (const auto& [k, v] : meta.fields) out << k << ": " << v << "\n";
  out << "complete: " << (outcome.complete ? "true" : "false") << "\n";
  out << "timed-out: " << (outcome.timed_out ? "true" : "false") << "\n";
  out << "nodes: " << outcome.nodes << "\n";
  out << "solutions: " << outcome.solutions.size() << "\n";
  for (const auto& e : outcome.solutions) out << "solution: " << format_extension(f, e) << "\n";
  if (meta.include_timing) out << "elapsed-ms: " << outcome.elapsed_ms << "\n";
  return out.str();
}

}  // namespace argcsp
