#include "crnx/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "crnx/errors.hpp"

namespace crnx {

namespace {

using Terms = std::vector<std::pair<std::string, Count>>;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) +
                     ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }

  Terms complex() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      std::size_t end = pos_ + 1;
      if (end >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[end]))) {
        std::size_t next = end;
        while (next < s_.size() && (s_[next] == ' ' || s_[next] == '\t')) ++next;
        const bool followed_by_ident = next < s_.size() && ident_start(s_[next]);
        if (!followed_by_ident) {
          pos_ = end;
          return {};
        }
      }
    }
    Terms terms;
    terms.push_back(term());
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    return terms;
  }

  // Returns true for "<->".
  bool arrow() {
    skip_ws();
    if (s_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      return true;
    }
    if (s_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return false;
    }
    std::size_t end = pos_;
    while (end < s_.size() && std::string_view("<>-=").find(s_[end]) != std::string_view::npos) {
      ++end;
    }
    if (end > pos_) fail("unknown arrow token '" + std::string(s_.substr(pos_, end - pos_)) + "'");
    fail("expected '->' or '<->'");
  }

 private:
  std::pair<std::string, Count> term() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("negative coefficient");
    Count coeff = 1;
    bool explicit_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      coeff = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (coeff > (INT64_MAX - 9) / 10) fail("coefficient too large");
        coeff = coeff * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      explicit_coeff = true;
      if (coeff == 0) {
        pos_ = start;
        fail("coefficient must be positive");
      }
      skip_ws();
    }
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) {
      fail(explicit_coeff ? "expected species name after coefficient" : "expected species name");
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return {std::string(s_.substr(start, pos_ - start)), coeff};
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Complex to_complex(const Terms& terms, const std::map<std::string, std::size_t>& index,
                   std::size_t m) {
  Complex c{std::vector<Count>(m, 0)};
  for (const auto& [name, coeff] : terms) c.coeffs[index.at(name)] += coeff;
  return c;
}

}  // namespace

CrnDocument parse_crn(std::string_view text) {
  CrnDocument doc;
  doc.text = std::string(text);
  std::vector<std::string> species;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<Terms, Terms>> raw;

  auto note_species = [&](const Terms& terms) {
    for (const auto& t : terms) {
      if (index.emplace(t.first, species.size()).second) species.push_back(t.first);
    }
  };

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineScanner sc(line, line_no);
    if (!sc.at_end()) {
      const SourceLocation loc{line_no, sc.column()};
      Terms lhs = sc.complex();
      const bool both_ways = sc.arrow();
      Terms rhs = sc.complex();
      if (!sc.at_end()) sc.fail("unexpected trailing text");
      note_species(lhs);
      note_species(rhs);
      raw.emplace_back(lhs, rhs);
      doc.reaction_locations.push_back(loc);
      if (both_ways) {
        raw.emplace_back(rhs, lhs);
        doc.reaction_locations.push_back(loc);
      }
    }
    begin = end + 1;
  }

  std::vector<std::pair<Complex, Complex>> reactions;
  for (const auto& [lhs, rhs] : raw) {
    reactions.emplace_back(to_complex(lhs, index, species.size()),
                           to_complex(rhs, index, species.size()));
  }
  doc.network = build_network(std::move(species), reactions);
  return doc;
}

std::string print_crn(const ReactionNetwork& net) {
  std::string out;
  for (const Reaction& r : net.reactions()) {
    out += net.complex_name(r.source) + " -> " + net.complex_name(r.target) + "\n";
  }
  return out;
}

Complex parse_complex(const ReactionNetwork& net, std::string_view text) {
  LineScanner sc(text, 1);
  Terms terms = sc.complex();
  if (!sc.at_end()) sc.fail("unexpected trailing text in complex");
  Complex c{std::vector<Count>(net.num_species(), 0)};
  for (const auto& [name, coeff] : terms) {
    std::optional<std::size_t> i = net.find_species(name);
    if (!i) throw InputError("unknown species '" + name + "'");
    c.coeffs[*i] += coeff;
  }
  return c;
}

std::vector<std::size_t> parse_complex_list(const ReactionNetwork& net, std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(begin, end - begin);
    if (item.find_first_not_of(" \t") != std::string_view::npos) {
      const Complex c = parse_complex(net, item);
      std::optional<std::size_t> idx = net.find_complex(c);
      if (!idx) throw InputError("'" + net.format(c) + "' is not a complex of the network");
      out.push_back(*idx);
    }
    begin = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

State parse_state(const ReactionNetwork& net, std::string_view text) {
  State x(net.num_species(), 0);
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(begin, end - begin));
    begin = end + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw InputError("expected NAME=COUNT in '" + item + "'");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string name = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    std::optional<std::size_t> i = net.find_species(name);
    if (!i) throw InputError("unknown species '" + name + "'");
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("count for " + name + " must be a nonnegative integer");
    }
    x[*i] = std::stoll(value);
  }
  return x;
}

}  // namespace crnx
