#include "argmat/af.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "argmat/errors.hpp"

namespace argmat {

namespace {

bool is_label_char(char c) {
  if (std::isspace(static_cast<unsigned char>(c))) return false;
  switch (c) {
    case '(':
    case ')':
    case ',':
    case '.':
    case '%':
    case '#':
      return false;
    default:
      return true;
  }
}

void check_label(const std::string& label) {
  if (label.empty())
    throw Error(ErrorCode::InvalidArgument, "argument label may not be empty");
  for (char c : label) {
    if (!is_label_char(c))
      throw Error(ErrorCode::InvalidArgument,
                  "argument label '" + label + "' contains a reserved character");
  }
}

}  // namespace

ArgumentationFramework ArgumentationFramework::from_index_pairs(
    std::vector<std::string> labels, AttackList attacks) {
  ArgumentationFramework af;
  af.labels_ = std::move(labels);
  const int n = af.argument_count();
  for (int i = 0; i < n; ++i) {
    check_label(af.labels_[i]);
    auto [_, inserted] = af.index_.emplace(af.labels_[i], i);
    if (!inserted) throw DuplicateArgument(af.labels_[i]);
  }
  for (auto [src, dst] : attacks) {
    if (src < 0 || src >= n || dst < 0 || dst >= n)
      throw Error(ErrorCode::InvalidArgument, "attack index out of range");
  }
  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
  af.attacks_ = std::move(attacks);
  return af;
}

ArgumentationFramework ArgumentationFramework::from_pairs(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& attack_pairs) {
  ArgumentationFramework af = from_index_pairs(labels, {});
  AttackList attacks;
  attacks.reserve(attack_pairs.size());
  for (const auto& [src, dst] : attack_pairs)
    attacks.emplace_back(af.index_of(src), af.index_of(dst));
  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
  af.attacks_ = std::move(attacks);
  return af;
}

const std::string& ArgumentationFramework::label(int index) const {
  if (index < 0 || index >= argument_count())
    throw Error(ErrorCode::InvalidArgument, "argument index out of range");
  return labels_[static_cast<std::size_t>(index)];
}

int ArgumentationFramework::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw UnknownArgument(std::string(label));
  return it->second;
}

bool ArgumentationFramework::has_argument(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

bool ArgumentationFramework::has_attack(int source, int target) const {
  return std::binary_search(attacks_.begin(), attacks_.end(),
                            std::make_pair(source, target));
}

// ---------------------------------------------------------------------------
// APX

namespace {

// Character-level scanner over an APX document. Tracks the current line for
// diagnostics; '%' comments are consumed as whitespace.
class ApxScanner {
public:
  explicit ApxScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  int line() const { return line_; }

  std::string read_label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start)
      throw ParseError(pos_ < text_.size()
                           ? std::string("expected a label before '") + text_[pos_] + "'"
                           : "expected a label before end of input",
                       line_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError(std::string("expected '") + c + "' before end of input", line_);
    if (text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'",
                       line_);
    ++pos_;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  ApxScanner scan(text);
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> seen;
  ArgumentationFramework::AttackList attacks;

  while (!scan.at_end()) {
    int line = scan.line();
    std::string head = scan.read_label();
    if (head == "arg") {
      scan.expect('(');
      std::string label = scan.read_label();
      scan.expect(')');
      scan.expect('.');
      auto [_, inserted] = seen.emplace(label, static_cast<int>(labels.size()));
      if (!inserted) throw DuplicateArgument(label, line);
      labels.push_back(std::move(label));
    } else if (head == "att") {
      scan.expect('(');
      std::string src = scan.read_label();
      scan.expect(',');
      std::string dst = scan.read_label();
      scan.expect(')');
      scan.expect('.');
      auto src_it = seen.find(src);
      if (src_it == seen.end()) throw UnknownArgument(src, line);
      auto dst_it = seen.find(dst);
      if (dst_it == seen.end()) throw UnknownArgument(dst, line);
      attacks.emplace_back(src_it->second, dst_it->second);
    } else {
      throw ParseError("expected 'arg' or 'att' but found '" + head + "'", line);
    }
  }
  return ArgumentationFramework::from_index_pairs(std::move(labels), std::move(attacks));
}

std::string serialize_apx(const ArgumentationFramework& af) {
  std::string out;
  for (int i = 0; i < af.argument_count(); ++i) {
    out += "arg(";
    out += af.label(i);
    out += ").\n";
  }
  for (auto [src, dst] : af.attacks()) {
    out += "att(";
    out += af.label(src);
    out += ',';
    out += af.label(dst);
    out += ").\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// TGF

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

ArgumentationFramework parse_tgf(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> seen;
  ArgumentationFramework::AttackList attacks;

  bool in_edges = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                    : eol - pos));
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty()) continue;  // blank line
    if (!in_edges && tokens.size() == 1 && tokens[0] == "#") {
      in_edges = true;
      continue;
    }
    if (!in_edges) {
      if (tokens.size() != 1)
        throw ParseError("expected a single node label, found " +
                             std::to_string(tokens.size()) + " tokens",
                         line_no);
      auto [_, inserted] = seen.emplace(tokens[0], static_cast<int>(labels.size()));
      if (!inserted) throw DuplicateArgument(tokens[0], line_no);
      labels.push_back(std::move(tokens[0]));
    } else {
      if (tokens.size() != 2)
        throw ParseError("expected 'source target', found " +
                             std::to_string(tokens.size()) + " tokens",
                         line_no);
      auto src_it = seen.find(tokens[0]);
      if (src_it == seen.end()) throw UnknownArgument(tokens[0], line_no);
      auto dst_it = seen.find(tokens[1]);
      if (dst_it == seen.end()) throw UnknownArgument(tokens[1], line_no);
      attacks.emplace_back(src_it->second, dst_it->second);
    }
  }
  if (!in_edges) throw ParseError("missing '#' separator line", line_no);
  return ArgumentationFramework::from_index_pairs(std::move(labels), std::move(attacks));
}

std::string serialize_tgf(const ArgumentationFramework& af) {
  std::string out;
  for (int i = 0; i < af.argument_count(); ++i) {
    out += af.label(i);
    out += '\n';
  }
  out += "#\n";
  for (auto [src, dst] : af.attacks()) {
    out += af.label(src);
    out += ' ';
    out += af.label(dst);
    out += '\n';
  }
  return out;
}

}  // namespace argmat
