#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trilogic/formula.hpp"

namespace trilogic {

/// Syntax error. `position` is a 0-based character offset into the input.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, std::vector<std::string> expected, std::string found)
      : std::runtime_error(format(position, expected, found)),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  static std::string format(std::size_t pos, const std::vector<std::string>& expected, const std::string& found) {
    std::string s = "syntax error at position " + std::to_string(pos) + ": expected ";
    if (expected.size() > 1) s += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += ", ";
      s += expected[i];
    }
    return s + ", found " + found;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Which leaves the parser accepts besides F and T.
enum class AtomSyntax {
  propositional,  // atoms [a-z][a-zA-Z0-9_]*
  metavariable,   // law schemas: A, B, C
};

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, AtomSyntax syntax) : text_(text), syntax_(syntax) {}

  Formula parse_all() {
    Formula f = biimplication_level();
    skip_space();
    if (pos_ < text_.size()) fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
    return f;
  }

 private:
  // Precedence, loosest first: <->, ->, |, &, ~. Both arrows associate to
  // the right, & and | to the left.
  Formula biimplication_level() {
    Formula lhs = implication_level();
    if (accept("<->")) return biimplication(lhs, biimplication_level());
    return lhs;
  }

  Formula implication_level() {
    Formula lhs = disjunction_level();
    if (accept("->")) return implication(lhs, implication_level());
    return lhs;
  }

  Formula disjunction_level() {
    Formula f = conjunction_level();
    while (accept("|")) f = disjunction(f, conjunction_level());
    return f;
  }

  Formula conjunction_level() {
    Formula f = unary_level();
    while (accept("&")) f = conjunction(f, unary_level());
    return f;
  }

  Formula unary_level() {
    if (accept("~")) return negation(unary_level());
    return primary();
  }

  Formula primary() {
    skip_space();
    if (accept("(")) {
      Formula f = biimplication_level();
      if (!accept(")")) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
      return f;
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (word == "F") return falsum();
      if (word == "T") return verum();
      if (syntax_ == AtomSyntax::propositional && std::islower(static_cast<unsigned char>(word[0])))
        return atom(word);
      if (syntax_ == AtomSyntax::metavariable && (word == "A" || word == "B" || word == "C")) return atom(word);
      pos_ = start;
    }
    fail({leaf_description(), "'F'", "'T'", "'~'", "'('"});
  }

  std::string leaf_description() const {
    return syntax_ == AtomSyntax::propositional ? "atom" : "metavariable A, B or C";
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    // "-" alone is not a token; "<->" must not be read as "<" "->".
    pos_ += token.size();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = "end of input";
    if (pos_ < text_.size()) {
      std::size_t end = pos_ + 1;
      if (std::isalpha(static_cast<unsigned char>(text_[pos_])))
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
          ++end;
      found = "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
    }
    throw parse_error(pos_, std::move(expected), found);
  }

  std::string_view text_;
  AtomSyntax syntax_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII syntax: atoms, F, T (= ~F), ~, &, |, -> and <->
/// (expanded to a conjunction of two implications).
inline Formula parse_formula(std::string_view text, AtomSyntax syntax = AtomSyntax::propositional) {
  return detail::FormulaParser(text, syntax).parse_all();
}

}  // namespace trilogic
