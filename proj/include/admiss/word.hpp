#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "admiss/group.hpp"

namespace admiss {

/// A free-group word kept as a tree so commutator structure survives.
///
/// Node kinds: a generator raised to an integer power, an ordered product,
/// a commutator [u,v] = u^-1 v^-1 u v, and a power u^k of a subword.
class Word {
 public:
  enum class Kind { generator, product, commutator, power };

  Word() : kind_(Kind::product) {}  // the empty product

  static Word generator(std::size_t index, std::int64_t exponent = 1);
  static Word product(std::vector<Word> factors);
  static Word commutator(Word u, Word v);
  static Word power(Word base, std::int64_t exponent);
  static Word identity() { return Word(); }

  Word inverse() const { return power(*this, -1); }
  // by^-1 * this * by
  Word conjugated_by(const Word& by) const;

  Kind kind() const noexcept { return kind_; }
  std::size_t generator_index() const noexcept { return index_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  const std::vector<Word>& children() const noexcept { return children_; }

  // Largest generator index that occurs, if any.
  std::optional<std::size_t> max_generator() const;
  // Total exponent of each generator; commutators contribute zero.
  std::vector<std::int64_t> exponent_sums(std::size_t generator_count) const;
  // Exponent k when the word is a single generator power x^k (k != 0).
  std::optional<std::pair<std::size_t, std::int64_t>> as_generator_power() const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  Kind kind_;
  std::size_t index_ = 0;
  std::int64_t exponent_ = 0;
  std::vector<Word> children_;
};

/// A word flattened into a postfix program for repeated evaluation.
class CompiledWord {
 public:
  CompiledWord() = default;
  explicit CompiledWord(const Word& w);

  // `assignment[k]` is the image of generator k; it must cover every
  // generator the word uses.
  Element evaluate(const FiniteGroup& g, std::span<const Element> assignment) const;

  // One more than the largest generator index used (0 for a constant word).
  std::size_t arity() const noexcept { return arity_; }

 private:
  enum class Op : std::uint8_t { push_generator, push_identity, multiply, commutator, power };
  struct Instr {
    Op op;
    std::uint32_t index;
    std::int64_t exponent;
  };
  std::vector<Instr> program_;
  std::size_t max_depth_ = 0;
  std::size_t arity_ = 0;
};

// Evaluates `w` at the assignment; throws InputError when the assignment is
// too short or names an element outside G.
Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g);

}  // namespace admiss
