#include "admiss/word.hpp"

#include <algorithm>

namespace admiss {

Word Word::generator(std::size_t index, std::int64_t exponent) {
  Word w;
  w.kind_ = Kind::generator;
  w.index_ = index;
  w.exponent_ = exponent;
  return w;
}

Word Word::product(std::vector<Word> factors) {
  if (factors.size() == 1) return std::move(factors.front());
  Word w;
  w.kind_ = Kind::product;
  w.children_ = std::move(factors);
  return w;
}

Word Word::commutator(Word u, Word v) {
  Word w;
  w.kind_ = Kind::commutator;
  w.children_ = {std::move(u), std::move(v)};
  return w;
}

Word Word::power(Word base, std::int64_t exponent) {
  if (base.kind_ == Kind::generator) {
    base.exponent_ *= exponent;
    return base;
  }
  Word w;
  w.kind_ = Kind::power;
  w.exponent_ = exponent;
  w.children_ = {std::move(base)};
  return w;
}

Word Word::conjugated_by(const Word& by) const { return product({by.inverse(), *this, by}); }

std::optional<std::size_t> Word::max_generator() const {
  if (kind_ == Kind::generator) return index_;
  std::optional<std::size_t> best;
  for (const auto& c : children_) {
    auto m = c.max_generator();
    if (m && (!best || *m > *best)) best = m;
  }
  return best;
}

namespace {

void accumulate_sums(const Word& w, std::int64_t scale, std::vector<std::int64_t>& sums) {
  switch (w.kind()) {
    case Word::Kind::generator:
      if (w.generator_index() >= sums.size()) throw InputError("word uses an undeclared generator");
      sums[w.generator_index()] += scale * w.exponent();
      break;
    case Word::Kind::product:
      for (const auto& c : w.children()) accumulate_sums(c, scale, sums);
      break;
    case Word::Kind::commutator:
      break;
    case Word::Kind::power:
      accumulate_sums(w.children().front(), scale * w.exponent(), sums);
      break;
  }
}

}  // namespace

std::vector<std::int64_t> Word::exponent_sums(std::size_t generator_count) const {
  std::vector<std::int64_t> sums(generator_count, 0);
  accumulate_sums(*this, 1, sums);
  return sums;
}

std::optional<std::pair<std::size_t, std::int64_t>> Word::as_generator_power() const {
  if (kind_ == Kind::generator && exponent_ != 0) return std::pair{index_, exponent_};
  if (kind_ == Kind::power) {
    auto inner = children_.front().as_generator_power();
    if (inner && exponent_ != 0) return std::pair{inner->first, inner->second * exponent_};
  }
  return std::nullopt;
}

std::string Word::to_string(std::span<const std::string> names) const {
  auto gen_name = [&](std::size_t k) {
    return k < names.size() ? names[k] : "x" + std::to_string(k + 1);
  };
  switch (kind_) {
    case Kind::generator:
      return exponent_ == 1 ? gen_name(index_) : gen_name(index_) + "^" + std::to_string(exponent_);
    case Kind::product: {
      if (children_.empty()) return "1";
      std::string out;
      for (std::size_t k = 0; k < children_.size(); ++k) {
        if (k) out += ' ';
        const auto& c = children_[k];
        out += c.kind_ == Kind::product ? "(" + c.to_string(names) + ")" : c.to_string(names);
      }
      return out;
    }
    case Kind::commutator:
      return "[" + children_[0].to_string(names) + "," + children_[1].to_string(names) + "]";
    case Kind::power:
      return "(" + children_[0].to_string(names) + ")^" + std::to_string(exponent_);
  }
  return {};
}

CompiledWord::CompiledWord(const Word& w) {
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const Word& node) -> void {
    switch (node.kind()) {
      case Word::Kind::generator:
        program_.push_back({Op::push_generator, static_cast<std::uint32_t>(node.generator_index()), node.exponent()});
        arity_ = std::max(arity_, node.generator_index() + 1);
        ++depth;
        break;
      case Word::Kind::product:
        if (node.children().empty()) {
          program_.push_back({Op::push_identity, 0, 0});
          ++depth;
          break;
        }
        self(self, node.children().front());
        for (std::size_t k = 1; k < node.children().size(); ++k) {
          self(self, node.children()[k]);
          program_.push_back({Op::multiply, 0, 0});
          --depth;
        }
        break;
      case Word::Kind::commutator:
        self(self, node.children()[0]);
        self(self, node.children()[1]);
        program_.push_back({Op::commutator, 0, 0});
        --depth;
        break;
      case Word::Kind::power:
        self(self, node.children().front());
        program_.push_back({Op::power, 0, node.exponent()});
        break;
    }
    max_depth_ = std::max(max_depth_, depth);
  };
  emit(emit, w);
}

Element CompiledWord::evaluate(const FiniteGroup& g, std::span<const Element> assignment) const {
  // Typical relators nest only a few levels; avoid heap traffic for them.
  Element small[32] = {};
  std::vector<Element> large;
  Element* stack = small;
  if (max_depth_ > 32) {
    large.resize(max_depth_);
    stack = large.data();
  }
  std::size_t top = 0;
  for (const auto& ins : program_) {
    switch (ins.op) {
      case Op::push_generator:
        stack[top++] = ins.exponent == 1 ? assignment[ins.index] : g.pow(assignment[ins.index], ins.exponent);
        break;
      case Op::push_identity:
        stack[top++] = g.identity();
        break;
      case Op::multiply:
        --top;
        stack[top - 1] = g.mul(stack[top - 1], stack[top]);
        break;
      case Op::commutator:
        --top;
        stack[top - 1] = g.commutator(stack[top - 1], stack[top]);
        break;
      case Op::power:
        stack[top - 1] = g.pow(stack[top - 1], ins.exponent);
        break;
    }
  }
  return stack[0];
}

Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g) {
  CompiledWord c(w);
  if (assignment.size() < c.arity()) throw InputError("assignment does not cover every generator of the word");
  for (Element e : assignment)
    if (e >= g.order()) throw InputError("assignment names an element outside the group");
  return c.evaluate(g, assignment);
}

}  // namespace admiss
