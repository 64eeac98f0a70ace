#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bidb/signature.hpp"

namespace bidb {

// Immutable formula AST. The primitive connectives are exactly: timed atoms
// (proposition, sequence precondition, postcondition), do, the timed box,
// negation and conjunction. Diamond / or / implies / true / false are surface
// syntax that expands into these.
class Formula {
 public:
  enum class Kind : std::uint8_t { prop_at, pre_at, post_at, do_at, box, neg, conj };

  Formula() = default;
  bool empty() const { return n_ == nullptr; }

  Kind kind() const { return n_->kind; }
  TimePoint time() const { return n_->time; }
  const std::string& name() const { return n_->name; }
  const std::vector<std::string>& word() const { return n_->word; }
  Formula child() const { return Formula(n_->a); }  // box, neg
  Formula lhs() const { return Formula(n_->a); }    // conj
  Formula rhs() const { return Formula(n_->b); }

  static Formula prop_at(std::string name, TimePoint t);
  static Formula pre_at(std::vector<std::string> word, TimePoint t);
  static Formula post_at(std::string action, TimePoint t);
  static Formula do_at(std::string action, TimePoint t);
  static Formula box(TimePoint t, Formula f);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);

  // Derived forms.
  static Formula diamond(TimePoint t, Formula f);  // !B@t !f
  static Formula disj(Formula a, Formula b);       // !(!a & !b)
  static Formula implies(Formula a, Formula b);    // !(a & !b)
  static Formula top(const Signature& sig);        // !(post(a0)@0 & !post(a0)@0)
  static Formula bottom(const Signature& sig);     // post(a0)@0 & !post(a0)@0

  // Left folds; empty input yields top / bottom.
  static Formula conj_all(const std::vector<Formula>& fs, const Signature& sig);
  static Formula disj_all(const std::vector<Formula>& fs, const Signature& sig);

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::size_t hash() const;

  // Stable identity of the underlying node, usable as a cache key because
  // nodes are immutable.
  const void* id() const { return n_.get(); }

  // Pattern helpers for the renderer and the characteristic-formula decoder.
  bool is_diamond() const;  // neg(box(t, neg(x)))
  bool is_disj() const;     // neg(conj(neg(a), neg(b)))
  bool is_implies() const;  // neg(conj(a, neg(b)))

 private:
  struct Node {
    Kind kind;
    TimePoint time = 0;
    std::string name;
    std::vector<std::string> word;
    std::shared_ptr<const Node> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// True iff f lies in the strong-belief grammar: boolean combinations of
// formulas rooted at box time 0.
bool is_strong_belief(const Formula& f);

// Largest time index constrained by f; pre(w)@t counts as t + |w| and
// do(a)@t as t + 1.
TimePoint max_time(const Formula& f);

// Throws InvariantError when f mentions unknown names or violates the
// horizon bounds of sig.
void validate(const Formula& f, const Signature& sig);

}  // namespace bidb
