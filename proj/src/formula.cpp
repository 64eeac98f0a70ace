#include "bidb/formula.hpp"

#include <functional>

#include "bidb/errors.hpp"

namespace bidb {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::prop_at(std::string name, TimePoint t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::prop_at;
  n->name = std::move(name);
  n->time = t;
  return Formula(std::move(n));
}

Formula Formula::pre_at(std::vector<std::string> word, TimePoint t) {
  if (word.empty()) throw InvariantError("pre() needs a non-empty action sequence");
  auto n = std::make_shared<Node>();
  n->kind = Kind::pre_at;
  n->word = std::move(word);
  n->time = t;
  return Formula(std::move(n));
}

Formula Formula::post_at(std::string action, TimePoint t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::post_at;
  n->name = std::move(action);
  n->time = t;
  return Formula(std::move(n));
}

Formula Formula::do_at(std::string action, TimePoint t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::do_at;
  n->name = std::move(action);
  n->time = t;
  return Formula(std::move(n));
}

Formula Formula::box(TimePoint t, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::box;
  n->time = t;
  n->a = f.n_;
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->a = f.n_;
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->a = a.n_;
  n->b = b.n_;
  return Formula(std::move(n));
}

Formula Formula::diamond(TimePoint t, Formula f) { return neg(box(t, neg(std::move(f)))); }

Formula Formula::disj(Formula a, Formula b) {
  return neg(conj(neg(std::move(a)), neg(std::move(b))));
}

Formula Formula::implies(Formula a, Formula b) {
  return neg(conj(std::move(a), neg(std::move(b))));
}

Formula Formula::bottom(const Signature& sig) {
  Formula p = post_at(sig.acts().front(), 0);
  return conj(p, neg(p));
}

Formula Formula::top(const Signature& sig) { return neg(bottom(sig)); }

Formula Formula::conj_all(const std::vector<Formula>& fs, const Signature& sig) {
  if (fs.empty()) return top(sig);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::disj_all(const std::vector<Formula>& fs, const Signature& sig) {
  if (fs.empty()) return bottom(sig);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

bool Formula::operator==(const Formula& other) const {
  if (n_ == other.n_) return true;
  if (!n_ || !other.n_) return false;
  const Node& x = *n_;
  const Node& y = *other.n_;
  if (x.kind != y.kind || x.time != y.time || x.name != y.name || x.word != y.word) return false;
  if (Formula(x.a) != Formula(y.a)) return false;
  return Formula(x.b) == Formula(y.b);
}

std::size_t Formula::hash() const {
  if (!n_) return 0;
  std::size_t h = static_cast<std::size_t>(n_->kind) * 31 + static_cast<std::size_t>(n_->time);
  h = mix(h, std::hash<std::string>{}(n_->name));
  for (const auto& w : n_->word) h = mix(h, std::hash<std::string>{}(w));
  h = mix(h, Formula(n_->a).hash());
  h = mix(h, Formula(n_->b).hash());
  return h;
}

bool Formula::is_diamond() const {
  return n_ && n_->kind == Kind::neg && n_->a && n_->a->kind == Kind::box && n_->a->a &&
         n_->a->a->kind == Kind::neg;
}

bool Formula::is_disj() const {
  return n_ && n_->kind == Kind::neg && n_->a && n_->a->kind == Kind::conj &&
         n_->a->a->kind == Kind::neg && n_->a->b->kind == Kind::neg;
}

bool Formula::is_implies() const {
  return n_ && n_->kind == Kind::neg && n_->a && n_->a->kind == Kind::conj &&
         n_->a->b->kind == Kind::neg;
}

bool is_strong_belief(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::box:
      return f.time() == 0;
    case Formula::Kind::neg:
      return is_strong_belief(f.child());
    case Formula::Kind::conj:
      return is_strong_belief(f.lhs()) && is_strong_belief(f.rhs());
    default:
      return false;
  }
}

TimePoint max_time(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::prop_at:
    case Formula::Kind::post_at:
      return f.time();
    case Formula::Kind::pre_at:
      return f.time() + static_cast<TimePoint>(f.word().size());
    case Formula::Kind::do_at:
      return f.time() + 1;
    case Formula::Kind::box:
      return std::max(f.time(), max_time(f.child()));
    case Formula::Kind::neg:
      return max_time(f.child());
    case Formula::Kind::conj:
      return std::max(max_time(f.lhs()), max_time(f.rhs()));
  }
  return 0;
}

void validate(const Formula& f, const Signature& sig) {
  const int h = sig.horizon();
  switch (f.kind()) {
    case Formula::Kind::prop_at:
      if (sig.prop_id(f.name()) < 0)
        throw InvariantError("unknown proposition '" + f.name() + "'");
      if (f.time() < 0 || f.time() > h) throw InvariantError("time index out of horizon");
      return;
    case Formula::Kind::post_at:
      if (sig.action_id(f.name()) < 0) throw InvariantError("unknown action '" + f.name() + "'");
      if (f.time() < 0 || f.time() > h) throw InvariantError("time index out of horizon");
      return;
    case Formula::Kind::do_at:
      if (sig.action_id(f.name()) < 0) throw InvariantError("unknown action '" + f.name() + "'");
      if (f.time() < 0 || f.time() >= h) throw InvariantError("do() at or past the horizon");
      return;
    case Formula::Kind::pre_at: {
      for (const auto& a : f.word())
        if (sig.action_id(a) < 0) throw InvariantError("unknown action '" + a + "'");
      if (f.time() < 0 || f.time() > h) throw InvariantError("time index out of horizon");
      if (static_cast<int>(f.word().size()) > h - f.time())
        throw InvariantError("action sequence too long for the remaining horizon");
      return;
    }
    case Formula::Kind::box:
      if (f.time() < 0 || f.time() > h) throw InvariantError("time index out of horizon");
      validate(f.child(), sig);
      return;
    case Formula::Kind::neg:
      validate(f.child(), sig);
      return;
    case Formula::Kind::conj:
      validate(f.lhs(), sig);
      validate(f.rhs(), sig);
      return;
  }
}

}  // namespace bidb
