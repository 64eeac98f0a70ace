#include "bidb/signature.hpp"

#include <algorithm>
#include <set>

#include "bidb/errors.hpp"

namespace bidb {

namespace {

// Interning every pre-word up to the horizon keeps valuations as plain id
// vectors; this caps the signatures we accept.
constexpr std::size_t kMaxInternedAtoms = 65536;

}  // namespace

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "true" && name != "false";
}

Signature::Signature(std::vector<std::string> props, std::vector<std::string> acts, int horizon) {
  auto d = std::make_shared<Data>();
  std::sort(props.begin(), props.end());
  std::sort(acts.begin(), acts.end());
  if (acts.empty()) throw InvariantError("signature needs at least one action");
  if (horizon < 1) throw InvariantError("horizon must be >= 1");
  std::set<std::string> seen;
  for (const auto& p : props) {
    if (!valid_name(p)) throw InvariantError("bad proposition name '" + p + "'");
    if (!seen.insert(p).second) throw InvariantError("duplicate name '" + p + "'");
  }
  for (const auto& a : acts) {
    if (!valid_name(a)) throw InvariantError("bad action name '" + a + "'");
    if (!seen.insert(a).second)
      throw InvariantError("name '" + a + "' used as both proposition and action");
  }
  d->props = std::move(props);
  d->acts = std::move(acts);
  d->horizon = horizon;
  for (int i = 0; i < static_cast<int>(d->props.size()); ++i) d->prop_ids[d->props[i]] = i;
  for (int i = 0; i < static_cast<int>(d->acts.size()); ++i) d->act_ids[d->acts[i]] = i;

  // props, posts, then pre-words by (length, lex over sorted action ids).
  for (int i = 0; i < static_cast<int>(d->props.size()); ++i)
    d->atoms.push_back({AtomKind::prop, i, {}});
  for (int i = 0; i < static_cast<int>(d->acts.size()); ++i)
    d->atoms.push_back({AtomKind::post, i, {}});
  const int nacts = static_cast<int>(d->acts.size());
  std::vector<std::vector<ActionId>> words;
  for (int a = 0; a < nacts; ++a) words.push_back({a});
  for (int len = 1; len <= horizon; ++len) {
    std::vector<std::vector<ActionId>> next;
    for (const auto& w : words) {
      AtomId id = static_cast<AtomId>(d->atoms.size());
      if (d->atoms.size() >= kMaxInternedAtoms)
        throw CapacityError("signature atom universe too large (shrink actions or horizon)");
      d->pre_index[w] = id;
      d->atoms.push_back({AtomKind::pre, -1, w});
      if (len < horizon) {
        for (int a = 0; a < nacts; ++a) {
          auto w2 = w;
          w2.push_back(a);
          next.push_back(std::move(w2));
        }
      }
    }
    words = std::move(next);
  }

  d->atoms_by_depth.resize(horizon + 1);
  for (int depth = 0; depth <= horizon; ++depth) {
    for (AtomId id = 0; id < static_cast<AtomId>(d->atoms.size()); ++id) {
      const auto& a = d->atoms[id];
      if (a.kind == AtomKind::pre && static_cast<int>(a.word.size()) > horizon - depth) continue;
      d->atoms_by_depth[depth].push_back(id);
    }
  }
  d_ = std::move(d);
}

ActionId Signature::action_id(std::string_view name) const {
  auto it = d_->act_ids.find(std::string(name));
  return it == d_->act_ids.end() ? -1 : it->second;
}

PropId Signature::prop_id(std::string_view name) const {
  auto it = d_->prop_ids.find(std::string(name));
  return it == d_->prop_ids.end() ? -1 : it->second;
}

AtomId Signature::pre_atom(const std::vector<ActionId>& word) const {
  auto it = d_->pre_index.find(word);
  return it == d_->pre_index.end() ? -1 : it->second;
}

bool Signature::atom_legal_at_depth(AtomId id, int depth) const {
  const auto& a = d_->atoms[id];
  if (a.kind != AtomKind::pre) return true;
  return static_cast<int>(a.word.size()) <= d_->horizon - depth;
}

std::string Signature::atom_name(AtomId id) const {
  const auto& a = d_->atoms[id];
  switch (a.kind) {
    case AtomKind::prop:
      return d_->props[a.index];
    case AtomKind::post:
      return "post(" + d_->acts[a.index] + ")";
    case AtomKind::pre: {
      std::string s = "pre(";
      for (std::size_t i = 0; i < a.word.size(); ++i) {
        if (i) s += ",";
        s += d_->acts[a.word[i]];
      }
      return s + ")";
    }
  }
  return "?";
}

std::optional<AtomId> Signature::parse_atom(std::string_view text) const {
  auto parse_args = [&](std::string_view inner) -> std::optional<std::vector<ActionId>> {
    std::vector<ActionId> word;
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      std::string_view part =
          comma == std::string_view::npos ? inner.substr(start) : inner.substr(start, comma - start);
      ActionId a = action_id(part);
      if (a < 0) return std::nullopt;
      word.push_back(a);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return word;
  };
  if (text.starts_with("post(") && text.ends_with(")")) {
    ActionId a = action_id(text.substr(5, text.size() - 6));
    if (a < 0) return std::nullopt;
    return post_atom(a);
  }
  if (text.starts_with("pre(") && text.ends_with(")")) {
    auto word = parse_args(text.substr(4, text.size() - 5));
    if (!word || word->empty()) return std::nullopt;
    AtomId id = pre_atom(*word);
    if (id < 0) return std::nullopt;
    return id;
  }
  PropId p = prop_id(text);
  if (p < 0) return std::nullopt;
  return prop_atom(p);
}

bool Signature::operator==(const Signature& other) const {
  if (d_ == other.d_) return true;
  return d_->props == other.d_->props && d_->acts == other.d_->acts &&
         d_->horizon == other.d_->horizon;
}

}  // namespace bidb
